// Copyright 2026 The flicforq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLICFORQ_ERROR_HPP_
#define FLICFORQ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace flicforq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FLICFORQ_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// pauli algebra
FLICFORQ_DEFINE_ERROR(NonCliffordExponent);
FLICFORQ_DEFINE_ERROR(ParseError);
// model
FLICFORQ_DEFINE_ERROR(InvalidParams);
FLICFORQ_DEFINE_ERROR(SchemaError);
// compiler
FLICFORQ_DEFINE_ERROR(AngleOutOfRange);
FLICFORQ_DEFINE_ERROR(OffGridStart);
FLICFORQ_DEFINE_ERROR(NotOneQubitSegment);
// integrator
FLICFORQ_DEFINE_ERROR(StepTooCoarse);
FLICFORQ_DEFINE_ERROR(NoConvergence);
FLICFORQ_DEFINE_ERROR(WrongFrame);
// analysis
FLICFORQ_DEFINE_ERROR(NegativeEigenvalue);
FLICFORQ_DEFINE_ERROR(NotUnitary);

#undef FLICFORQ_DEFINE_ERROR

}  // namespace flicforq

#endif  // FLICFORQ_ERROR_HPP_
