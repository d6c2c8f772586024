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

// flicforq: compile, simulate and score FLICFORQ pulse sequences.
//
// Exit codes: 0 ok, 2 schema or parse error, 3 validation violation,
// 4 integrator or output failure, 5 fidelity below --min.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "flicforq/analysis.hpp"
#include "flicforq/compiler.hpp"
#include "flicforq/error.hpp"
#include "flicforq/integrator.hpp"
#include "flicforq/io.hpp"

namespace {

using namespace flicforq;

constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIntegrator = 4;
constexpr int kExitBelowMin = 5;

struct ExitError {
  int code;
  std::string message;
};

int exit_code_for(const Error& e) {
  if (dynamic_cast<const SchemaError*>(&e) || dynamic_cast<const ParseError*>(&e))
    return kExitSchema;
  if (dynamic_cast<const InvalidParams*>(&e) || dynamic_cast<const OffGridStart*>(&e) ||
      dynamic_cast<const AngleOutOfRange*>(&e) || dynamic_cast<const NotOneQubitSegment*>(&e))
    return kExitValidation;
  return kExitIntegrator;
}

SystemParams load_params(const std::string& path) {
  return path.empty() ? SystemParams{} : params_from_json(read_json_file(path));
}

// A sequence file carries its own parameters; --params overrides them.
std::pair<SystemParams, PulseSequence> load_sequence(const std::string& path,
                                                     const std::string& params_path) {
  const json j = read_json_file(path);
  SystemParams p = params_path.empty() ? params_from_json(j) : load_params(params_path);
  return {p, sequence_from_json(j)};
}

void check_sequence(const SystemParams& p, const PulseSequence& seq) {
  const auto diags = validate_sequence(p, seq);
  for (const auto& d : diags)
    std::cerr << (d.is_violation ? "violation: " : "warning: ") << d.message << '\n';
  if (has_violations(diags)) throw ExitError{kExitValidation, "sequence has violations"};
}

StepPolicy policy_from(int steps_per_period) {
  StepPolicy policy;
  policy.steps_per_period = steps_per_period;
  return policy;
}

json vec_json(const Vector3d& v) { return {v[0], v[1], v[2]}; }

json state_json(const DensityState& rho, double t, Frame frame) {
  std::vector<double> c(rho.c.data(), rho.c.data() + 15);
  json j = {{"t", t},
            {"frame", frame == Frame::kLab ? "lab" : "rotating"},
            {"c", c},
            {"bloch1", vec_json(reduced_bloch(rho, 1))},
            {"bloch2", vec_json(reduced_bloch(rho, 2))},
            {"purity", rho.purity()}};
  j["concurrence"] = concurrence(rho);
  return j;
}

// Per-point sweep metrics.
double cnot_error(const SystemParams& p, const StepPolicy& policy) {
  const auto seq = compile_cnot(p);
  return 1.0 - gate_fidelity(rotating_frame_unitary(p, seq, policy), *seq.target, true).process;
}

double one_qubit_error(const SystemParams& p, const StepPolicy& policy) {
  return one_qubit_error_budget(p, false, policy).simulated_error;
}

double d_concurrence(const SystemParams& p, const StepPolicy& policy) {
  return concurrence(evolve(p, compile_D(p, 0.0), DensityState::basis(0, 0), policy).final_state());
}

std::vector<std::pair<double, double>> read_grid(const std::string& path) {
  const json j = read_json_file(path);
  const json& pts = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!pts.is_array()) throw SchemaError("grid must be an array or {\"points\": [...]}");
  std::vector<std::pair<double, double>> out;
  for (const auto& pt : pts) {
    if (pt.is_array() && pt.size() == 2 && pt[0].is_number() && pt[1].is_number())
      out.emplace_back(pt[0].get<double>(), pt[1].get<double>());
    else if (pt.is_object() && pt.contains("delta") && pt.contains("wxx") &&
             pt.at("delta").is_number() && pt.at("wxx").is_number())
      out.emplace_back(pt.at("delta").get<double>(), pt.at("wxx").get<double>());
    else
      throw SchemaError("grid points are [delta, wxx] or {\"delta\":..,\"wxx\":..}");
  }
  return out;
}

std::string fmt12(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FLICFORQ two-qubit pulse simulator and gate compiler"};
  app.require_subcommand(1);

  std::string params_path;
  int steps_per_period = 200;

  // compile
  auto* compile = app.add_subcommand("compile", "Compile a gate to a pulse sequence (JSON)");
  std::string gate;
  int qubit = 1;
  int flip_qubit = 2;
  compile->add_option("gate", gate, "d, xx_half, cnot, x90 or y90")
      ->required()
      ->check(CLI::IsMember({"d", "xx_half", "cnot", "x90", "y90"}));
  compile->add_option("--params", params_path, "System parameters JSON");
  compile->add_option("--qubit", qubit, "Target qubit for x90/y90")->check(CLI::Range(1, 2));
  compile->add_option("--flip-qubit", flip_qubit, "Refocused qubit for xx_half/cnot")
      ->check(CLI::Range(1, 2));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Integrate a sequence from an initial state");
  std::string seq_path, state_spec = "00", frame_name = "rotating", out_path;
  bool full = false;
  simulate->add_option("sequence", seq_path, "Sequence JSON")->required();
  simulate->add_option("--state", state_spec, "00..11, bloch:x1,y1,z1;x2,y2,z2 or raw:c1..c15");
  simulate->add_option("--frame", frame_name, "lab or rotating")
      ->check(CLI::IsMember({"lab", "rotating"}));
  simulate->add_option("--out", out_path, "Trajectory CSV");
  simulate->add_flag("--full", full, "Include the nine two-qubit correlators");
  simulate->add_option("--params", params_path, "Override the sequence's parameters");
  simulate->add_option("--steps-per-period", steps_per_period)->check(CLI::PositiveNumber);

  // fidelity
  auto* fidelity = app.add_subcommand("fidelity", "Score a sequence against a rotation word");
  std::string target_text;
  std::optional<double> min_fidelity;
  bool no_align = false;
  fidelity->add_option("sequence", seq_path, "Sequence JSON")->required();
  fidelity->add_option("target", target_text, "Rotation word; defaults to the sequence target");
  fidelity->add_option("--min", min_fidelity, "Exit 5 when the process fidelity is lower");
  fidelity->add_flag("--no-align", no_align, "Skip local-z alignment");
  fidelity->add_option("--params", params_path, "Override the sequence's parameters");
  fidelity->add_option("--steps-per-period", steps_per_period)->check(CLI::PositiveNumber);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a metric over a (delta, wxx) grid");
  std::string grid_path, metric;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("grid", grid_path, "Grid JSON")->required();
  sweep->add_option("--metric", metric)
      ->required()
      ->check(CLI::IsMember({"cnot_error", "one_qubit_error", "d_concurrence"}));
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "CSV file instead of stdout");
  sweep->add_option("--steps-per-period", steps_per_period)->check(CLI::PositiveNumber);

  // resonance
  auto* resonance = app.add_subcommand("resonance", "Dressed-state sideband check");
  std::vector<double> amps;
  resonance->add_option("--params", params_path, "System parameters JSON");
  resonance->add_option("--amps", amps, "amp_y1,amp_y2 (default delta/2 each)")
      ->delimiter(',')
      ->expected(2);

  // budget
  auto* budget = app.add_subcommand("budget", "One-qubit gate error budget");
  bool echo = false;
  budget->add_option("--params", params_path, "System parameters JSON");
  budget->add_flag("--echo", echo, "Insert the y-axis decoupling echo");
  budget->add_option("--steps-per-period", steps_per_period)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSchema;
  }

  try {
    std::cout.precision(17);
    if (*compile) {
      const SystemParams p = load_params(params_path);
      const ChannelCalibration cal;
      PulseSequence seq;
      if (gate == "d") seq = compile_D(p, 0.0);
      else if (gate == "xx_half") seq = compile_xx_half(p, 0.0, flip_qubit);
      else if (gate == "cnot") seq = compile_cnot(p, cal, flip_qubit);
      else seq = compile_single(p, qubit, gate == "x90" ? Axis::kX : Axis::kY, kPi / 2, cal);
      check_sequence(p, seq);
      std::cout << to_json(p, seq).dump(2) << '\n';
    } else if (*simulate) {
      const auto [p, seq] = load_sequence(seq_path, params_path);
      check_sequence(p, seq);
      const DensityState rho0 = parse_initial_state(state_spec);
      Trajectory traj = evolve(p, seq, rho0, policy_from(steps_per_period));
      if (frame_name == "rotating") traj = apply_virtual_z(to_rotating_frame(traj, p), seq);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ExitError{kExitIntegrator, "cannot write " + out_path};
        write_trajectory_csv(out, traj, full);
        if (!out) throw ExitError{kExitIntegrator, "write failed for " + out_path};
      }
      std::cout << state_json(traj.final_state(), traj.times.back(), traj.frame).dump(2) << '\n';
    } else if (*fidelity) {
      const auto [p, seq] = load_sequence(seq_path, params_path);
      check_sequence(p, seq);
      RotationWord target;
      if (!target_text.empty()) target = parse_word(target_text);
      else if (seq.target) target = *seq.target;
      else throw ExitError{kExitSchema, "no target word given and the sequence has none"};
      const Mat4cd u = rotating_frame_unitary(p, seq, policy_from(steps_per_period));
      const FidelityReport r = gate_fidelity(u, target, !no_align);
      std::cout << to_json(r).dump(2) << '\n';
      if (min_fidelity && r.process < *min_fidelity) {
        std::cerr << "process fidelity " << r.process << " below " << *min_fidelity << '\n';
        return kExitBelowMin;
      }
    } else if (*sweep) {
      const auto grid = read_grid(grid_path);
      const StepPolicy policy = policy_from(steps_per_period);
      auto eval = metric == "cnot_error" ? cnot_error
                  : metric == "one_qubit_error" ? one_qubit_error
                                                : d_concurrence;
      std::vector<double> values(grid.size(), std::numeric_limits<double>::quiet_NaN());
      std::vector<std::string> failures(grid.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          try {
            values[i] = eval(SystemParams::symmetric(grid[i].first, grid[i].second), policy);
          } catch (const std::exception& e) {
            failures[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(jobs, std::max<std::size_t>(1, grid.size()));
      for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ExitError{kExitIntegrator, "cannot write " + out_path};
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      out << "delta,wxx," << metric << '\n';
      bool failed = false;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << fmt12(grid[i].first) << ',' << fmt12(grid[i].second) << ',' << fmt12(values[i])
            << '\n';
        if (!failures[i].empty()) {
          std::cerr << "point " << i << ": " << failures[i] << '\n';
          failed = true;
        }
      }
      if (failed) return kExitIntegrator;
    } else if (*resonance) {
      const SystemParams p = load_params(params_path);
      const double a1 = amps.empty() ? 0.5 * p.delta() : amps[0];
      const double a2 = amps.empty() ? 0.5 * p.delta() : amps[1];
      std::cout << to_json(sideband_check(p, a1, a2)).dump(2) << '\n';
    } else if (*budget) {
      const SystemParams p = load_params(params_path);
      std::cout << to_json(one_qubit_error_budget(p, echo, policy_from(steps_per_period))).dump(2)
                << '\n';
    }
  } catch (const ExitError& e) {
    std::cerr << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitSchema;
  }
  return 0;
}
