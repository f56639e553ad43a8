// Copyright 2026 The uqcr Authors
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

// uqcr: command-line front end over the C API.
//
// Exit codes: 0 success, 1 input error, 2 solver divergence, 3 t < P < s
// violated (or the state is outside the bounds' constraint).

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uqcr/uqcr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitViolated = 3;

struct Failure {
  int code;
};

void check(uqcr_status s, const std::string& context) {
  if (s == UQCR_OK) return;
  std::fprintf(stderr, "uqcr: %s: %s (%s)\n", context.c_str(), uqcr_last_error(), uqcr_status_name(s));
  throw Failure{s == UQCR_E_SOLVER_DIVERGED ? kExitDiverged : kExitInput};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Observables = std::unique_ptr<uqcr_observables, Deleter<uqcr_observables, uqcr_observables_free>>;
using State = std::unique_ptr<uqcr_state, Deleter<uqcr_state, uqcr_state_free>>;
using Bounds = std::unique_ptr<uqcr_bounds, Deleter<uqcr_bounds, uqcr_bounds_free>>;
using String = std::unique_ptr<char, Deleter<char, uqcr_string_free>>;

Observables load_observables(const std::string& path) {
  uqcr_observables* p = nullptr;
  check(uqcr_observables_load(path.c_str(), &p), path);
  return Observables(p);
}

State load_state(const std::string& path) {
  uqcr_state* p = nullptr;
  check(uqcr_state_load(path.c_str(), &p), path);
  return State(p);
}

Bounds load_bounds(const std::string& path) {
  uqcr_bounds* p = nullptr;
  check(uqcr_bounds_load(path.c_str(), &p), path);
  return Bounds(p);
}

// Temp file plus rename so readers never see a partial file.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
    return;
  }
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "uqcr: cannot write %s\n", tmp.c_str());
    throw Failure{kExitInput};
  }
  const bool ok = std::fwrite(content.data(), 1, content.size(), f) == content.size();
  if (std::fclose(f) != 0 || !ok || std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    std::fprintf(stderr, "uqcr: cannot write %s\n", path.c_str());
    throw Failure{kExitInput};
  }
}

std::uint64_t default_seed() {
  uqcr_solver_config cfg;
  uqcr_solver_config_default(&cfg);
  const char* env = std::getenv("UQCR_SEED");
  if (env == nullptr || *env == '\0') return cfg.seed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') {
    std::fprintf(stderr, "uqcr: UQCR_SEED is not an unsigned integer: %s\n", env);
    throw Failure{kExitInput};
  }
  return v;
}

uqcr_log_base parse_base(const std::string& s) { return s == "nats" ? UQCR_LOG_NATS : UQCR_LOG_BITS; }

struct SolverOptions {
  uqcr_solver_config cfg{};
  std::optional<std::uint64_t> seed;

  void add(CLI::App* cmd) {
    uqcr_solver_config_default(&cfg);
    cmd->add_option("--seed", seed, "RNG seed (default: $UQCR_SEED or built-in)");
    cmd->add_option("--multistarts", cfg.multistarts, "Solver starts per level")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", cfg.max_iter, "Iteration budget per start")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.tol, "Accepted excess over the sampling oracle")->check(CLI::NonNegativeNumber);
    cmd->add_option("--oracle-samples", cfg.oracle_samples, "Random states in the sampling oracle");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  }

  uqcr_solver_config resolve() {
    cfg.seed = seed ? *seed : default_seed();
    return cfg;
  }
};

int run_bounds(const std::string& obs_path, const std::string& constraint, SolverOptions& opts,
               const std::string& out) {
  auto obs = load_observables(obs_path);
  uqcr_constraint_kind kind{};
  double norm = 0.0;
  check(uqcr_constraint_parse(constraint.c_str(), &kind, &norm), "--constraint");
  const auto cfg = opts.resolve();
  uqcr_bounds* raw = nullptr;
  check(uqcr_bounds_compute(obs.get(), kind, norm, &cfg, &raw), "bounds");
  Bounds b(raw);
  char* json = nullptr;
  check(uqcr_bounds_to_json(b.get(), &json), "bounds");
  String text(json);
  write_output(out, text.get());
  return kExitOk;
}

int run_verify(const std::string& obs_path, const std::string& state_path,
               const std::string& bounds_path, const std::string& base, const std::string& out) {
  auto obs = load_observables(obs_path);
  auto state = load_state(state_path);
  auto b = load_bounds(bounds_path);
  char* json = nullptr;
  int holds = 0;
  check(uqcr_verify(obs.get(), state.get(), b.get(), parse_base(base), &json, &holds), "verify");
  String text(json);
  write_output(out, text.get());
  if (!holds) {
    std::fprintf(stderr, "uqcr: verify: sandwich does not hold for %s (see report)\n", state_path.c_str());
    return kExitViolated;
  }
  return kExitOk;
}

int run_lorenz(const std::string& bounds_path, const std::vector<std::string>& state_paths,
               const std::string& csv_path) {
  auto b = load_bounds(bounds_path);
  std::vector<State> states;
  std::vector<const uqcr_state*> raw;
  for (const auto& p : state_paths) {
    states.push_back(load_state(p));
    raw.push_back(states.back().get());
  }
  char* csv = nullptr;
  check(uqcr_lorenz_csv(b.get(), raw.data(), raw.size(), &csv), "lorenz");
  String text(csv);
  write_output(csv_path, text.get());
  return kExitOk;
}

int run_entropy(const std::string& obs_path, const std::string& state_path,
                const std::string& bounds_path, const std::string& base) {
  auto obs = load_observables(obs_path);
  auto state = load_state(state_path);
  auto b = load_bounds(bounds_path);
  char* json = nullptr;
  check(uqcr_entropy(obs.get(), state.get(), b.get(), parse_base(base), &json), "entropy");
  String text(json);
  write_output("", text.get());
  return kExitOk;
}

int run_coherence(const std::string& bases_path, const std::vector<std::string>& state_paths,
                  std::size_t samples, SolverOptions& opts, const std::string& out) {
  auto bases = load_observables(bases_path);
  std::vector<State> states;
  std::vector<const uqcr_state*> raw;
  for (const auto& p : state_paths) {
    states.push_back(load_state(p));
    raw.push_back(states.back().get());
  }
  const auto cfg = opts.resolve();
  char* json = nullptr;
  check(uqcr_coherence(bases.get(), raw.data(), raw.size(), samples, cfg.seed, &cfg, &json), "coherence");
  String text(json);
  write_output(out, text.get());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-independent majorization bounds on measurement statistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(uqcr_version()));

  std::string obs_path, state_path, bounds_path, out, constraint = "all", base = "bits", csv;
  std::vector<std::string> states;
  std::size_t samples = 256;

  auto* bounds = app.add_subcommand("bounds", "Compute the lower bound t and upper bound s");
  bounds->add_option("--observables", obs_path, "Observable file (JSON)")->required()->check(CLI::ExistingFile);
  bounds->add_option("--constraint", constraint, "all | pure | bloch=R");
  bounds->add_option("--out", out, "Output file (default: stdout)");
  SolverOptions bounds_opts;
  bounds_opts.add(bounds);

  auto* verify = app.add_subcommand("verify", "Check t < P < s for one state and report entropies");
  verify->add_option("--observables", obs_path, "Observable file (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--state", state_path, "State file (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--bounds", bounds_path, "Bounds file from `uqcr bounds`")->required()->check(CLI::ExistingFile);
  verify->add_option("--out", out, "Output file (default: stdout)");
  verify->add_option("--log-base", base, "bits | nats")->check(CLI::IsMember({"bits", "nats"}));

  auto* lorenz = app.add_subcommand("lorenz", "Export Lorenz curves of t, s and states as CSV");
  lorenz->add_option("--bounds", bounds_path, "Bounds file")->required()->check(CLI::ExistingFile);
  lorenz->add_option("--state", states, "State file; repeatable")->check(CLI::ExistingFile);
  lorenz->add_option("--csv", csv, "Output CSV (default: stdout)");

  auto* entropy = app.add_subcommand("entropy", "Entropy sum against H(t) and the tightened cap");
  entropy->add_option("--observables", obs_path, "Observable file (JSON)")->required()->check(CLI::ExistingFile);
  entropy->add_option("--state", state_path, "State file (JSON)")->required()->check(CLI::ExistingFile);
  entropy->add_option("--bounds", bounds_path, "Bounds file")->required()->check(CLI::ExistingFile);
  entropy->add_option("--log-base", base, "bits | nats")->check(CLI::IsMember({"bits", "nats"}));

  auto* coh = app.add_subcommand("coherence", "Coherence vectors and their complementarity bounds");
  coh->add_option("--bases", obs_path, "Basis file (observable JSON)")->required()->check(CLI::ExistingFile);
  coh->add_option("--state", states, "State file; repeatable")->check(CLI::ExistingFile);
  coh->add_option("--samples", samples, "Sampled decompositions for mixed states");
  coh->add_option("--out", out, "Output file (default: stdout)");
  SolverOptions coh_opts;
  coh_opts.add(coh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bounds) return run_bounds(obs_path, constraint, bounds_opts, out);
    if (*verify) return run_verify(obs_path, state_path, bounds_path, base, out);
    if (*lorenz) return run_lorenz(bounds_path, states, csv);
    if (*entropy) return run_entropy(obs_path, state_path, bounds_path, base);
    if (*coh) return run_coherence(obs_path, states, samples, coh_opts, out);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitInput;
}
