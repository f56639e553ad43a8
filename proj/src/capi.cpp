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

#include "uqcr/uqcr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "uqcr/coherence.hpp"
#include "uqcr/error.hpp"
#include "uqcr/io.hpp"
#include "uqcr/majorization.hpp"

struct uqcr_observables {
  uqcr::io::ObservableSet set;
};

struct uqcr_state {
  uqcr::quantum::DensityMatrix rho;
};

struct uqcr_bounds {
  uqcr::io::BoundsFile file;
};

namespace {

thread_local std::string g_last_error;

uqcr_status status_of(uqcr::ErrorKind kind) {
  using uqcr::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return UQCR_E_INVALID_ARGUMENT;
    case ErrorKind::NegativeEntry: return UQCR_E_NEGATIVE_ENTRY;
    case ErrorKind::SumMismatch: return UQCR_E_SUM_MISMATCH;
    case ErrorKind::TotalMismatch: return UQCR_E_TOTAL_MISMATCH;
    case ErrorKind::EmptySet: return UQCR_E_EMPTY_SET;
    case ErrorKind::SupportMismatch: return UQCR_E_SUPPORT_MISMATCH;
    case ErrorKind::DimensionMismatch: return UQCR_E_DIMENSION_MISMATCH;
    case ErrorKind::NotRankOne: return UQCR_E_NOT_RANK_ONE;
    case ErrorKind::NotNormalized: return UQCR_E_NOT_NORMALIZED;
    case ErrorKind::BlochNormExceeded: return UQCR_E_BLOCH_NORM_EXCEEDED;
    case ErrorKind::WrongDimension: return UQCR_E_WRONG_DIMENSION;
    case ErrorKind::BadRank: return UQCR_E_BAD_RANK;
    case ErrorKind::UnsupportedDimension: return UQCR_E_UNSUPPORTED_DIMENSION;
    case ErrorKind::LevelOutOfRange: return UQCR_E_LEVEL_OUT_OF_RANGE;
    case ErrorKind::SolverDiverged: return UQCR_E_SOLVER_DIVERGED;
    case ErrorKind::Parse: return UQCR_E_PARSE;
    case ErrorKind::Io: return UQCR_E_IO;
  }
  return UQCR_E_INTERNAL;
}

uqcr_status set_error(uqcr_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
uqcr_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return UQCR_OK;
  } catch (const uqcr::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(UQCR_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(UQCR_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(UQCR_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(UQCR_E_INTERNAL, "unknown error");
  }
}

#define UQCR_REQUIRE(ptr)                                                     \
  do {                                                                        \
    if ((ptr) == nullptr) return set_error(UQCR_E_NULL_POINTER, #ptr " is NULL"); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uqcr::bounds::SolverConfig to_config(const uqcr_solver_config* cfg) {
  uqcr::bounds::SolverConfig c;
  if (cfg != nullptr) {
    c.max_iter = cfg->max_iter;
    c.multistarts = cfg->multistarts;
    c.tol = cfg->tol;
    c.oracle_samples = cfg->oracle_samples;
    c.seed = cfg->seed;
    c.threads = cfg->threads;
  }
  return c;
}

uqcr::majorization::LogBase to_base(uqcr_log_base b) {
  return b == UQCR_LOG_NATS ? uqcr::majorization::LogBase::Nats : uqcr::majorization::LogBase::Bits;
}

uqcr::majorization::ProbVector raw_vector(const double* p, std::size_t len) {
  double total = 0.0;
  for (std::size_t i = 0; i < len; ++i) total += p[i];
  return uqcr::majorization::ProbVector::from_unsorted({p, len}, total);
}

uqcr_status copy_out(const std::vector<double>& v, double* out, size_t capacity) {
  if (capacity < v.size()) {
    return set_error(UQCR_E_BUFFER_TOO_SMALL, "need room for " + std::to_string(v.size()) + " values");
  }
  std::copy(v.begin(), v.end(), out);
  return UQCR_OK;
}

uqcr_status lattice_op(const double* a, size_t a_len, const double* b, size_t b_len, double* out,
                       size_t capacity, bool is_meet) {
  UQCR_REQUIRE(a);
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(out);
  std::vector<double> result;
  const auto s = guarded([&] {
    const auto va = raw_vector(a, a_len);
    const auto vb = raw_vector(b, b_len);
    auto r = is_meet ? uqcr::majorization::meet(va, vb) : uqcr::majorization::join(va, vb);
    result = r.entries();
    result.resize(std::max(a_len, b_len), 0.0);
  });
  return s == UQCR_OK ? copy_out(result, out, capacity) : s;
}

}  // namespace

extern "C" {

const char* uqcr_version(void) { return "1.0.0"; }

const char* uqcr_last_error(void) { return g_last_error.c_str(); }

const char* uqcr_status_name(uqcr_status status) {
  switch (status) {
    case UQCR_OK: return "ok";
    case UQCR_E_NULL_POINTER: return "NullPointer";
    case UQCR_E_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case UQCR_E_INTERNAL: return "Internal";
    default:
      return uqcr::to_string(static_cast<uqcr::ErrorKind>(status - UQCR_E_INVALID_ARGUMENT));
  }
}

void uqcr_string_free(char* s) { std::free(s); }

void uqcr_solver_config_default(uqcr_solver_config* cfg) {
  if (cfg == nullptr) return;
  const uqcr::bounds::SolverConfig c;
  cfg->max_iter = c.max_iter;
  cfg->multistarts = c.multistarts;
  cfg->tol = c.tol;
  cfg->oracle_samples = c.oracle_samples;
  cfg->seed = c.seed;
  cfg->threads = c.threads;
}

uqcr_status uqcr_observables_from_json(const char* json, uqcr_observables** out) {
  UQCR_REQUIRE(json);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = new uqcr_observables{uqcr::io::parse_observables(json)}; });
}

uqcr_status uqcr_observables_load(const char* path, uqcr_observables** out) {
  UQCR_REQUIRE(path);
  UQCR_REQUIRE(out);
  return guarded([&] {
    *out = new uqcr_observables{uqcr::io::parse_observables(uqcr::io::read_file(path))};
  });
}

void uqcr_observables_free(uqcr_observables* obs) { delete obs; }

size_t uqcr_observables_count(const uqcr_observables* obs) {
  return obs == nullptr ? 0 : obs->set.observables.size();
}

int uqcr_observables_dimension(const uqcr_observables* obs) {
  return obs == nullptr ? 0 : obs->set.dimension;
}

uqcr_status uqcr_state_from_json(const char* json, uqcr_state** out) {
  UQCR_REQUIRE(json);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = new uqcr_state{uqcr::io::parse_state(json)}; });
}

uqcr_status uqcr_state_load(const char* path, uqcr_state** out) {
  UQCR_REQUIRE(path);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = new uqcr_state{uqcr::io::parse_state(uqcr::io::read_file(path))}; });
}

uqcr_status uqcr_state_from_density(const double* re_im, int dim, uqcr_state** out) {
  UQCR_REQUIRE(re_im);
  UQCR_REQUIRE(out);
  if (dim < 1) return set_error(UQCR_E_INVALID_ARGUMENT, "dim must be positive");
  return guarded([&] {
    uqcr::quantum::Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const std::size_t k = 2 * (static_cast<std::size_t>(r) * dim + c);
        m(r, c) = {re_im[k], re_im[k + 1]};
      }
    }
    *out = new uqcr_state{uqcr::quantum::DensityMatrix::from_matrix(m)};
  });
}

void uqcr_state_free(uqcr_state* state) { delete state; }

int uqcr_state_dimension(const uqcr_state* state) { return state == nullptr ? 0 : state->rho.dim(); }

uqcr_status uqcr_constraint_parse(const char* text, uqcr_constraint_kind* kind, double* bloch_norm) {
  UQCR_REQUIRE(text);
  UQCR_REQUIRE(kind);
  UQCR_REQUIRE(bloch_norm);
  return guarded([&] {
    const auto c = uqcr::io::parse_constraint(text);
    *kind = static_cast<uqcr_constraint_kind>(c.kind);
    *bloch_norm = c.bloch_norm;
  });
}

uqcr_status uqcr_bounds_compute(const uqcr_observables* obs, uqcr_constraint_kind kind,
                                double bloch_norm, const uqcr_solver_config* cfg,
                                uqcr_bounds** out) {
  UQCR_REQUIRE(obs);
  UQCR_REQUIRE(out);
  using uqcr::bounds::StateConstraint;
  StateConstraint c;
  switch (kind) {
    case UQCR_CONSTRAINT_ALL_STATES: c = StateConstraint::all_states(); break;
    case UQCR_CONSTRAINT_PURE_ONLY: c = StateConstraint::pure_only(); break;
    case UQCR_CONSTRAINT_FIXED_BLOCH_NORM: c = StateConstraint::fixed_bloch_norm(bloch_norm); break;
    default: return set_error(UQCR_E_INVALID_ARGUMENT, "unknown constraint kind");
  }
  return guarded([&] {
    *out = new uqcr_bounds{uqcr::io::compute_bounds(obs->set, c, to_config(cfg))};
  });
}

uqcr_status uqcr_bounds_from_json(const char* json, uqcr_bounds** out) {
  UQCR_REQUIRE(json);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = new uqcr_bounds{uqcr::io::parse_bounds(json)}; });
}

uqcr_status uqcr_bounds_load(const char* path, uqcr_bounds** out) {
  UQCR_REQUIRE(path);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = new uqcr_bounds{uqcr::io::parse_bounds(uqcr::io::read_file(path))}; });
}

uqcr_status uqcr_bounds_to_json(const uqcr_bounds* b, char** out) {
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(out);
  return guarded([&] { *out = copy_string(uqcr::io::bounds_to_json(b->file)); });
}

void uqcr_bounds_free(uqcr_bounds* b) { delete b; }

size_t uqcr_bounds_length(const uqcr_bounds* b) { return b == nullptr ? 0 : b->file.t.vector.size(); }

uqcr_status uqcr_bounds_t(const uqcr_bounds* b, double* out, size_t capacity) {
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(out);
  return copy_out(b->file.t.vector.entries(), out, capacity);
}

uqcr_status uqcr_bounds_s(const uqcr_bounds* b, double* out, size_t capacity) {
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(out);
  return copy_out(b->file.s.vector.entries(), out, capacity);
}

uqcr_status uqcr_verify(const uqcr_observables* obs, const uqcr_state* state, const uqcr_bounds* b,
                        uqcr_log_base base, char** report_json, int* holds) {
  UQCR_REQUIRE(obs);
  UQCR_REQUIRE(state);
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(report_json);
  UQCR_REQUIRE(holds);
  return guarded([&] {
    const auto v = uqcr::io::verify(b->file, obs->set, state->rho, to_base(base));
    *report_json = copy_string(uqcr::io::report_to_json(v));
    *holds = v.holds() ? 1 : 0;
  });
}

uqcr_status uqcr_entropy(const uqcr_observables* obs, const uqcr_state* state, const uqcr_bounds* b,
                         uqcr_log_base base, char** json) {
  UQCR_REQUIRE(obs);
  UQCR_REQUIRE(state);
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(json);
  return guarded([&] {
    const auto v = uqcr::io::verify(b->file, obs->set, state->rho, to_base(base));
    *json = copy_string(uqcr::io::entropy_to_json(v.report));
  });
}

uqcr_status uqcr_lorenz_csv(const uqcr_bounds* b, const uqcr_state* const* states, size_t count,
                            char** csv) {
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(csv);
  if (count > 0) UQCR_REQUIRE(states);
  return guarded([&] {
    std::vector<uqcr::quantum::DensityMatrix> rhos;
    for (size_t i = 0; i < count; ++i) {
      if (states[i] == nullptr) throw uqcr::Error(uqcr::ErrorKind::InvalidArgument, "states[" + std::to_string(i) + "] is NULL");
      rhos.push_back(states[i]->rho);
    }
    *csv = copy_string(uqcr::io::lorenz_csv(b->file, rhos));
  });
}

uqcr_status uqcr_coherence(const uqcr_observables* bases, const uqcr_state* const* states,
                           size_t count, size_t samples, uint64_t seed,
                           const uqcr_solver_config* cfg, char** json) {
  UQCR_REQUIRE(bases);
  UQCR_REQUIRE(json);
  if (count > 0) UQCR_REQUIRE(states);
  return guarded([&] {
    const auto cb = uqcr::coherence::coherence_complementarity_bounds(bases->set.observables, to_config(cfg));
    std::vector<std::vector<uqcr::coherence::CoherenceVector>> per_state;
    for (size_t i = 0; i < count; ++i) {
      if (states[i] == nullptr) throw uqcr::Error(uqcr::ErrorKind::InvalidArgument, "states[" + std::to_string(i) + "] is NULL");
      std::vector<uqcr::coherence::CoherenceVector> vectors;
      for (const auto& basis : bases->set.observables) {
        vectors.push_back(uqcr::coherence::coherence_vector_mixed_approx(states[i]->rho, basis, {samples, seed}));
      }
      per_state.push_back(std::move(vectors));
    }
    *json = copy_string(uqcr::io::coherence_to_json(cb, per_state));
  });
}

uqcr_status uqcr_is_majorized_by(const double* a, size_t a_len, const double* b, size_t b_len,
                                 int* result) {
  UQCR_REQUIRE(a);
  UQCR_REQUIRE(b);
  UQCR_REQUIRE(result);
  return guarded([&] {
    *result = uqcr::majorization::is_majorized_by(raw_vector(a, a_len), raw_vector(b, b_len)) ? 1 : 0;
  });
}

uqcr_status uqcr_meet(const double* a, size_t a_len, const double* b, size_t b_len, double* out,
                      size_t capacity) {
  return lattice_op(a, a_len, b, b_len, out, capacity, true);
}

uqcr_status uqcr_join(const double* a, size_t a_len, const double* b, size_t b_len, double* out,
                      size_t capacity) {
  return lattice_op(a, a_len, b, b_len, out, capacity, false);
}

uqcr_status uqcr_shannon_entropy(const double* p, size_t len, uqcr_log_base base, double* result) {
  UQCR_REQUIRE(p);
  UQCR_REQUIRE(result);
  return guarded([&] { *result = uqcr::majorization::shannon_entropy({p, len}, to_base(base)); });
}

}  // extern "C"
