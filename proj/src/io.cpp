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

#include "uqcr/io.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uqcr/error.hpp"

namespace uqcr::io {
namespace {

using nlohmann::json;
using quantum::Complex;
using quantum::Ket;
using quantum::Matrix;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Parse, path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double parse_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Complex parse_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected a number or an [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Ket parse_ket(const json& j, const std::string& path, Eigen::Index len) {
  if (!j.is_array()) fail(path, "expected a list of complex numbers");
  if (len >= 0 && static_cast<Eigen::Index>(j.size()) != len) {
    fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  }
  Ket v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], index_path(path, i));
  return v;
}

Matrix parse_matrix(const json& j, const std::string& path, Eigen::Index n) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty list of rows");
  if (n < 0) n = static_cast<Eigen::Index>(j.size());
  if (static_cast<Eigen::Index>(j.size()) != n) {
    fail(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  }
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto rp = index_path(path, static_cast<std::size_t>(r));
    m.row(r) = parse_ket(j[static_cast<std::size_t>(r)], rp, n).transpose();
  }
  return m;
}

quantum::Vec3 parse_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected a 3-vector");
  return {parse_number(j[0], index_path(path, 0)), parse_number(j[1], index_path(path, 1)),
          parse_number(j[2], index_path(path, 2))};
}

std::vector<double> parse_reals(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_number(j[i], index_path(path, i)));
  return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json reals_json(const std::vector<double>& v) { return json(v); }

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

// Re-raise validation errors from the quantum layer with the field path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

ObservableSet observables_from(const json& root, const std::string& base) {
  if (!root.is_object()) fail(base.empty() ? "<root>" : base, "expected an object");
  ObservableSet set;
  const auto dim_path = join_path(base, "dimension");
  const json& dim = field(root, "dimension", base);
  if (!dim.is_number_integer() || dim.get<long long>() < 1) fail(dim_path, "expected a positive integer");
  set.dimension = dim.get<int>();
  const auto list_path = join_path(base, "observables");
  const json& list = field(root, "observables", base);
  if (!list.is_array() || list.empty()) fail(list_path, "expected a non-empty list");

  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto path = index_path(list_path, i);
    const json& entry = list[i];
    if (!entry.is_object()) fail(path, "expected an object");
    std::string name = "obs" + std::to_string(i);
    if (const auto it = entry.find("name"); it != entry.end()) {
      if (!it->is_string()) fail(join_path(path, "name"), "expected a string");
      name = it->get<std::string>();
    }
    int kinds = 0;
    for (const char* k : {"basis", "projectors", "bloch_axis", "preset"}) kinds += entry.contains(k) ? 1 : 0;
    if (kinds != 1) fail(path, "needs exactly one of basis, projectors, bloch_axis, preset");
    const Eigen::Index n = set.dimension;

    if (entry.contains("basis")) {
      const auto p = join_path(path, "basis");
      const json& b = entry["basis"];
      if (!b.is_array()) fail(p, "expected a list of vectors");
      std::vector<Ket> vecs;
      for (std::size_t k = 0; k < b.size(); ++k) vecs.push_back(parse_ket(b[k], index_path(p, k), n));
      set.observables.push_back(at_path(p, [&] { return quantum::ProjectiveObservable::from_basis(name, vecs); }));
    } else if (entry.contains("projectors")) {
      const auto p = join_path(path, "projectors");
      const json& b = entry["projectors"];
      if (!b.is_array() || b.empty()) fail(p, "expected a non-empty list of matrices");
      std::vector<Matrix> ps;
      for (std::size_t k = 0; k < b.size(); ++k) ps.push_back(parse_matrix(b[k], index_path(p, k), n));
      set.observables.push_back(at_path(p, [&] { return quantum::ProjectiveObservable::from_projectors(name, ps); }));
    } else if (entry.contains("bloch_axis")) {
      const auto p = join_path(path, "bloch_axis");
      if (n != 2) fail(p, "only valid in dimension 2");
      const auto axis = parse_vec3(entry["bloch_axis"], p);
      if (axis.norm() == 0.0) fail(p, "axis must be nonzero");
      set.observables.push_back(quantum::ProjectiveObservable::from_bloch_axis(name, axis));
    } else {
      const auto p = join_path(path, "preset");
      const json& pre = entry["preset"];
      if (!pre.is_string()) fail(p, "expected a string");
      const auto which = pre.get<std::string>();
      if (which == "mub_set") {
        auto mubs = at_path(p, [&] { return quantum::standard_mub_set(set.dimension); });
        for (const auto& m : mubs) {
          set.observables.push_back(quantum::ProjectiveObservable::from_projectors(name + "." + m.name(), m.projectors()));
        }
        continue;
      }
      if (which != "pauli_x" && which != "pauli_y" && which != "pauli_z") {
        fail(p, "unknown preset '" + which + "' (pauli_x, pauli_y, pauli_z, mub_set)");
      }
      if (n != 2) fail(p, "'" + which + "' is only valid in dimension 2");
      const quantum::Vec3 axis = which == "pauli_x"   ? quantum::Vec3::UnitX()
                                 : which == "pauli_y" ? quantum::Vec3::UnitY()
                                                      : quantum::Vec3::UnitZ();
      set.observables.push_back(quantum::ProjectiveObservable::from_bloch_axis(name, axis));
    }
  }
  return set;
}

json observables_json(const ObservableSet& set) {
  json list = json::array();
  for (const auto& obs : set.observables) {
    json ps = json::array();
    for (const auto& p : obs.projectors()) ps.push_back(matrix_json(p));
    list.push_back({{"name", obs.name()}, {"projectors", std::move(ps)}});
  }
  return {{"dimension", set.dimension}, {"observables", std::move(list)}};
}

const char* kind_name(bounds::BoundKind k) { return k == bounds::BoundKind::Min ? "min" : "max"; }

json certificate_json(const bounds::BoundCertificate& c, const char* which) {
  json d = {{"iterations", c.diagnostics.iterations},
            {"multistart_index", c.diagnostics.multistart_index},
            {"residual", c.diagnostics.residual},
            {"dual_gap", optional_json(c.diagnostics.dual_gap)}};
  return {{"bound", which},
          {"level", c.level},
          {"kind", kind_name(c.kind)},
          {"value", c.value},
          {"state", matrix_json(c.state.matrix())},
          {"choice", c.choice.subsets},
          {"diagnostics", std::move(d)}};
}

bounds::BoundCertificate certificate_from(const json& j, const std::string& path,
                                          const ObservableSet& set) {
  if (!j.is_object()) fail(path, "expected an object");
  bounds::BoundCertificate c;
  const json& level = field(j, "level", path);
  if (!level.is_number_unsigned()) fail(join_path(path, "level"), "expected a non-negative integer");
  c.level = level.get<std::size_t>();
  const json& kind = field(j, "kind", path);
  if (kind == "min") {
    c.kind = bounds::BoundKind::Min;
  } else if (kind == "max") {
    c.kind = bounds::BoundKind::Max;
  } else {
    fail(join_path(path, "kind"), "expected \"min\" or \"max\"");
  }
  c.value = parse_number(field(j, "value", path), join_path(path, "value"));
  const auto sp = join_path(path, "state");
  const Matrix rho = parse_matrix(field(j, "state", path), sp, set.dimension);
  c.state = at_path(sp, [&] { return quantum::DensityMatrix::from_matrix(rho, 1e-8); });

  const auto cp = join_path(path, "choice");
  const json& choice = field(j, "choice", path);
  if (!choice.is_array() || choice.size() != set.observables.size()) {
    fail(cp, "expected one index list per observable");
  }
  c.choice.level = c.level;
  c.choice.op = Matrix::Zero(set.dimension, set.dimension);
  for (std::size_t a = 0; a < choice.size(); ++a) {
    const auto ap = index_path(cp, a);
    if (!choice[a].is_array()) fail(ap, "expected a list of outcome indices");
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < choice[a].size(); ++k) {
      const json& idx = choice[a][k];
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= set.observables[a].outcome_count()) {
        fail(index_path(ap, k), "outcome index out of range");
      }
      subset.push_back(idx.get<std::size_t>());
      c.choice.op += set.observables[a].projectors()[subset.back()];
    }
    c.choice.subsets.push_back(std::move(subset));
  }

  const auto dp = join_path(path, "diagnostics");
  const json& d = field(j, "diagnostics", path);
  if (!d.is_object()) fail(dp, "expected an object");
  c.diagnostics.iterations = field(d, "iterations", dp).get<int>();
  c.diagnostics.multistart_index = field(d, "multistart_index", dp).get<int>();
  c.diagnostics.residual = parse_number(field(d, "residual", dp), join_path(dp, "residual"));
  if (const json& g = field(d, "dual_gap", dp); !g.is_null()) {
    c.diagnostics.dual_gap = parse_number(g, join_path(dp, "dual_gap"));
  }
  return c;
}

void check_same_observables(const ObservableSet& a, const ObservableSet& b) {
  bool same = a.dimension == b.dimension && a.observables.size() == b.observables.size();
  for (std::size_t i = 0; same && i < a.observables.size(); ++i) {
    const auto& pa = a.observables[i].projectors();
    const auto& pb = b.observables[i].projectors();
    same = pa.size() == pb.size();
    for (std::size_t k = 0; same && k < pa.size(); ++k) same = (pa[k] - pb[k]).cwiseAbs().maxCoeff() <= 1e-9;
  }
  if (!same) {
    throw Error(ErrorKind::InvalidArgument,
                "the bounds file was computed for different observables");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json log_base_json(majorization::LogBase b) {
  return b == majorization::LogBase::Bits ? "bits" : "nats";
}

}  // namespace

ObservableSet parse_observables(std::string_view text) { return observables_from(parse_json(text), ""); }

std::string observables_to_json(const ObservableSet& set) { return dump(observables_json(set)); }

quantum::DensityMatrix parse_state(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) fail("<root>", "expected an object");
  int kinds = 0;
  for (const char* k : {"density", "ket", "bloch"}) kinds += root.contains(k) ? 1 : 0;
  if (kinds != 1) fail("<root>", "needs exactly one of density, ket, bloch");

  if (root.contains("density")) {
    const Matrix m = parse_matrix(root["density"], "density", -1);
    return at_path("density", [&] { return quantum::DensityMatrix::from_matrix(m); });
  }
  if (root.contains("ket")) {
    Ket psi = parse_ket(root["ket"], "ket", -1);
    if (psi.size() == 0 || psi.norm() == 0.0) fail("ket", "must be a nonzero vector");
    psi.normalize();
    return quantum::DensityMatrix::from_ket(psi);
  }
  quantum::Vec3 r = parse_vec3(root["bloch"], "bloch");
  if (const auto it = root.find("norm"); it != root.end()) {
    const double norm = parse_number(*it, "norm");
    if (norm < 0.0 || norm > 1.0) fail("norm", "must lie in [0, 1]");
    if (r.norm() == 0.0) fail("bloch", "direction must be nonzero when norm is given");
    r = norm * r.normalized();
  }
  return at_path("bloch", [&] { return quantum::bloch_to_density(r); });
}

bounds::StateConstraint parse_constraint(std::string_view text) {
  if (text == "all") return bounds::StateConstraint::all_states();
  if (text == "pure") return bounds::StateConstraint::pure_only();
  constexpr std::string_view prefix = "bloch=";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto num = text.substr(prefix.size());
    double r = 0.0;
    const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
    if (ec == std::errc() && end == num.data() + num.size() && r >= 0.0 && r <= 1.0) {
      return bounds::StateConstraint::fixed_bloch_norm(r);
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "constraint: expected all, pure or bloch=R with 0 <= R <= 1, got '" +
                  std::string(text) + "'");
}

std::string constraint_to_string(const bounds::StateConstraint& c) {
  switch (c.kind) {
    case bounds::StateConstraint::Kind::AllStates:
      return "all";
    case bounds::StateConstraint::Kind::PureOnly:
      return "pure";
    case bounds::StateConstraint::Kind::FixedBlochNorm:
      break;
  }
  // Shortest representation that reads back to the same double.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, c.bloch_norm);
  return "bloch=" + std::string(buf, res.ptr);
}

BoundsFile compute_bounds(ObservableSet observables, const bounds::StateConstraint& constraint,
                          const bounds::SolverConfig& config) {
  auto t = bounds::infimum_t(observables.observables, constraint, config);
  auto s = bounds::supremum_s(observables.observables, constraint);
  return {std::move(observables), constraint, config, std::move(t), std::move(s)};
}

std::string bounds_to_json(const BoundsFile& b) {
  json certs = json::array();
  for (const auto& c : b.t.certificates) certs.push_back(certificate_json(c, "t"));
  for (const auto& c : b.s.certificates) certs.push_back(certificate_json(c, "s"));
  json root = observables_json(b.observables);
  root["constraint"] = constraint_to_string(b.constraint);
  // threads is left out on purpose: it never changes the result.
  root["solver_config"] = {{"max_iter", b.config.max_iter},
                           {"multistarts", b.config.multistarts},
                           {"tol", b.config.tol},
                           {"oracle_samples", b.config.oracle_samples},
                           {"seed", b.config.seed}};
  root["total"] = b.t.vector.total();
  root["t"] = reals_json(b.t.vector.entries());
  root["s"] = reals_json(b.s.vector.entries());
  root["certificates"] = std::move(certs);
  return dump(root);
}

BoundsFile parse_bounds(std::string_view text) {
  const json root = parse_json(text);
  ObservableSet set = observables_from(root, "");
  const json& c = field(root, "constraint", "");
  if (!c.is_string()) fail("constraint", "expected a string");
  const auto constraint = at_path("constraint", [&] { return parse_constraint(c.get<std::string>()); });

  bounds::SolverConfig config;
  const json& cfg = field(root, "solver_config", "");
  if (!cfg.is_object()) fail("solver_config", "expected an object");
  const auto integer = [&](const char* key) {
    const json& v = field(cfg, key, "solver_config");
    if (!v.is_number_integer()) fail(join_path("solver_config", key), "expected an integer");
    return v;
  };
  config.max_iter = integer("max_iter").get<int>();
  config.multistarts = integer("multistarts").get<int>();
  config.tol = parse_number(field(cfg, "tol", "solver_config"), "solver_config.tol");
  config.oracle_samples = integer("oracle_samples").get<std::size_t>();
  config.seed = integer("seed").get<std::uint64_t>();

  const double total = parse_number(field(root, "total", ""), "total");
  if (total != static_cast<double>(set.observables.size())) {
    fail("total", "does not match the number of observables");
  }
  const auto t = parse_reals(field(root, "t", ""), "t");
  const auto s = parse_reals(field(root, "s", ""), "s");
  bounds::BoundResult tr{at_path("t", [&] { return majorization::ProbVector::from_sorted(t, total); }), {}};
  bounds::BoundResult sr{at_path("s", [&] { return majorization::ProbVector::from_sorted(s, total); }), {}};

  const json& certs = field(root, "certificates", "");
  if (!certs.is_array()) fail("certificates", "expected a list");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto path = index_path("certificates", i);
    auto cert = certificate_from(certs[i], path, set);
    const json& which = field(certs[i], "bound", path);
    if (which == "t") {
      tr.certificates.push_back(std::move(cert));
    } else if (which == "s") {
      sr.certificates.push_back(std::move(cert));
    } else {
      fail(join_path(path, "bound"), "expected \"t\" or \"s\"");
    }
  }
  return {std::move(set), constraint, config, std::move(tr), std::move(sr)};
}

VerifyResult verify(const BoundsFile& b, const ObservableSet& observables,
                    const quantum::DensityMatrix& rho, majorization::LogBase base) {
  check_same_observables(b.observables, observables);
  auto report = certainty::certify_state(observables.observables, rho, b.t.vector, b.s.vector,
                                         1e-8, base);
  const bool admissible =
      b.constraint.kind != bounds::StateConstraint::Kind::FixedBlochNorm || rho.dim() == 2
          ? b.constraint.admits(rho)
          : false;
  return {std::move(report), admissible};
}

std::string report_to_json(const VerifyResult& v) {
  const auto& r = v.report;
  json root = {{"P", reals_json(r.P.entries())},
               {"t", reals_json(r.t.entries())},
               {"s", reals_json(r.s.entries())},
               {"sandwich_ok", {r.lower_ok, r.upper_ok}},
               {"equality", {{"lower", r.lower_equal}, {"upper", r.upper_equal}}},
               {"admissible", v.admissible},
               {"entropy_sum", r.entropy_sum},
               {"entropy_cap", r.entropy_cap},
               {"divergence", optional_json(r.divergence)},
               {"tightened_cap", optional_json(r.tightened_cap)},
               {"slack",
                {{"lower_prefix", r.lower_slack},
                 {"upper_prefix", r.upper_slack},
                 {"entropy", r.entropy_slack}}},
               {"log_base", log_base_json(r.base)}};
  if (!v.admissible) {
    root["note"] = "state is not admissible under the constraint the bounds were computed for";
  } else if (!r.sandwich_ok()) {
    root["note"] = "t < P < s violated for an admissible state";
  }
  return dump(root);
}

std::string entropy_to_json(const certainty::CertaintyReport& r) {
  json root = {{"entropy_sum", r.entropy_sum},
               {"entropy_cap", r.entropy_cap},
               {"tightened_cap", optional_json(r.tightened_cap)},
               {"slack", r.entropy_slack},
               {"log_base", log_base_json(r.base)}};
  return dump(root);
}

std::string format_double(double x, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string lorenz_csv(const BoundsFile& b, const std::vector<quantum::DensityMatrix>& states) {
  const std::size_t len = b.t.vector.size();
  std::vector<std::vector<double>> cols = {b.t.vector.prefix_sums(len), b.s.vector.prefix_sums(len)};
  for (const auto& rho : states) {
    for (const auto& obs : b.observables.observables) {
      if (obs.dim() != rho.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                      " does not match the observables");
      }
    }
    cols.push_back(quantum::direct_sum_pdv(b.observables.observables, rho).prefix_sums(len));
  }
  std::string out = "n,L_t,L_s";
  for (std::size_t i = 0; i < states.size(); ++i) out += ",L_P" + std::to_string(i + 1);
  out += "\n";
  for (std::size_t k = 0; k <= len; ++k) {
    out += std::to_string(k);
    for (const auto& col : cols) out += "," + format_double(col[k]);
    out += "\n";
  }
  return out;
}

std::string coherence_to_json(const coherence::ComplementarityBounds& cb,
                              const std::vector<std::vector<coherence::CoherenceVector>>& per_state) {
  json states = json::array();
  for (const auto& vectors : per_state) {
    json list = json::array();
    std::vector<majorization::ProbVector> parts;
    bool exact = true;
    for (const auto& v : vectors) {
      list.push_back({{"basis", v.basis_name},
                      {"mu", reals_json(v.vector.entries())},
                      {"exactness", coherence::to_string(v.exactness)}});
      parts.push_back(v.vector);
      exact = exact && v.exactness == coherence::Exactness::Exact;
    }
    const auto sum = majorization::direct_sum(parts);
    json entry = {{"vectors", std::move(list)},
                  {"direct_sum", reals_json(sum.entries())},
                  {"entropy_sum", majorization::shannon_entropy(sum)}};
    // The sandwich only makes a claim about exact (pure-state) vectors.
    if (exact) {
      entry["sandwich_ok"] = {majorization::is_majorized_by(cb.mu_t, sum, 1e-8),
                              majorization::is_majorized_by(sum, cb.mu_s, 1e-8)};
    } else {
      entry["sandwich_ok"] = nullptr;
    }
    states.push_back(std::move(entry));
  }
  json root = {{"mu_t", reals_json(cb.mu_t.entries())},
               {"mu_s", reals_json(cb.mu_s.entries())},
               {"entropy_mu_t", cb.entropy_mu_t},
               {"entropy_mu_s", cb.entropy_mu_s},
               {"states", std::move(states)}};
  return dump(root);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "short write to '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename onto '" + path + "'");
  }
}

}  // namespace uqcr::io
