// Copyright 2026 The specdist Authors
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

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specdist/errors.hpp"
#include "specdist/matrix.hpp"
#include "specdist/pauli.hpp"
#include "specdist/states.hpp"
#include "specdist/triple.hpp"

// JSON descriptions of triples, states and elements.  Complex numbers are
// [re, im] pairs; matrices are arrays of rows.

namespace specdist {

/// Malformed or inconsistent input description.
class ParseError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

using nlohmann::json;

// ---------------------------------------------------------------------------
// Matrices

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Accepts [re, im] pairs or plain reals for entries.
inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const json& x = j[r][c];
      if (x.is_number()) {
        m(r, c) = x.get<double>();
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        m(r, c) = cplx(x[0].get<double>(), x[1].get<double>());
      } else {
        throw ParseError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  if (!m.is_finite()) throw ParseError("matrix entries must be finite");
  return m;
}

// ---------------------------------------------------------------------------
// Triple descriptions

struct PauliTerm {
  double coeff = 1.0;
  std::vector<int> string;  // Pauli indices 0..3
  int sign = 1;
};

struct DiracSpec {
  std::string kind;  // two_point | corner | d4 | d4n | tensor_insert | pauli_sum | matrix
  std::array<int, 3> signs{1, 1, 1};
  std::array<int, 3> perm{1, 2, 3};
  std::vector<D4Level> levels;
  std::shared_ptr<DiracSpec> base;  // tensor_insert
  std::optional<ComplexMatrix> m;   // tensor_insert
  std::vector<PauliTerm> terms;     // pauli_sum
  std::optional<ComplexMatrix> entries;  // matrix
};

struct RepresentationSpec {
  std::string kind;  // identity | diagonal | corner | custom
  std::size_t copies = 1;
  std::vector<ComplexMatrix> basis_images;
};

struct TripleSpec {
  std::optional<std::size_t> algebra_dim;
  std::optional<RepresentationSpec> representation;
  DiracSpec dirac;
  std::vector<std::size_t> subalgebra_mask;
  std::optional<std::string> isometric;  // no | on_traceless | on_all | certify
  std::string tag;
};

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::array<int, 3> int3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + " must have three entries");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

inline json int3_json(const std::array<int, 3>& a) { return json::array({a[0], a[1], a[2]}); }

inline DiracSpec dirac_spec_from_json(const json& j) {
  DiracSpec d;
  d.kind = require(j, "kind").get<std::string>();
  if (d.kind == "d4") {
    if (j.contains("signs")) d.signs = int3(j["signs"], "signs");
    if (j.contains("perm")) d.perm = int3(j["perm"], "perm");
  } else if (d.kind == "d4n") {
    const json& levels = require(j, "levels");
    if (!levels.is_array()) throw ParseError("levels must be an array");
    for (const auto& l : levels) {
      D4Level level;
      if (l.contains("left")) level.left = int3(l["left"], "left");
      if (l.contains("right")) level.right = int3(l["right"], "right");
      if (l.contains("signs")) level.signs = int3(l["signs"], "signs");
      d.levels.push_back(level);
    }
  } else if (d.kind == "tensor_insert") {
    d.base = std::make_shared<DiracSpec>(dirac_spec_from_json(require(j, "base")));
    d.m = matrix_from_json(require(j, "M"));
  } else if (d.kind == "pauli_sum") {
    const json& terms = require(j, "terms");
    if (!terms.is_array() || terms.empty()) throw ParseError("pauli_sum needs a non-empty term list");
    for (const auto& t : terms) {
      PauliTerm p;
      p.coeff = require(t, "coeff").get<double>();
      for (const auto& s : require(t, "string")) {
        const std::string letter = s.get<std::string>();
        if (letter.size() != 1) throw ParseError("Pauli letters are single characters");
        p.string.push_back(pauli_index(letter[0]));
      }
      if (t.contains("sign")) p.sign = t["sign"].get<int>();
      d.terms.push_back(std::move(p));
    }
  } else if (d.kind == "matrix") {
    d.entries = matrix_from_json(require(j, "entries"));
  } else if (d.kind != "two_point" && d.kind != "corner") {
    throw ParseError("unknown dirac kind '" + d.kind + "'");
  }
  return d;
}

inline json dirac_spec_to_json(const DiracSpec& d) {
  json j = {{"kind", d.kind}};
  if (d.kind == "d4") {
    j["signs"] = int3_json(d.signs);
    j["perm"] = int3_json(d.perm);
  } else if (d.kind == "d4n") {
    j["levels"] = json::array();
    for (const auto& l : d.levels)
      j["levels"].push_back({{"left", int3_json(l.left)}, {"right", int3_json(l.right)}, {"signs", int3_json(l.signs)}});
  } else if (d.kind == "tensor_insert") {
    j["base"] = dirac_spec_to_json(*d.base);
    j["M"] = matrix_to_json(*d.m);
  } else if (d.kind == "pauli_sum") {
    j["terms"] = json::array();
    for (const auto& t : d.terms) {
      json letters = json::array();
      for (int i : t.string) letters.push_back(std::string(1, pauli_letter(i)));
      j["terms"].push_back({{"coeff", t.coeff}, {"string", std::move(letters)}, {"sign", t.sign}});
    }
  } else if (d.kind == "matrix") {
    j["entries"] = matrix_to_json(*d.entries);
  }
  return j;
}

inline Representation build_representation(const RepresentationSpec& r, std::size_t n) {
  if (r.kind == "identity") return Representation::identity(n);
  if (r.kind == "diagonal") return Representation::diagonal(n, r.copies);
  if (r.kind == "corner") return Representation::corner(n);
  if (r.kind == "custom") return Representation::custom(n, r.basis_images);
  throw ParseError("unknown representation kind '" + r.kind + "'");
}

inline IsometricFlag parse_flag(const std::string& s) {
  if (s == "no") return IsometricFlag::No;
  if (s == "on_traceless") return IsometricFlag::OnTraceless;
  if (s == "on_all") return IsometricFlag::OnAll;
  throw ParseError("unknown isometric flag '" + s + "'");
}

inline const char* flag_name(IsometricFlag f) {
  switch (f) {
    case IsometricFlag::No: return "no";
    case IsometricFlag::OnTraceless: return "on_traceless";
    case IsometricFlag::OnAll: return "on_all";
  }
  return "no";
}

/// Constructor-backed Dirac kinds build their own representation.
inline SpectralTriple build_constructed(const DiracSpec& d) {
  if (d.kind == "two_point") return dirac_two_point();
  if (d.kind == "d4") return dirac_d4(d.signs, d.perm);
  if (d.kind == "d4n") return dirac_d4n(d.levels);
  if (d.kind == "tensor_insert") {
    if (!d.base) throw ParseError("tensor_insert needs a base");
    return dirac_tensor_insert(build_constructed(*d.base), HermitianMatrix(*d.m));
  }
  throw ParseError("dirac kind '" + d.kind + "' cannot serve as a constructed base");
}

}  // namespace detail

inline TripleSpec triple_spec_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("triple description must be an object");
    TripleSpec t;
    if (j.contains("algebra_dim")) t.algebra_dim = j["algebra_dim"].get<std::size_t>();
    if (j.contains("representation")) {
      const json& r = j["representation"];
      RepresentationSpec rep;
      rep.kind = detail::require(r, "kind").get<std::string>();
      if (r.contains("copies")) rep.copies = r["copies"].get<std::size_t>();
      if (r.contains("basis_images"))
        for (const auto& m : r["basis_images"]) rep.basis_images.push_back(matrix_from_json(m));
      t.representation = std::move(rep);
    }
    t.dirac = detail::dirac_spec_from_json(detail::require(j, "dirac"));
    if (j.contains("subalgebra_mask")) t.subalgebra_mask = j["subalgebra_mask"].get<std::vector<std::size_t>>();
    if (j.contains("isometric")) t.isometric = j["isometric"].get<std::string>();
    if (j.contains("tag")) t.tag = j["tag"].get<std::string>();
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed triple description: ") + e.what());
  }
}

inline json to_json(const TripleSpec& t) {
  json j;
  if (t.algebra_dim) j["algebra_dim"] = *t.algebra_dim;
  if (t.representation) {
    json r = {{"kind", t.representation->kind}};
    if (t.representation->kind == "diagonal") r["copies"] = t.representation->copies;
    if (t.representation->kind == "custom") {
      r["basis_images"] = json::array();
      for (const auto& m : t.representation->basis_images) r["basis_images"].push_back(matrix_to_json(m));
    }
    j["representation"] = std::move(r);
  }
  j["dirac"] = detail::dirac_spec_to_json(t.dirac);
  if (!t.subalgebra_mask.empty()) j["subalgebra_mask"] = t.subalgebra_mask;
  if (t.isometric) j["isometric"] = *t.isometric;
  if (!t.tag.empty()) j["tag"] = t.tag;
  return j;
}

/// Resolves a description to a triple.  Constructor kinds (two_point,
/// corner, d4, d4n, tensor_insert) fix their own representation; a given
/// algebra_dim or representation must then agree with it.
inline SpectralTriple build_triple(const TripleSpec& s) {
  const DiracSpec& d = s.dirac;
  const bool constructed = d.kind != "pauli_sum" && d.kind != "matrix";
  std::optional<SpectralTriple> t;
  if (constructed) {
    if (d.kind == "corner") {
      if (!s.algebra_dim) throw ParseError("corner dirac needs algebra_dim");
      t = dirac_corner(*s.algebra_dim);
    } else {
      t = detail::build_constructed(d);
    }
    if (s.algebra_dim && *s.algebra_dim != t->algebra_dim()) throw ParseError("algebra_dim disagrees with the dirac kind");
    if (s.representation) {
      const Representation want = detail::build_representation(*s.representation, t->algebra_dim());
      if (want.kind() != t->representation().kind() || want.hilbert_dim() != t->hilbert_dim())
        throw ParseError("representation disagrees with the dirac kind");
    }
    if (!s.subalgebra_mask.empty() && s.subalgebra_mask != t->subalgebra_mask())
      throw ParseError("subalgebra_mask disagrees with the dirac kind");
    if (s.isometric) {
      const IsometricFlag f = s.isometric == "certify" ? certify_isometry(*t, 0) : detail::parse_flag(*s.isometric);
      t = t->with_isometric_flag(f);
    }
    return *t;
  }

  if (!s.algebra_dim) throw ParseError("algebra_dim is required for pauli_sum and matrix diracs");
  const RepresentationSpec rs = s.representation.value_or(RepresentationSpec{"identity", 1, {}});
  const Representation rep = detail::build_representation(rs, *s.algebra_dim);
  ComplexMatrix dirac;
  if (d.kind == "matrix") {
    dirac = *d.entries;
  } else {
    for (const auto& term : d.terms) {
      const ComplexMatrix p = pauli_string(term.string, term.sign).matrix() * term.coeff;
      if (!dirac.empty() && p.dim() != dirac.dim()) throw ParseError("pauli_sum terms differ in length");
      if (dirac.empty()) dirac = p;
      else dirac += p;
    }
  }
  if (dirac.dim() != rep.hilbert_dim()) throw ParseError("dirac size does not match the representation");
  SpectralTriple triple(rep, dirac, s.tag.empty() ? d.kind : s.tag, IsometricFlag::No, s.subalgebra_mask);
  if (s.isometric) {
    const IsometricFlag f = *s.isometric == "certify" ? certify_isometry(triple, 0) : detail::parse_flag(*s.isometric);
    triple = triple.with_isometric_flag(f);
  }
  return triple;
}

/// Explicit description of a triple: its representation and normalized
/// Dirac matrix.
inline TripleSpec spec_from_triple(const SpectralTriple& t) {
  TripleSpec s;
  s.algebra_dim = t.algebra_dim();
  RepresentationSpec r;
  const Representation& rep = t.representation();
  switch (rep.kind()) {
    case RepresentationKind::Identity: r.kind = "identity"; break;
    case RepresentationKind::Diagonal: r.kind = "diagonal"; break;
    case RepresentationKind::Corner: r.kind = "corner"; break;
    case RepresentationKind::Custom: r.kind = "custom"; break;
  }
  r.copies = rep.copies();
  r.basis_images = rep.basis_images();
  s.representation = std::move(r);
  s.dirac.kind = "matrix";
  s.dirac.entries = t.dirac().matrix();
  s.subalgebra_mask = t.subalgebra_mask();
  s.isometric = detail::flag_name(t.isometric_flag());
  s.tag = t.tag();
  return s;
}

// ---------------------------------------------------------------------------
// States and elements

struct StateSpec {
  std::optional<std::array<double, 3>> bloch;
  std::optional<ComplexMatrix> matrix;
  std::string label;
};

inline StateSpec state_spec_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("state description must be an object");
    StateSpec s;
    if (j.contains("bloch")) {
      const json& b = j["bloch"];
      if (!b.is_array() || b.size() != 3) throw ParseError("bloch must have three entries");
      s.bloch = std::array<double, 3>{b[0].get<double>(), b[1].get<double>(), b[2].get<double>()};
    }
    if (j.contains("matrix")) s.matrix = matrix_from_json(j["matrix"]);
    if (s.bloch.has_value() == s.matrix.has_value()) throw ParseError("state needs exactly one of bloch or matrix");
    if (j.contains("label")) s.label = j["label"].get<std::string>();
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state description: ") + e.what());
  }
}

inline json to_json(const StateSpec& s) {
  json j;
  if (s.bloch) j["bloch"] = *s.bloch;
  if (s.matrix) j["matrix"] = matrix_to_json(*s.matrix);
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

inline DensityMatrix build_state(const StateSpec& s) {
  if (s.bloch) {
    const auto& b = *s.bloch;
    return density_from_bloch(BlochVector(b[0], b[1], b[2]));
  }
  return DensityMatrix(*s.matrix);
}

/// A list of states: either a top-level array or {"states": [...]}.
/// Missing labels default to s0, s1, ...
inline std::vector<StateSpec> state_list_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("states")) throw ParseError("missing field 'states'");
    arr = &j["states"];
  }
  if (!arr->is_array() || arr->empty()) throw ParseError("states must be a non-empty array");
  std::vector<StateSpec> out;
  for (const auto& s : *arr) {
    out.push_back(state_spec_from_json(s));
    if (out.back().label.empty()) out.back().label = "s" + std::to_string(out.size() - 1);
  }
  return out;
}

/// An algebra element: {"matrix": ...} or {"pauli_sum": [terms]}.
inline ComplexMatrix element_from_json(const json& j) {
  try {
    if (j.is_object() && j.contains("matrix")) return matrix_from_json(j["matrix"]);
    if (j.is_object() && j.contains("pauli_sum")) {
      json wrapped = {{"kind", "pauli_sum"}, {"terms", j["pauli_sum"]}};
      const DiracSpec d = detail::dirac_spec_from_json(wrapped);
      ComplexMatrix m;
      for (const auto& t : d.terms) {
        const ComplexMatrix p = pauli_string(t.string, t.sign).matrix() * t.coeff;
        if (!m.empty() && p.dim() != m.dim()) throw ParseError("pauli_sum terms differ in length");
        if (m.empty()) m = p;
        else m += p;
      }
      return m;
    }
    throw ParseError("element needs a matrix or pauli_sum field");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed element description: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files and printing

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Rounds to 9 significant digits (the precision of all printed output).
inline double round9(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

/// 9 significant digits; infinities print as "inf".
inline std::string format9(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline json json9(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return round9(v);
}

}  // namespace specdist
