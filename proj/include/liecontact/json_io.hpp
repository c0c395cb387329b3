#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "liecontact/anosov.hpp"
#include "liecontact/kammeyer.hpp"

namespace liecontact {

using nlohmann::json;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------
// scalars / vectors / matrices as "p/q" strings

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw BadInput("rational must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw BadInput(std::string("bad rational: ") + e.what());
  }
}

inline json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw BadInput("vector must be an array of rational strings");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline json mat_to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw BadInput("matrix must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw BadInput("ragged matrix rows");
  return Mat::from_rows(rows);
}

/// Deviations and other floats: scientific notation, 17 significant
/// digits, serialized as strings so certificates stay text-exact.
inline json float_to_json(double x) {
  std::ostringstream os;
  os.precision(17);
  os << std::scientific << x;
  return os.str();
}

// ---------------------------------------------------------------------
// Algebra schema:
// { "dim": int, "basis": [string],
//   "brackets": [ {"i": int, "j": int, "out": [{"k": int, "num": string, "den": string}]} ],
//   "realization": optional [[[rational-string]]] }
// Only pairs i<j are stored; antisymmetry is implied.

inline json algebra_to_json(const LieAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  out["basis"] = g.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto& terms = g.bracket_basis(i, j);
      if (terms.empty()) continue;
      json entry;
      entry["i"] = i;
      entry["j"] = j;
      json outs = json::array();
      for (const auto& [k, c] : terms)
        outs.push_back({{"k", k}, {"num", numerator(c).str()}, {"den", denominator(c).str()}});
      entry["out"] = outs;
      brackets.push_back(entry);
    }
  out["brackets"] = brackets;
  if (g.has_realization()) {
    json real = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) real.push_back(mat_to_json(g.realization()[i]));
    out["realization"] = real;
  }
  return out;
}

inline LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
    throw BadInput("algebra JSON needs dim, basis, brackets");
  const std::size_t dim = j["dim"].get<std::size_t>();
  auto names = j["basis"].get<std::vector<std::string>>();
  if (names.size() != dim) throw BadInput("basis length does not match dim");
  std::map<std::pair<std::size_t, std::size_t>, BracketTerms> table;
  for (const auto& entry : j["brackets"]) {
    std::size_t i = entry.at("i").get<std::size_t>();
    std::size_t jj = entry.at("j").get<std::size_t>();
    if (i >= jj || jj >= dim) throw BadInput("bracket pair must satisfy i < j < dim");
    BracketTerms terms;
    for (const auto& t : entry.at("out")) {
      std::size_t k = t.at("k").get<std::size_t>();
      if (k >= dim) throw BadInput("bracket output index out of range");
      Integer num(t.at("num").get<std::string>());
      Integer den(t.at("den").get<std::string>());
      if (den == 0) throw BadInput("bracket coefficient with zero denominator");
      terms.emplace_back(k, Rational(num, den));
    }
    table[{i, jj}] = std::move(terms);
  }
  std::vector<Mat> realization;
  if (j.contains("realization"))
    for (const auto& m : j["realization"]) realization.push_back(mat_from_json(m));
  try {
    return LieAlgebra::from_table(std::move(names), std::move(table), std::move(realization));
  } catch (const std::exception& e) {
    throw BadInput(std::string("invalid algebra: ") + e.what());
  }
}

// ---------------------------------------------------------------------
// RootDecomposition: roots as {"functional": [..], "space": [[..]], "multiplicity": int}

inline json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis) rows.push_back(vec_to_json(v));
  return rows;
}

inline json decomposition_to_json(const RootDecomposition& d) {
  json out;
  out["cartan"] = subspace_to_json(d.cartan);
  out["g0"] = subspace_to_json(d.g0);
  out["compact_part"] = subspace_to_json(d.compact_part);
  json roots = json::array();
  for (const auto& r : d.roots)
    roots.push_back({{"functional", vec_to_json(r.functional)},
                     {"space", subspace_to_json(r.space)},
                     {"multiplicity", r.multiplicity}});
  out["roots"] = roots;
  out["positive"] = d.positive;
  return out;
}

// ---------------------------------------------------------------------
// Forms: {"rows": [[rational-string]]} over the Cartan basis

inline json forms_to_json(const std::vector<Vec>& rows) {
  json out;
  json r = json::array();
  for (const auto& row : rows) r.push_back(vec_to_json(row));
  out["rows"] = r;
  return out;
}

inline std::vector<Vec> forms_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw BadInput("forms JSON needs a rows key");
  std::vector<Vec> rows;
  for (const auto& r : j["rows"]) rows.push_back(vec_from_json(r));
  return rows;
}

// ---------------------------------------------------------------------
// certificates and reports

inline json certificate_to_json(const ContactCertificate& c) {
  json out;
  out["forms_independent"] = c.forms_independent;
  out["splitting_direct"] = c.splitting_direct;
  out["f_in_form_kernels"] = c.f_in_form_kernels;
  out["i_block_det"] = rational_to_json(c.i_block_det);
  json per = json::array();
  for (const auto& fc : c.per_form)
    per.push_back({{"i_in_kernel", fc.i_in_kernel},
                   {"pfaffian", rational_to_json(fc.pfaffian)},
                   {"oracle_checked", fc.oracle_checked},
                   {"oracle_ok", fc.oracle_ok}});
  out["per_form"] = per;
  out["verdict"] = c.verdict;
  return out;
}

inline json anosov_to_json(const AnosovResult& r) {
  json out;
  out["anosov"] = r.anosov;
  if (r.anosov) {
    out["element"] = vec_to_json(r.certificate.element);
    out["chamber"] = r.certificate.chamber;
    out["stable"] = subspace_to_json(r.certificate.stable);
    out["unstable"] = subspace_to_json(r.certificate.unstable);
  } else {
    out["witness_root"] = vec_to_json(r.witness_root);
  }
  return out;
}

inline json growth_to_json(const GrowthReport& r) {
  json out;
  out["tolerance"] = float_to_json(r.tolerance);
  out["max_deviation"] = float_to_json(r.max_deviation);
  out["pass"] = r.pass;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json entry;
    entry["root"] = vec_to_json(e.root);
    entry["t"] = float_to_json(e.t);
    entry["deviation"] = float_to_json(e.deviation);
    entries.push_back(entry);
  }
  out["entries"] = entries;
  return out;
}

inline json kammeyer_report_to_json(const KammeyerReport& r) {
  json out;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"witness", c.witness}});
  out["checks"] = checks;
  out["iwasawa_ok"] = r.iwasawa_ok;
  out["all_pass"] = r.all_pass;
  return out;
}

// ---------------------------------------------------------------------
// ExtensionSpec: {"kind": "central"|"modified", "l": int,
//                 "assignment": [int], "a_star": [[rational-string]]}

struct ExtensionSpec {
  std::string kind;
  std::size_t l = 0;
  std::vector<std::size_t> assignment;
  std::vector<Vec> a_star;
};

inline ExtensionSpec extension_spec_from_json(const json& j) {
  ExtensionSpec spec;
  if (!j.is_object() || !j.contains("kind")) throw BadInput("extension spec needs a kind");
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind != "central" && spec.kind != "modified")
    throw BadInput("extension kind must be central or modified");
  if (j.contains("l")) spec.l = j["l"].get<std::size_t>();
  if (j.contains("assignment")) spec.assignment = j["assignment"].get<std::vector<std::size_t>>();
  if (j.contains("a_star"))
    for (const auto& row : j["a_star"]) spec.a_star.push_back(vec_from_json(row));
  if (spec.kind == "central" && spec.l == 0) throw BadInput("central extension needs l >= 1");
  if (spec.kind == "modified" && spec.a_star.empty())
    throw BadInput("modified extension needs a nonempty a_star");
  return spec;
}

// ---------------------------------------------------------------------
// Kammeyer table schema:
// { "algebra": <algebra JSON>,
//   "roles": [{"family": "H0|H1|X0|X1|Z", "root": string}],   (index-aligned with basis)
//   "roots": { label: {"type": .., "sign": int, "negation": .., "sigma": ..} },
//   "sums_complete": bool, "sums": [{"a": .., "b": .., "out": ..}],
//   "c": [{"alpha","beta","i","j","value"}], "d": [{"alpha","beta","i","value"}],
//   "gamma": [{"alpha","beta","value"}], "root_string_r": [{"alpha","beta","r"}],
//   "hhat1"/"h0_pair"/"h1_pair"/"htilde0": { root: {simple: rational-string} } }

inline KammeyerTable kammeyer_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("roles"))
    throw BadInput("kammeyer table needs algebra and roles");
  KammeyerTable t;
  t.algebra = algebra_from_json(j["algebra"]);
  const auto names = t.algebra.basis_names();
  std::size_t idx = 0;
  for (const auto& r : j["roles"]) {
    if (idx >= names.size()) throw BadInput("more roles than basis elements");
    KammeyerElement e;
    e.name = names[idx++];
    e.family = r.at("family").get<std::string>();
    if (e.family != "H0" && e.family != "H1" && e.family != "X0" && e.family != "X1" &&
        e.family != "Z")
      throw BadInput("unknown family " + e.family);
    e.root = r.at("root").get<std::string>();
    t.roles.push_back(std::move(e));
  }
  if (t.roles.size() != names.size()) throw BadInput("fewer roles than basis elements");
  if (j.contains("roots"))
    for (const auto& [label, info] : j["roots"].items()) {
      KammeyerRootInfo ri;
      ri.type = info.value("type", "");
      ri.sign = info.value("sign", 0);
      ri.negation = info.value("negation", "");
      ri.sigma = info.value("sigma", label);
      t.roots[label] = std::move(ri);
    }
  t.sums_complete = j.value("sums_complete", false);
  if (j.contains("sums"))
    for (const auto& s : j["sums"])
      t.sums[{s.at("a").get<std::string>(), s.at("b").get<std::string>()}] =
          s.value("out", "");
  if (j.contains("c"))
    for (const auto& e : j["c"])
      t.c[{e.at("alpha").get<std::string>(), e.at("beta").get<std::string>(),
           e.at("i").get<int>(), e.at("j").get<int>()}] = rational_from_json(e.at("value"));
  if (j.contains("d"))
    for (const auto& e : j["d"])
      t.d[{e.at("alpha").get<std::string>(), e.at("beta").get<std::string>(),
           e.at("i").get<int>()}] = rational_from_json(e.at("value"));
  if (j.contains("gamma"))
    for (const auto& e : j["gamma"])
      t.gamma[{e.at("alpha").get<std::string>(), e.at("beta").get<std::string>()}] =
          rational_from_json(e.at("value"));
  if (j.contains("root_string_r"))
    for (const auto& e : j["root_string_r"])
      t.root_string_r[{e.at("alpha").get<std::string>(), e.at("beta").get<std::string>()}] =
          e.at("r").get<long>();
  auto load_combo = [&](const char* key, std::map<std::string, std::map<std::string, Rational>>& dst) {
    if (!j.contains(key)) return;
    for (const auto& [root, combo] : j[key].items())
      for (const auto& [simple, value] : combo.items()) dst[root][simple] = rational_from_json(value);
  };
  load_combo("hhat1", t.hhat1);
  load_combo("h0_pair", t.h0_pair);
  load_combo("h1_pair", t.h1_pair);
  load_combo("htilde0", t.htilde0);
  return t;
}

// ---------------------------------------------------------------------
// file helpers

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw BadInput("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace liecontact
