#include "feqlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace feqlab::io {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw Error(ErrorCode::BadShape, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Element element_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) shape_error(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<Element>::max())
    throw Error(ErrorCode::EntryOutOfRange, std::string(what) + " out of range", {v});
  return static_cast<Element>(v);
}

Complex complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  shape_error("complex value must be a number or [re, im]");
}

Json optional_complex(const std::optional<Complex>& z) { return z ? to_json(*z) : Json(nullptr); }

}  // namespace

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(),
                {static_cast<std::int64_t>(e.byte)});
  }
}

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

FiniteSemigroup semigroup_from_json(const Json& j) {
  const Json& n_json = field(j, "n");
  if (!n_json.is_number_integer() || n_json.get<std::int64_t>() < 1)
    shape_error("'n' must be a positive integer");
  const auto n = n_json.get<std::size_t>();
  const Json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != n) shape_error("'table' must have n rows");

  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) shape_error("every table row must have n entries");
    for (const auto& v : row) table.push_back(element_from(v, "table entry"));
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) shape_error("'labels' must have n strings");
    for (const auto& s : l) {
      if (!s.is_string()) shape_error("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return validate_semigroup(n, table, std::move(labels));
}

InvolutiveMorphism morphism_from_json(const Json& j, const FiniteSemigroup& s) {
  const Json& m = field(j, "map");
  if (!m.is_array()) shape_error("'map' must be an array");
  std::vector<Element> map;
  for (const auto& v : m) map.push_back(element_from(v, "map entry"));
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) shape_error("'kind' must be a string");
  return validate_morphism(s, map, morphism_kind_from_string(kind.get<std::string>()));
}

CentralMeasure measure_from_json(const Json& j, const FiniteSemigroup& s, double nonzero_tol) {
  const Json& a = field(j, "atoms");
  if (!a.is_array()) shape_error("'atoms' must be an array");
  std::vector<Atom> atoms;
  for (const auto& at : a) atoms.push_back({element_from(field(at, "z"), "atom z"), complex_from(field(at, "c"))});
  return validate_measure(s, atoms, nonzero_tol);
}

CFunc cfunc_from_json(const Json& j) {
  const Json& v = j.is_object() ? field(j, "values") : j;
  if (!v.is_array()) shape_error("function values must be an array");
  std::vector<Complex> out;
  for (const auto& z : v) out.push_back(complex_from(z));
  return CFunc(std::move(out));
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CFunc& f) {
  Json out = Json::array();
  for (const Complex& z : f.values()) out.push_back(to_json(z));
  return out;
}

Json to_json(const FiniteSemigroup& s) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto row = s.row(static_cast<Element>(x));
    rows.push_back(Json(std::vector<Element>(row.begin(), row.end())));
  }
  Json out{{"n", s.size()}, {"table", std::move(rows)}, {"labels", s.labels()}};
  out["identity"] = s.identity() ? Json(*s.identity()) : Json(nullptr);
  out["center"] = s.center();
  out["commutative"] = s.is_commutative();
  return out;
}

Json to_json(const InvolutiveMorphism& m) {
  return {{"map", std::vector<Element>(m.map().begin(), m.map().end())},
          {"kind", to_string(m.kind())}};
}

Json to_json(const CentralMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"z", a.z}, {"c", to_json(a.c)}});
  return {{"atoms", std::move(atoms)}, {"norm", mu.norm()}};
}

Json to_json(const std::vector<Character>& chars) {
  Json out = Json::array();
  for (const auto& c : chars) out.push_back({{"values", to_json(c.values)}});
  return out;
}

Json to_json(const DefectReport& r) {
  return {{"equation", to_string(r.equation)},
          {"max_defect", r.max_defect},
          {"witness", {r.witness_x, r.witness_y}}};
}

Json to_json(const IdentityReport& r) {
  Json res = Json::array(), cond = Json::array();
  for (const auto& x : r.residuals)
    res.push_back({{"tag", x.tag}, {"residual", x.residual}, {"witness", x.witness}});
  for (const auto& c : r.conditions)
    cond.push_back({{"tag", c.tag}, {"holds", c.holds}, {"magnitudes", c.magnitudes}});
  return {{"residuals", std::move(res)}, {"conditions", std::move(cond)}};
}

Json to_json(const SolutionSet& set) {
  Json members = Json::array();
  for (const auto& m : set.members) {
    Json prov{{"rule", m.provenance.rule},
              {"characters", m.provenance.characters},
              {"integral", optional_complex(m.provenance.integral)},
              {"twisted_integral", optional_complex(m.provenance.twisted_integral)}};
    members.push_back({{"values", to_json(m.values)}, {"provenance", std::move(prov)}});
  }
  return {{"class", to_string(set.cls)},
          {"central_only", set.central_only},
          {"members", std::move(members)}};
}

Json to_json(const BijectionReport& r) {
  return {{"correspondence", r.which == Correspondence::KannappanA ? "A<->K" : "V<->B"},
          {"domain_size", r.domain_size},
          {"codomain_size", r.codomain_size},
          {"max_roundtrip_error", r.max_roundtrip_error}};
}

Json to_json(const ScanReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"sample", x.sample},
                 {"values", to_json(x.f)},
                 {"defect", x.defect},
                 {"supnorm", x.supnorm}});
  return {{"tested", r.tested},
          {"rejected", r.rejected},
          {"bound", r.bound},
          {"best_supnorm", r.best_supnorm},
          {"violations", std::move(v)}};
}

Json to_json(const FalsifyResult& r) {
  return {{"best_supnorm", r.best_supnorm},
          {"best_defect", r.best_defect},
          {"bound", r.bound},
          {"starts", r.starts},
          {"best", to_json(r.best)}};
}

Json to_json(const DiagnosticsReport& r) {
  Json ineq = Json::array();
  for (const auto& i : r.inequalities)
    ineq.push_back({{"tag", i.tag}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"pass", i.pass}});
  return {{"equation", to_string(r.equation)},
          {"delta", r.delta},
          {"mu_norm", r.mu_norm},
          {"integral", to_json(r.integral)},
          {"inequalities", std::move(ineq)}};
}

Json to_json(const Error& e) {
  return {{"code", to_string(e.code())}, {"message", e.what()}, {"witness", e.witness()}};
}

}  // namespace feqlab::io
