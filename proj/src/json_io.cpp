#include "orthoform/json_io.hpp"

#include <cmath>
#include <fstream>

namespace orthoform::io {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + " document needs a '" + key + "' field");
  return j.at(key);
}

}  // namespace

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j, const FloatPolicy& policy) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number_float()) {
    if (!policy.allow_floats)
      throw ParseError("float '" + j.dump() +
                       "' in exact mode; use fraction strings or --float-input");
    return rat_from_double(j.get<double>(), policy.eps);
  }
  throw ParseError("expected a fraction string, got " + j.dump());
}

json crat_to_json(const CRat& z) {
  return json::array({rat_to_json(z.re), rat_to_json(z.im)});
}

CRat crat_from_json(const json& j, const FloatPolicy& policy) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("expected a [re, im] pair, got " + j.dump());
  return CRat(rat_from_json(j[0], policy), rat_from_json(j[1], policy));
}

json space_to_json(const FiniteSpace& sp) {
  json sigma = json::object();
  for (int i = 0; i < sp.size(); ++i) sigma[sp.label(i)] = sp.label(sp.sigma(i));
  return json{{"points", sp.points()}, {"sigma", sigma}};
}

FiniteSpace space_from_json(const json& j) {
  const json& pts = require(j, "points", "space");
  if (!pts.is_array()) throw ParseError("space 'points' must be an array");
  std::vector<std::string> points;
  for (const json& p : pts) {
    if (!p.is_string()) throw ParseError("point labels must be strings");
    points.push_back(p.get<std::string>());
  }
  std::map<std::string, std::string> sigma;
  if (j.contains("sigma")) {
    const json& sj = j.at("sigma");
    if (!sj.is_object()) throw ParseError("space 'sigma' must be an object");
    for (auto it = sj.begin(); it != sj.end(); ++it) {
      if (!it.value().is_string())
        throw ParseError("sigma values must be point labels");
      sigma[it.key()] = it.value().get<std::string>();
    }
  }
  return make_space(points, sigma);
}

FiniteSpace space_from_ref(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path ref = j.get<std::string>();
    if (ref.is_relative()) ref = base_dir / ref;
    return space_from_json(parse_file(ref));
  }
  return space_from_json(j);
}

json element_to_json(const AlgebraElement& x) {
  json values = json::object();
  for (int t = 0; t < x.space().size(); ++t)
    values[x.space().label(t)] = crat_to_json(x.value(t));
  return json{{"space", space_to_json(x.space())}, {"values", values}};
}

AlgebraElement element_from_json(const json& j,
                                 const std::filesystem::path& base_dir,
                                 const FloatPolicy& policy) {
  FiniteSpace sp = space_from_ref(require(j, "space", "element"), base_dir);
  std::vector<CRat> vals(sp.size());
  std::vector<bool> given(sp.size(), false);
  if (j.contains("values")) {
    const json& vj = j.at("values");
    if (!vj.is_object()) throw ParseError("element 'values' must be an object");
    for (auto it = vj.begin(); it != vj.end(); ++it) {
      int t = sp.index(it.key());
      if (t < 0) throw ParseError("unknown point '" + it.key() + "' in element");
      vals[t] = crat_from_json(it.value(), policy);
      given[t] = true;
    }
  }
  // A missing partner value is filled by conjugation.
  for (int t = 0; t < sp.size(); ++t)
    if (given[t] && !given[sp.sigma(t)]) vals[sp.sigma(t)] = vals[t].conj();
  try {
    return AlgebraElement(sp, vals);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json functional_to_json(const Functional& g) {
  json coeffs = json::array();
  for (const Rat& c : g.coeffs()) coeffs.push_back(rat_to_json(c));
  return json{{"space", space_to_json(g.space())}, {"coefficients", coeffs}};
}

Functional functional_from_json(const json& j,
                                const std::filesystem::path& base_dir,
                                const FloatPolicy& policy) {
  FiniteSpace sp = space_from_ref(require(j, "space", "functional"), base_dir);
  const json& cj = require(j, "coefficients", "functional");
  if (!cj.is_array() || static_cast<int>(cj.size()) != sp.dim())
    throw ParseError("functional needs exactly dim coefficients");
  std::vector<Rat> coeffs;
  for (const json& c : cj) coeffs.push_back(rat_from_json(c, policy));
  return Functional(sp, coeffs);
}

namespace {

RatMatrix matrix_from_json(const json& j, int rows, int cols,
                           const FloatPolicy& policy) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError("matrix needs " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix row " + std::to_string(i) + " needs " +
                       std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(row[k], policy);
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(rat_to_json(m.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json form_to_json(const BilinearForm& v) {
  return json{{"space", space_to_json(v.space())},
              {"matrix", matrix_to_json(v.matrix())}};
}

BilinearForm form_from_json(const json& j, const std::filesystem::path& base_dir,
                            const FloatPolicy& policy) {
  FiniteSpace sp = space_from_ref(require(j, "space", "form"), base_dir);
  RatMatrix m = matrix_from_json(require(j, "matrix", "form"), sp.dim(), sp.dim(),
                                 policy);
  return BilinearForm(sp, m);
}

json map_to_json(const LinearMap& t) {
  return json{{"domain", space_to_json(t.domain())},
              {"codomain", space_to_json(t.codomain())},
              {"matrix", matrix_to_json(t.matrix())}};
}

LinearMap map_from_json(const json& j, const std::filesystem::path& base_dir,
                        const FloatPolicy& policy) {
  FiniteSpace dom = space_from_ref(require(j, "domain", "map"), base_dir);
  FiniteSpace cod = space_from_ref(require(j, "codomain", "map"), base_dir);
  RatMatrix m = matrix_from_json(require(j, "matrix", "map"), cod.dim(),
                                 dom.dim(), policy);
  return LinearMap(dom, cod, m);
}

json structure_to_json(const PreserverStructure& s) {
  const FiniteSpace& c = s.codomain;
  json phi = json::object(), a1 = json::object(), a2 = json::object();
  json z1 = json::array(), z3 = json::array();
  for (int p = 0; p < c.size(); ++p) {
    if (s.phi[p] >= 0) {
      z1.push_back(c.label(p));
      phi[c.label(p)] = s.domain.label(s.phi[p]);
      a1[c.label(p)] = crat_to_json(s.a1[p]);
      a2[c.label(p)] = crat_to_json(s.a2[p]);
    } else {
      z3.push_back(c.label(p));
    }
  }
  return json{{"domain", space_to_json(s.domain)},
              {"codomain", space_to_json(c)},
              {"z1", z1},
              {"z2", json::array()},
              {"z3", z3},
              {"phi", phi},
              {"a1", a1},
              {"a2", a2}};
}

json certificate_to_json(const BiopCertificate& cert) {
  const FiniteSpace& c = cert.structure.codomain;
  json bij = json::object();
  for (int p = 0; p < c.size(); ++p)
    bij[c.label(p)] = cert.structure.domain.label(cert.point_bijection[p]);
  json dets = json::object();
  for (const auto& [p, det] : cert.determinants)
    dets[c.label(p)] = rat_to_json(det);
  return json{{"structure", structure_to_json(cert.structure)},
              {"bijection", bij},
              {"determinants", dets},
              {"inverse_structure", structure_to_json(cert.inverse_structure)},
              {"inverse_map", map_to_json(reconstruct(cert.inverse_structure))}};
}

json complexform_to_json(const ComplexForm& w) {
  int n = w.space().size();
  json rows = json::array();
  for (int t = 0; t < n; ++t) {
    json row = json::array();
    for (int r = 0; r < n; ++r) row.push_back(crat_to_json(w.at(t, r)));
    rows.push_back(row);
  }
  return json{{"space", space_to_json(w.space())}, {"matrix", rows}};
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // message carries line and column
  }
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace orthoform::io
