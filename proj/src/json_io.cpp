#include "toricfloer/json_io.hpp"

namespace toricfloer {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const GaussianRational& g) {
  return json{{"re", g.real().str()}, {"im", g.imag().str()}};
}

json to_json(const VectorXq& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i].str());
  return arr;
}

json to_json(const ValidationReport& rep) {
  json j{{"bounded", rep.bounded},
         {"full_dimensional", rep.full_dimensional},
         {"facets_essential", rep.facets_essential},
         {"reflexive", rep.reflexive},
         {"warnings", rep.warnings}};
  if (rep.smooth)
    j["smooth"] = *rep.smooth;
  else
    j["smooth"] = nullptr;
  return j;
}

json to_json(const Polytope& p) {
  json facets = json::array();
  for (const Facet& f : p.facets) {
    json normal = json::array();
    for (Eigen::Index k = 0; k < f.normal.size(); ++k) normal.push_back(f.normal[k]);
    facets.push_back(json{{"normal", normal}, {"offset", f.offset.str()}});
  }
  return json{{"name", p.name}, {"dim", p.dim}, {"facets", facets}};
}

json to_json(const NovikovExact& s) {
  json arr = json::array();
  for (const auto& t : s.terms())
    arr.push_back(json{{"exp", t.exp.str()},
                       {"re", t.coeff.real().str()},
                       {"im", t.coeff.imag().str()}});
  return arr;
}

json to_json(const NovikovNumeric& s) {
  json arr = json::array();
  for (const auto& t : s.terms())
    arr.push_back(json{{"exp", t.exp.str()},
                       {"re", t.coeff.real()},
                       {"im", t.coeff.imag()}});
  return arr;
}

json to_json(const DiscClassSet& d) {
  json classes = json::array();
  for (const DiscClass& dc : d.classes) {
    json boundary = json::array();
    for (Eigen::Index k = 0; k < dc.boundary.size(); ++k)
      boundary.push_back(dc.boundary[k]);
    classes.push_back(json{{"facet", dc.facet_index},
                           {"boundary", boundary},
                           {"area_exp", dc.area_exp.str()}});
  }
  return json{{"fiber", to_json(d.fiber)}, {"classes", classes}};
}

json to_json(const EnergyLevels& l) {
  json arr = json::array();
  for (const EnergyLevel& lvl : l.levels)
    arr.push_back(json{{"area_exp", lvl.area_exp.str()}, {"indices", lvl.indices}});
  return json{{"levels", arr}};
}

json to_json(const Certificate& c) {
  json levels = json::array();
  for (const CertificateLevel& lvl : c.levels) {
    json coeffs = json::array();
    for (const GaussianRational& g : lvl.coeffs) coeffs.push_back(to_json(g));
    levels.push_back(json{{"exponent", lvl.area_exp.str()},
                          {"indices", lvl.indices},
                          {"coefficients", coeffs}});
  }
  json weights = json::array();
  for (const GaussianRational& g : c.weights) weights.push_back(to_json(g));
  return json{{"fiber", to_json(c.fiber)},
              {"levels", levels},
              {"weights", weights},
              {"verdict", c.verdict == CertVerdict::Certified ? "Certified" : "Unknown"},
              {"failing_levels", c.failing_levels},
              {"warnings", c.warnings},
              {"note", c.note},
              {"tool_version", kToolVersion}};
}

json to_json(const CriticalPoint& cp) {
  json z = json::array(), theta = json::array(), h = json::array();
  for (Eigen::Index k = 0; k < cp.z.size(); ++k) {
    z.push_back(json{{"re", cp.z[k].real()}, {"im", cp.z[k].imag()}});
    theta.push_back(cp.fiber[k]);
    h.push_back(cp.holonomy_angles[k]);
  }
  return json{{"z", z},
              {"residual", cp.residual},
              {"theta", theta},
              {"holonomy_angles", h},
              {"interior", cp.interior}};
}

json to_json(const Superpotential& w) {
  json terms = json::array();
  for (const auto& t : w.terms) {
    json e = json::array();
    for (Eigen::Index k = 0; k < t.exponents.size(); ++k) e.push_back(t.exponents[k]);
    terms.push_back(json{{"exponents", e}, {"log_coeff", t.log_coeff.str()}});
  }
  return json{{"dim", w.dim}, {"terms", terms}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const auto& fib = j.at("fiber");
  c.fiber.resize(static_cast<Eigen::Index>(fib.size()));
  for (std::size_t k = 0; k < fib.size(); ++k)
    c.fiber[static_cast<Eigen::Index>(k)] = Rational::parse(fib.at(k).get<std::string>());
  for (const auto& lj : j.at("levels")) {
    CertificateLevel lvl;
    lvl.area_exp = Rational::parse(lj.at("exponent").get<std::string>());
    lvl.indices = lj.at("indices").get<std::vector<int>>();
    for (const auto& gc : lj.at("coefficients"))
      lvl.coeffs.emplace_back(Rational::parse(gc.at("re").get<std::string>()),
                              Rational::parse(gc.at("im").get<std::string>()));
    c.levels.push_back(std::move(lvl));
  }
  for (const auto& gc : j.at("weights"))
    c.weights.emplace_back(Rational::parse(gc.at("re").get<std::string>()),
                           Rational::parse(gc.at("im").get<std::string>()));
  c.verdict = j.at("verdict").get<std::string>() == "Certified"
                  ? CertVerdict::Certified
                  : CertVerdict::Unknown;
  c.failing_levels = j.at("failing_levels").get<std::vector<int>>();
  c.warnings = j.at("warnings").get<std::vector<std::string>>();
  c.note = j.at("note").get<std::string>();
  return c;
}

}  // namespace toricfloer
