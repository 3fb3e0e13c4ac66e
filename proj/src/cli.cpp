#include "toricfloer/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "toricfloer/builtins.hpp"
#include "toricfloer/certificate.hpp"
#include "toricfloer/json_io.hpp"
#include "toricfloer/mirror.hpp"

namespace toricfloer {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

struct CommonOpts {
  std::string builtin;
  std::string polytope_file;
  std::string param;
  std::string fiber;
  std::string holonomy;
  std::string weights;
  std::string mode = "standard";
  bool json = false;
};

void add_polytope_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--builtin", o.builtin, "builtin polytope name");
  cmd->add_option("--polytope", o.polytope_file, "polytope JSON file");
  cmd->add_option("--param", o.param, "builtin parameter epsilon, exact p/q");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

Polytope load_polytope(const CommonOpts& o) {
  if (!o.builtin.empty()) {
    std::optional<Rational> eps;
    if (!o.param.empty()) eps = Rational::parse(o.param);
    return builtin_polytope(o.builtin, eps);
  }
  if (!o.polytope_file.empty()) {
    std::ifstream in(o.polytope_file);
    if (!in) throw ParseError("cannot open file '" + o.polytope_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polytope(buf.str());
  }
  throw ParseError("either --builtin or --polytope is required");
}

FiberPoint parse_fiber(const std::string& s, int dim) {
  std::vector<std::string> parts = split_commas(s);
  if (static_cast<int>(parts.size()) != dim)
    throw ParseError("fiber has " + std::to_string(parts.size()) +
                     " coordinates, polytope dim is " + std::to_string(dim));
  FiberPoint a(dim);
  for (int k = 0; k < dim; ++k) a[k] = Rational::parse(parts[k]);
  return a;
}

// "p/q" -> e^(2 pi i p/q); "a+bi" / "a-bi" / decimal -> complex literal
std::complex<double> parse_complex_entry(const std::string& s, bool angle_fraction) {
  if (s.find('i') != std::string::npos) {
    std::string body = s;
    body.erase(body.find('i'), 1);
    // split at the sign of the imaginary part (not a leading sign)
    std::size_t pos = body.find_last_of("+-");
    if (pos == std::string::npos || pos == 0)
      return {0.0, std::stod(body.empty() ? "1" : body)};
    double re = std::stod(body.substr(0, pos));
    std::string im = body.substr(pos);
    if (im == "+" || im == "-") im += "1";
    return {re, std::stod(im)};
  }
  if (s.find('.') != std::string::npos || !angle_fraction)
    return {std::stod(s), 0.0};
  Rational frac = Rational::parse(s);
  double ang = kTwoPi * frac.to_double();
  return {std::cos(ang), std::sin(ang)};
}

Eigen::VectorXcd parse_holonomy(const std::string& s, int dim) {
  std::vector<std::string> parts = split_commas(s);
  if (static_cast<int>(parts.size()) != dim)
    throw ParseError("holonomy needs " + std::to_string(dim) + " entries");
  Eigen::VectorXcd x(dim);
  for (int k = 0; k < dim; ++k)
    x[k] = parse_complex_entry(parts[k], /*angle_fraction=*/true);
  return x;
}

std::optional<std::vector<GaussianRational>> try_parse_exact_weights(
    const std::string& s) {
  std::vector<GaussianRational> w;
  for (const std::string& part : split_commas(s)) {
    if (part.find('.') != std::string::npos || part.find('i') != std::string::npos)
      return std::nullopt;
    try {
      w.emplace_back(Rational::parse(part));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return w;
}

Eigen::VectorXcd parse_numeric_weights(const std::string& s, int count) {
  std::vector<std::string> parts = split_commas(s);
  if (static_cast<int>(parts.size()) != count)
    throw ParseError("weights need " + std::to_string(count) + " entries");
  Eigen::VectorXcd d(count);
  for (int k = 0; k < count; ++k)
    d[k] = parse_complex_entry(parts[k], /*angle_fraction=*/false);
  return d;
}

std::string verdict_str(Verdict v) {
  return v == Verdict::NonVanishing ? "NonVanishing" : "Vanishing";
}

std::string convergent_verdict_str(ConvergentVerdict v) {
  return v == ConvergentVerdict::NonVanishingConvergent ? "NonVanishingConvergent"
                                                        : "VanishingConvergent";
}

constexpr const char* kConvergentLabel =
    "not a displaceability certificate: the convergent version is not "
    "invariant under Hamiltonian isotopy";

// m12 inputs resolved from flags; exact when holonomy is trivial and the
// weights are Gaussian rational, numeric otherwise
struct M12Request {
  DiscClassSet dset;
  bool exact = false;
  std::vector<GaussianRational> x_exact, d_exact;
  Eigen::VectorXcd x_num, d_num;
};

M12Request resolve_m12(const Polytope& p, const CommonOpts& o) {
  if (o.fiber.empty()) throw ParseError("--fiber is required");
  M12Request req;
  req.dset = disc_classes(p, parse_fiber(o.fiber, p.dim));
  const int nfac = p.facet_count();

  std::optional<std::vector<GaussianRational>> exact_d;
  if (o.mode == "bfield") {
    Certificate cert = certify_fiber(p, req.dset.fiber);
    if (cert.verdict != CertVerdict::Certified)
      throw DomainError("bfield mode: no certificate at this fiber");
    exact_d = cert.weights;
  } else if (!o.weights.empty()) {
    exact_d = try_parse_exact_weights(o.weights);
    if (exact_d && static_cast<int>(exact_d->size()) != nfac)
      throw ParseError("weights need " + std::to_string(nfac) + " entries");
  } else {
    exact_d = trivial_field(nfac);
  }

  if (o.holonomy.empty() && exact_d) {
    req.exact = true;
    req.x_exact = trivial_field(p.dim);
    req.d_exact = *exact_d;
    return req;
  }
  req.exact = false;
  req.x_num = o.holonomy.empty()
                  ? Eigen::VectorXcd::Ones(p.dim).eval()
                  : parse_holonomy(o.holonomy, p.dim);
  if (exact_d) {
    req.d_num.resize(nfac);
    for (int j = 0; j < nfac; ++j) req.d_num[j] = coeff_to_complex((*exact_d)[j]);
  } else {
    req.d_num = parse_numeric_weights(o.weights, nfac);
  }
  return req;
}

void emit(std::ostream& out, const nlohmann::json& j, bool as_json,
          const std::string& human) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << human;
}

int dispatch(const std::string& sub, const CommonOpts& o, int grid, int starts,
             double tol, std::ostream& out) {
  if (sub == "builtins") {
    nlohmann::json j = builtin_names();
    std::ostringstream hs;
    for (const std::string& n : builtin_names()) hs << n << "\n";
    emit(out, j, o.json, hs.str());
    return 0;
  }

  Polytope p = load_polytope(o);

  if (sub == "validate") {
    ValidationReport rep = validate(p);
    std::ostringstream hs;
    hs << p.name << ": bounded=" << rep.bounded
       << " full_dimensional=" << rep.full_dimensional
       << " facets_essential=" << rep.facets_essential << " smooth="
       << (rep.smooth ? (*rep.smooth ? "true" : "false") : "skipped")
       << " reflexive=" << rep.reflexive << "\n";
    for (const std::string& w : rep.warnings) hs << "warning: " << w << "\n";
    emit(out, to_json(rep), o.json, hs.str());
    return 0;
  }
  if (sub == "vertices") {
    std::vector<VectorXq> verts = vertices(p);
    nlohmann::json j = nlohmann::json::array();
    std::ostringstream hs;
    for (const VectorXq& v : verts) {
      j.push_back(to_json(v));
      for (Eigen::Index k = 0; k < v.size(); ++k)
        hs << (k ? "," : "(") << v[k].str();
      hs << ")\n";
    }
    emit(out, j, o.json, hs.str());
    return 0;
  }
  if (sub == "monotone") {
    auto mono = monotone_fiber(p);
    if (!mono) {
      emit(out, nlohmann::json(nullptr), o.json, "none\n");
      return 0;
    }
    nlohmann::json j{{"fiber", to_json(mono->first)},
                     {"common_area_exp", mono->second.str()}};
    std::ostringstream hs;
    hs << "fiber=(";
    for (Eigen::Index k = 0; k < mono->first.size(); ++k)
      hs << (k ? "," : "") << mono->first[k].str();
    hs << ") common_area_exp=" << mono->second.str() << "\n";
    emit(out, j, o.json, hs.str());
    return 0;
  }

  if (sub == "areas" || sub == "levels") {
    if (o.fiber.empty()) throw ParseError("--fiber is required");
    DiscClassSet d = disc_classes(p, parse_fiber(o.fiber, p.dim));
    if (sub == "areas") {
      std::ostringstream hs;
      for (const DiscClass& dc : d.classes)
        hs << "beta_" << dc.facet_index + 1 << ": exp=" << dc.area_exp.str() << "\n";
      emit(out, to_json(d), o.json, hs.str());
    } else {
      EnergyLevels l = energy_levels(d);
      std::ostringstream hs;
      for (const EnergyLevel& lvl : l.levels) {
        hs << "exp=" << lvl.area_exp.str() << " facets={";
        for (std::size_t k = 0; k < lvl.indices.size(); ++k)
          hs << (k ? "," : "") << "v" << lvl.indices[k] + 1;
        hs << "}\n";
      }
      emit(out, to_json(l), o.json, hs.str());
    }
    return 0;
  }

  if (sub == "m12" || sub == "verdict") {
    M12Request req = resolve_m12(p, o);
    nlohmann::json comps = nlohmann::json::array();
    std::string verdict;
    nlohmann::json extra;
    if (o.mode == "convergent") {
      std::vector<NovikovNumeric> m;
      if (req.exact) {
        std::vector<NovikovExact> me = m12(req.dset, req.x_exact, req.d_exact);
        for (const NovikovExact& c : me) {
          NovikovNumeric cn;
          for (const auto& t : c.terms())
            cn = cn + NovikovNumeric::monomial(coeff_to_complex(t.coeff), t.exp);
          m.push_back(cn);
        }
      } else {
        m = m12(req.dset, std::vector<std::complex<double>>(
                              req.x_num.data(), req.x_num.data() + req.x_num.size()),
                std::vector<std::complex<double>>(
                    req.d_num.data(), req.d_num.data() + req.d_num.size()));
      }
      bool nonvanishing = true;
      for (const NovikovNumeric& c : m) {
        std::complex<double> v = convergent_eval(c);
        comps.push_back(nlohmann::json{{"re", v.real()}, {"im", v.imag()}});
        if (std::abs(v) >= 1e-10) nonvanishing = false;
      }
      verdict = nonvanishing ? "NonVanishingConvergent" : "VanishingConvergent";
      extra["label"] = kConvergentLabel;
    } else if (req.exact) {
      std::vector<NovikovExact> m = m12(req.dset, req.x_exact, req.d_exact);
      for (const NovikovExact& c : m) comps.push_back(to_json(c));
      verdict = verdict_str(floer_verdict(m));
    } else {
      std::vector<NovikovNumeric> m =
          m12(req.dset,
              std::vector<std::complex<double>>(req.x_num.data(),
                                                req.x_num.data() + req.x_num.size()),
              std::vector<std::complex<double>>(req.d_num.data(),
                                                req.d_num.data() + req.d_num.size()));
      for (const NovikovNumeric& c : m) comps.push_back(to_json(c));
      verdict = verdict_str(floer_verdict(m));
    }
    nlohmann::json j{{"mode", o.mode},
                     {"exact", req.exact},
                     {"components", comps},
                     {"verdict", verdict}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::ostringstream hs;
    if (sub == "m12") hs << "components: " << comps.dump() << "\n";
    hs << "verdict: " << verdict << "\n";
    if (o.mode == "convergent") hs << "note: " << kConvergentLabel << "\n";
    emit(out, j, o.json, hs.str());
    return 0;
  }

  if (sub == "certify") {
    if (o.fiber.empty()) throw ParseError("--fiber is required");
    Certificate cert = certify_fiber(p, parse_fiber(o.fiber, p.dim));
    std::ostringstream hs;
    hs << "verdict: "
       << (cert.verdict == CertVerdict::Certified ? "Certified" : "Unknown") << "\n";
    for (int fl : cert.failing_levels)
      hs << "failing level " << fl << " (exp=" << cert.levels[fl].area_exp.str()
         << ")\n";
    emit(out, to_json(cert), o.json, hs.str());
    return 0;
  }

  if (sub == "scan") {
    auto results = scan_fibers(p, grid);
    nlohmann::json j = nlohmann::json::array();
    std::ostringstream hs;
    for (const auto& [fiber, cert] : results) {
      j.push_back(to_json(cert));
      hs << "certified fiber (";
      for (Eigen::Index k = 0; k < fiber.size(); ++k)
        hs << (k ? "," : "") << fiber[k].str();
      hs << ")\n";
    }
    emit(out, j, o.json, hs.str());
    return 0;
  }

  if (sub == "critical") {
    Superpotential w = superpotential(p);
    SolveOptions opts;
    opts.starts = starts;
    opts.residual_tol = tol;
    if (const char* seed = std::getenv("TORIC_FLOER_SEED"))
      opts.seed = std::strtoull(seed, nullptr, 10);
    std::vector<CriticalPoint> roots = solve_critical(w, opts);
    nlohmann::json j{{"superpotential", to_json(w)},
                     {"critical_points", nlohmann::json::array()}};
    std::ostringstream hs;
    if (roots.empty()) hs << "warning: no Newton start converged\n";
    for (const CriticalPoint& cp : roots) {
      j["critical_points"].push_back(to_json(cp));
      hs << "z=(";
      for (Eigen::Index k = 0; k < cp.z.size(); ++k)
        hs << (k ? "," : "") << cp.z[k].real() << (cp.z[k].imag() < 0 ? "-" : "+")
           << std::abs(cp.z[k].imag()) << "i";
      hs << ") residual=" << cp.residual << " interior=" << cp.interior << "\n";
    }
    emit(out, j, o.json, hs.str());
    return 0;
  }

  throw ParseError("unknown subcommand '" + sub + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Floer-cohomology non-displaceability certificates for toric "
               "Fano moment polytopes"};
  app.require_subcommand(1);

  static const std::vector<std::string> subs = {
      "validate", "vertices", "monotone", "areas",    "levels", "m12",
      "verdict",  "certify",  "scan",     "critical", "builtins"};
  CommonOpts o;
  int grid = 8;
  int starts = 200;
  double tol = 1e-12;
  std::string chosen;
  for (const std::string& name : subs) {
    CLI::App* cmd = app.add_subcommand(name);
    add_polytope_flags(cmd, o);
    cmd->add_option("--fiber", o.fiber, "fiber coordinates, exact rationals");
    cmd->add_option("--holonomy", o.holonomy,
                    "angle fractions of 2pi (p/q) or complex literals");
    cmd->add_option("--weights", o.weights, "per-facet weights d_j");
    cmd->add_option("--mode", o.mode, "standard|bfield|convergent")
        ->check(CLI::IsMember({"standard", "bfield", "convergent"}));
    cmd->add_option("--grid", grid, "scan denominator bound");
    cmd->add_option("--starts", starts, "Newton multi-start count");
    cmd->add_option("--tol", tol, "Newton residual tolerance");
    cmd->callback([&chosen, name] { chosen = name; });
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    return dispatch(chosen, o, grid, starts, tol, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace toricfloer
