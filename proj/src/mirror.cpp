#include "toricfloer/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace toricfloer {
namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double a) {
  // to (-pi, pi]
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

double angle_dist(double a, double b) {
  double d = std::abs(wrap_angle(a - b));
  return std::min(d, 2.0 * kPi - d);
}

struct NewtonSystem {
  // F_i(w) = sum_j v_{ji} e^(lambda_j + <v_j, w>), J_ik = dF_i/dw_k
  const Superpotential& w;

  Eigen::VectorXcd value(const Eigen::VectorXcd& wv) const {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(w.dim);
    for (const auto& t : w.terms) {
      std::complex<double> e = t.log_coeff.to_double();
      for (int k = 0; k < w.dim; ++k)
        e += static_cast<double>(t.exponents[k]) * wv[k];
      std::complex<double> m = std::exp(e);
      for (int i = 0; i < w.dim; ++i)
        f[i] += static_cast<double>(t.exponents[i]) * m;
    }
    return f;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& wv) const {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(w.dim, w.dim);
    for (const auto& t : w.terms) {
      std::complex<double> e = t.log_coeff.to_double();
      for (int k = 0; k < w.dim; ++k)
        e += static_cast<double>(t.exponents[k]) * wv[k];
      std::complex<double> m = std::exp(e);
      for (int i = 0; i < w.dim; ++i)
        for (int k = 0; k < w.dim; ++k)
          j(i, k) += static_cast<double>(t.exponents[i]) *
                     static_cast<double>(t.exponents[k]) * m;
    }
    return j;
  }
};

double max_abs(const Eigen::VectorXcd& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

Superpotential superpotential(const Polytope& p) {
  Superpotential w;
  w.dim = p.dim;
  for (const Facet& f : p.facets) w.terms.push_back({f.normal, f.offset});
  return w;
}

std::vector<LaurentExpr> critical_equations(const Superpotential& w) {
  std::vector<LaurentExpr> eqs(w.dim);
  for (const auto& t : w.terms) {
    double c = std::exp(t.log_coeff.to_double());
    for (int i = 0; i < w.dim; ++i) {
      if (t.exponents[i] == 0) continue;
      eqs[i].terms.push_back({t.exponents, static_cast<double>(t.exponents[i]) * c});
    }
  }
  return eqs;
}

std::complex<double> eval_laurent(const LaurentExpr& e, const Eigen::VectorXcd& z) {
  std::complex<double> acc = 0.0;
  for (const auto& t : e.terms) {
    std::complex<double> m = t.coeff;
    for (Eigen::Index k = 0; k < z.size(); ++k)
      m *= std::pow(z[k], static_cast<double>(t.exponents[k]));
    acc += m;
  }
  return acc;
}

std::vector<CriticalPoint> solve_critical(const Superpotential& w,
                                          const SolveOptions& opts) {
  NewtonSystem sys{w};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> modulus(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

  std::vector<Eigen::VectorXcd> roots;  // log-coordinates, Im in (-pi, pi]
  std::vector<double> residuals;

  for (int s = 0; s < opts.starts; ++s) {
    Eigen::VectorXcd wv(w.dim);
    for (int k = 0; k < w.dim; ++k)
      wv[k] = std::complex<double>(modulus(rng), angle(rng));

    Eigen::VectorXcd f = sys.value(wv);
    double res = max_abs(f);
    bool ok = false;
    for (int it = 0; it < opts.max_iterations; ++it) {
      if (res < opts.residual_tol) {
        ok = true;
        break;
      }
      Eigen::MatrixXcd j = sys.jacobian(wv);
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(j);
      if (!lu.isInvertible()) break;
      Eigen::VectorXcd step = lu.solve(-f);
      double scale = 1.0;
      bool improved = false;
      for (int h = 0; h < 12; ++h) {
        Eigen::VectorXcd cand = wv + scale * step;
        Eigen::VectorXcd fc = sys.value(cand);
        double rc = max_abs(fc);
        if (rc < res) {
          wv = cand;
          f = fc;
          res = rc;
          improved = true;
          break;
        }
        scale *= 0.5;
      }
      if (!improved) break;
    }
    if (!ok && res < opts.residual_tol) ok = true;
    if (!ok) continue;

    for (int k = 0; k < w.dim; ++k)
      wv[k] = std::complex<double>(wv[k].real(), wrap_angle(wv[k].imag()));
    bool dup = false;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      bool close = true;
      for (int k = 0; k < w.dim; ++k) {
        if (std::abs(roots[r][k].real() - wv[k].real()) > opts.dedup_tol ||
            angle_dist(roots[r][k].imag(), wv[k].imag()) > opts.dedup_tol) {
          close = false;
          break;
        }
      }
      if (close) {
        dup = true;
        if (res < residuals[r]) {
          roots[r] = wv;
          residuals[r] = res;
        }
        break;
      }
    }
    if (!dup) {
      roots.push_back(wv);
      residuals.push_back(res);
    }
  }

  std::vector<CriticalPoint> out;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    CriticalPoint cp;
    cp.z.resize(w.dim);
    cp.fiber.resize(w.dim);
    cp.holonomy_angles.resize(w.dim);
    for (int k = 0; k < w.dim; ++k) {
      cp.z[k] = std::exp(roots[r][k]);
      cp.fiber[k] = -roots[r][k].real();
      cp.holonomy_angles[k] = roots[r][k].imag();
    }
    cp.residual = residuals[r];
    cp.interior = true;
    for (const auto& t : w.terms) {
      double margin = -t.log_coeff.to_double();
      for (int k = 0; k < w.dim; ++k)
        margin += static_cast<double>(t.exponents[k]) * cp.fiber[k];
      if (margin <= 1e-9) cp.interior = false;
    }
    out.push_back(std::move(cp));
  }

  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    for (Eigen::Index k = 0; k < a.z.size(); ++k) {
      double ma = std::abs(a.z[k]), mb = std::abs(b.z[k]);
      if (std::abs(ma - mb) > 1e-9) return ma < mb;
    }
    for (Eigen::Index k = 0; k < a.z.size(); ++k) {
      double aa = std::arg(a.z[k]), ab = std::arg(b.z[k]);
      if (std::abs(aa - ab) > 1e-9) return aa < ab;
    }
    return false;
  });
  return out;
}

ConvergentVerdict convergent_verdict(const DiscClassSet& d, const LocalSystem& l,
                                     const BFieldWeights& w, double tol) {
  std::vector<NovikovNumeric> m = m12(d, l, w);
  for (const NovikovNumeric& c : m)
    if (std::abs(convergent_eval(c)) >= tol)
      return ConvergentVerdict::VanishingConvergent;
  return ConvergentVerdict::NonVanishingConvergent;
}

ConvergentVerdict convergent_verdict_at(const Polytope& p,
                                        const Eigen::VectorXd& theta,
                                        const Eigen::VectorXd& holonomy_angles,
                                        const Eigen::VectorXcd& weights,
                                        double tol) {
  if (theta.size() != p.dim || holonomy_angles.size() != p.dim ||
      weights.size() != p.facet_count())
    throw DomainError("dimension mismatch");
  const int n = p.dim;
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(n);
  for (int j = 0; j < p.facet_count(); ++j) {
    const Facet& f = p.facets[j];
    double area = -f.offset.to_double();
    double phase = 0.0;
    for (int k = 0; k < n; ++k) {
      area += static_cast<double>(f.normal[k]) * theta[k];
      phase += static_cast<double>(f.normal[k]) * holonomy_angles[k];
    }
    if (area <= 0.0) throw DomainError("fiber is not interior");
    if (weights[j] == std::complex<double>(0.0, 0.0))
      throw DomainError("weight entry must be nonzero");
    std::complex<double> term =
        weights[j] * std::exp(std::complex<double>(-area, phase));
    for (int i = 0; i < n; ++i)
      values[i] += static_cast<double>(f.normal[i]) * term;
  }
  if (n % 2 != 0) values = -values;
  for (int i = 0; i < n; ++i)
    if (std::abs(values[i]) >= tol) return ConvergentVerdict::VanishingConvergent;
  return ConvergentVerdict::NonVanishingConvergent;
}

}  // namespace toricfloer
