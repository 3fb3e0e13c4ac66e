#ifndef TORICFLOER_MIRROR_HPP
#define TORICFLOER_MIRROR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "toricfloer/floer.hpp"
#include "toricfloer/polytope.hpp"

namespace toricfloer {

/// Laurent polynomial W(z) = sum_j e^(lambda_j) z^(v_j), one term per facet,
/// obtained from the disc potential under the substitution T^(2 pi) = e^-1.
struct Superpotential {
  int dim = 0;
  struct Term {
    Eigen::VectorXi exponents;  // v_j, primitive
    Rational log_coeff;         // lambda_j
  };
  std::vector<Term> terms;
};

/// One logarithmic-derivative equation E_i(z) = sum_j v_{ji} e^(lambda_j) z^(v_j).
struct LaurentExpr {
  struct Term {
    Eigen::VectorXi exponents;
    double coeff;
  };
  std::vector<Term> terms;
};

struct CriticalPoint {
  Eigen::VectorXcd z;        // in (C*)^n
  double residual;           // max_i |E_i(z)|
  Eigen::VectorXd fiber;     // theta_k = -log|z_k|
  Eigen::VectorXd holonomy_angles;  // h_k = arg z_k
  bool interior;             // theta strictly inside the polytope (tol 1e-9)
};

struct SolveOptions {
  int starts = 200;
  int max_iterations = 100;
  double residual_tol = 1e-10;
  double dedup_tol = 1e-8;
  std::uint64_t seed = 20120814;
};

enum class ConvergentVerdict { NonVanishingConvergent, VanishingConvergent };

Superpotential superpotential(const Polytope& p);

std::vector<LaurentExpr> critical_equations(const Superpotential& w);

std::complex<double> eval_laurent(const LaurentExpr& e, const Eigen::VectorXcd& z);

/// Multi-start damped Newton on E(z) = 0 in log-coordinates. Roots are
/// deduplicated modulo 2 pi i, filtered by residual, and sorted by |z_k|
/// lexicographically so output is independent of start order. An empty
/// list means no start converged (a warning, not an error).
std::vector<CriticalPoint> solve_critical(const Superpotential& w,
                                          const SolveOptions& opts = {});

/// Evaluates m12 through the substitution T^(2 pi) = e^-1. The result is
/// NOT a displaceability certificate: the convergent version is not
/// invariant under Hamiltonian isotopy.
ConvergentVerdict convergent_verdict(const DiscClassSet& d, const LocalSystem& l,
                                     const BFieldWeights& w, double tol = 1e-10);

/// Floating-fiber variant used to close the loop with critical points
/// (theta is typically irrational there).
ConvergentVerdict convergent_verdict_at(const Polytope& p,
                                        const Eigen::VectorXd& theta,
                                        const Eigen::VectorXd& holonomy_angles,
                                        const Eigen::VectorXcd& weights,
                                        double tol = 1e-10);

}  // namespace toricfloer

#endif
