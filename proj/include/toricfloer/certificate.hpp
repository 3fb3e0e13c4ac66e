#ifndef TORICFLOER_CERTIFICATE_HPP
#define TORICFLOER_CERTIFICATE_HPP

#include <optional>
#include <vector>

#include "toricfloer/floer.hpp"
#include "toricfloer/polytope.hpp"

namespace toricfloer {

enum class CertVerdict { Certified, Unknown };

struct CertificateLevel {
  Rational area_exp;
  std::vector<int> indices;            // facet indices of the level
  std::vector<GaussianRational> coeffs;  // empty when the level failed
};

/// Per-energy-level fully-supported kernel data at a fiber. Certified means
/// every level carries coefficients c with sum c_j v_j = 0 and all c_j != 0;
/// the assembled weights d realize exp(int_{beta_j} B-tilde) = c_j.
struct Certificate {
  FiberPoint fiber;
  std::vector<CertificateLevel> levels;
  std::vector<GaussianRational> weights;  // length N when Certified
  CertVerdict verdict = CertVerdict::Unknown;
  std::vector<int> failing_levels;  // indices into `levels`
  std::vector<std::string> warnings;
  std::string note;  // geometric realizability caveat
};

/// Exact basis of {c : Mc = 0} by rational Gauss-Jordan elimination.
std::vector<VectorXq> kernel_basis(const MatrixXq& m);

/// A kernel vector with every coordinate nonzero, when one exists.
/// Deterministic: c = sum_k t^(k-1) b_k over the kernel basis for the
/// smallest positive integer t leaving no coordinate zero.
std::optional<VectorXq> fully_supported_kernel_vector(const MatrixXq& m);

Certificate certify_fiber(const Polytope& p, const FiberPoint& a);

/// Certificate at the monotone fiber. Throws std::logic_error when a
/// Fano-flagged polytope fails there (the completeness argument says it
/// cannot); nullopt when no monotone fiber exists.
std::optional<Certificate> certify_monotone(const Polytope& p);

/// All certified fibers on the rational grid with coordinate denominators
/// dividing `denominator_bound`, in lexicographic grid order.
std::vector<std::pair<FiberPoint, Certificate>> scan_fibers(
    const Polytope& p, int denominator_bound);

}  // namespace toricfloer

#endif
