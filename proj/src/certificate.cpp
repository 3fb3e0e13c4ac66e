#include "toricfloer/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "toricfloer/linalg.hpp"

namespace toricfloer {

std::vector<VectorXq> kernel_basis(const MatrixXq& m) { return null_space(m); }

std::optional<VectorXq> fully_supported_kernel_vector(const MatrixXq& m) {
  std::vector<VectorXq> basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  const Eigen::Index cols = m.cols();
  // a coordinate identically zero on the kernel can never be fixed
  for (Eigen::Index c = 0; c < cols; ++c) {
    bool all_zero = true;
    for (const VectorXq& b : basis)
      if (!b[c].is_zero()) all_zero = false;
    if (all_zero) return std::nullopt;
  }
  // each coordinate of sum t^(k-1) b_k is a nonzero polynomial in t of
  // degree < dim, so at most (dim-1)*cols + 1 candidates are needed
  const std::int64_t dim = static_cast<std::int64_t>(basis.size());
  const std::int64_t t_max = (dim - 1) * static_cast<std::int64_t>(cols) + 1;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    VectorXq c = VectorXq::Constant(cols, Rational(0));
    Rational tk(1);
    for (const VectorXq& b : basis) {
      for (Eigen::Index i = 0; i < cols; ++i) c[i] += tk * b[i];
      tk *= Rational(t);
    }
    bool ok = true;
    for (Eigen::Index i = 0; i < cols; ++i)
      if (c[i].is_zero()) ok = false;
    if (ok) return c;
  }
  return std::nullopt;  // unreachable by the degree bound
}

Certificate certify_fiber(const Polytope& p, const FiberPoint& a) {
  DiscClassSet dset = disc_classes(p, a);
  EnergyLevels lvls = energy_levels(dset);

  Certificate cert;
  cert.fiber = a;
  cert.note =
      "B-tilde is reported as the period vector (log c_1, ..., log c_N), "
      "principal branch; geometric realizability as a two-form is not checked";
  if (!p.fano_asserted)
    cert.warnings.push_back(
        "polytope is not flagged Fano; positivity of the ambient manifold "
        "is assumed, not verified");

  cert.weights.assign(static_cast<std::size_t>(p.facet_count()),
                      GaussianRational(0));
  bool all_ok = true;
  for (std::size_t li = 0; li < lvls.levels.size(); ++li) {
    const EnergyLevel& lvl = lvls.levels[li];
    CertificateLevel out;
    out.area_exp = lvl.area_exp;
    out.indices = lvl.indices;

    MatrixXq m(p.dim, static_cast<Eigen::Index>(lvl.indices.size()));
    for (std::size_t c = 0; c < lvl.indices.size(); ++c)
      for (int r = 0; r < p.dim; ++r)
        m(r, static_cast<Eigen::Index>(c)) =
            Rational(p.facets[lvl.indices[c]].normal[r]);
    auto c = fully_supported_kernel_vector(m);
    if (c) {
      for (std::size_t k = 0; k < lvl.indices.size(); ++k) {
        out.coeffs.emplace_back((*c)[static_cast<Eigen::Index>(k)]);
        cert.weights[lvl.indices[k]] = GaussianRational((*c)[static_cast<Eigen::Index>(k)]);
      }
    } else {
      all_ok = false;
      cert.failing_levels.push_back(static_cast<int>(li));
    }
    cert.levels.push_back(std::move(out));
  }
  if (all_ok) {
    cert.verdict = CertVerdict::Certified;
  } else {
    cert.verdict = CertVerdict::Unknown;
    cert.weights.clear();
  }
  return cert;
}

std::optional<Certificate> certify_monotone(const Polytope& p) {
  auto mono = monotone_fiber(p);
  if (!mono) return std::nullopt;
  Certificate cert = certify_fiber(p, mono->first);
  if (cert.verdict != CertVerdict::Certified && p.fano_asserted)
    throw std::logic_error(
        "internal inconsistency: monotone fiber of a Fano-flagged polytope "
        "failed certification");
  return cert;
}

std::vector<std::pair<FiberPoint, Certificate>> scan_fibers(
    const Polytope& p, int denominator_bound) {
  if (denominator_bound < 1 || denominator_bound > 64)
    throw DomainError("denominator bound must be in [1, 64]");
  // bounding box from the vertex set
  std::vector<VectorXq> verts = vertices(p);
  std::vector<std::int64_t> lo(p.dim), hi(p.dim);
  const Rational step(1, denominator_bound);
  for (int k = 0; k < p.dim; ++k) {
    Rational mn = verts[0][k], mx = verts[0][k];
    for (const VectorXq& v : verts) {
      if (v[k] < mn) mn = v[k];
      if (mx < v[k]) mx = v[k];
    }
    // integer grid indices i with lo <= i <= hi covering [mn, mx]
    lo[k] = static_cast<std::int64_t>(
        std::floor(mn.to_double() * denominator_bound)) - 1;
    hi[k] = static_cast<std::int64_t>(
        std::ceil(mx.to_double() * denominator_bound)) + 1;
  }

  std::vector<std::pair<FiberPoint, Certificate>> out;
  std::vector<std::int64_t> idx(lo);
  while (true) {
    FiberPoint a(p.dim);
    for (int k = 0; k < p.dim; ++k) a[k] = Rational(idx[k]) * step;
    if (contains_interior(p, a)) {
      Certificate cert = certify_fiber(p, a);
      if (cert.verdict == CertVerdict::Certified)
        out.emplace_back(a, std::move(cert));
    }
    int k = p.dim - 1;
    while (k >= 0 && idx[k] == hi[k]) {
      idx[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++idx[k];
  }
  return out;
}

}  // namespace toricfloer
