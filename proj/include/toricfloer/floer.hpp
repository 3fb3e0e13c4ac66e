#ifndef TORICFLOER_FLOER_HPP
#define TORICFLOER_FLOER_HPP

#include <complex>
#include <vector>

#include "toricfloer/novikov.hpp"
#include "toricfloer/polytope.hpp"

namespace toricfloer {

/// Maslov-index-2 disc class at a fiber: boundary v_j and exact area
/// exponent r_j = <A, v_j> - lambda_j (area = 2 pi r_j).
struct DiscClass {
  int facet_index;
  Eigen::VectorXi boundary;
  Rational area_exp;
};

struct DiscClassSet {
  FiberPoint fiber;
  int dim = 0;
  std::vector<DiscClass> classes;  // one per facet, in facet order
};

/// Holonomy point of a flat line bundle, x in (C*)^n. Non-unitary points
/// (|x_k| != 1) are allowed and are the point of the construction.
struct LocalSystem {
  Eigen::VectorXcd point;
  bool unitary = false;
};

LocalSystem make_local_system(Eigen::VectorXcd point);

/// Per-class weights d_j = exp(integral of B-tilde over beta_j), all nonzero.
struct BFieldWeights {
  Eigen::VectorXcd d;
};

struct EnergyLevel {
  Rational area_exp;
  std::vector<int> indices;  // facet indices sharing this energy
};

struct EnergyLevels {
  std::vector<EnergyLevel> levels;  // area_exp strictly increasing
};

enum class Verdict { NonVanishing, Vanishing };

DiscClassSet disc_classes(const Polytope& p, const FiberPoint& a);

EnergyLevels energy_levels(const DiscClassSet& d);

namespace detail {

template <class K>
K k_from_int(int v) {
  return K(static_cast<std::int64_t>(v));
}
template <>
inline std::complex<double> k_from_int<std::complex<double>>(int v) {
  return {static_cast<double>(v), 0.0};
}

template <class K>
K pow_int(const K& base, int e) {
  K acc = k_from_int<K>(1);
  K b = e < 0 ? k_from_int<K>(1) / base : base;
  for (int k = 0, m = e < 0 ? -e : e; k < m; ++k) acc = acc * b;
  return acc;
}

}  // namespace detail

/// Component i of the weighted differential:
///   (-1)^n sum_j v_{ji} d_j x^{v_j} T^(2 pi r_j).
/// Exact over Gaussian rationals, floating over complex doubles.
template <class K>
std::vector<NovikovSeries<K>> m12(const DiscClassSet& dset,
                                  const std::vector<K>& holonomy,
                                  const std::vector<K>& weights) {
  const int n = dset.dim;
  if (static_cast<int>(holonomy.size()) != n)
    throw DomainError("holonomy dimension mismatch");
  if (weights.size() != dset.classes.size())
    throw DomainError("weight vector length mismatch");
  for (const K& x : holonomy)
    if (coeff_is_zero(x)) throw DomainError("holonomy entry must be nonzero");
  for (const K& d : weights)
    if (coeff_is_zero(d)) throw DomainError("weight entry must be nonzero");

  std::vector<NovikovSeries<K>> out(n);
  for (std::size_t j = 0; j < dset.classes.size(); ++j) {
    const DiscClass& dc = dset.classes[j];
    K hol = detail::k_from_int<K>(1);
    for (int k = 0; k < n; ++k)
      hol = hol * detail::pow_int(holonomy[k], dc.boundary[k]);
    K base = weights[j] * hol;
    for (int i = 0; i < n; ++i) {
      if (dc.boundary[i] == 0) continue;
      K c = detail::k_from_int<K>(dc.boundary[i]) * base;
      if (n % 2 != 0) c = -c;
      out[i] = out[i] + NovikovSeries<K>::monomial(c, dc.area_exp);
    }
  }
  return out;
}

/// m12 read off on the point class: m_{1,2}(pt) = sum a_i [l_i] with
/// a_i equal to the coefficient of component i of m12. Same values,
/// exposed so the vanishing criterion can be inspected generator by
/// generator.
template <class K>
std::vector<NovikovSeries<K>> m12_pt(const DiscClassSet& dset,
                                     const std::vector<K>& holonomy,
                                     const std::vector<K>& weights) {
  return m12(dset, holonomy, weights);
}

std::vector<NovikovNumeric> m12(const DiscClassSet& dset, const LocalSystem& l,
                                const BFieldWeights& w);

/// Exact mode: NonVanishing iff every component is exactly zero.
Verdict floer_verdict(const std::vector<NovikovExact>& m);

/// Floating mode: NonVanishing iff every coefficient magnitude < 1e-10.
Verdict floer_verdict(const std::vector<NovikovNumeric>& m);

/// Trivial holonomy / unit weights of a given size, exact.
std::vector<GaussianRational> trivial_field(int size);

}  // namespace toricfloer

#endif
