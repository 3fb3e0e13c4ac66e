#include "toricfloer/floer.hpp"

namespace toricfloer {

LocalSystem make_local_system(Eigen::VectorXcd point) {
  LocalSystem l;
  bool unitary = true;
  for (Eigen::Index k = 0; k < point.size(); ++k) {
    if (point[k] == std::complex<double>(0.0, 0.0))
      throw DomainError("holonomy entry must be nonzero");
    if (std::abs(std::abs(point[k]) - 1.0) > 1e-12) unitary = false;
  }
  l.point = std::move(point);
  l.unitary = unitary;
  return l;
}

DiscClassSet disc_classes(const Polytope& p, const FiberPoint& a) {
  if (!contains_interior(p, a))
    throw DomainError("fiber is not in the interior of the polytope");
  DiscClassSet out;
  out.fiber = a;
  out.dim = p.dim;
  for (int j = 0; j < p.facet_count(); ++j) {
    DiscClass dc;
    dc.facet_index = j;
    dc.boundary = p.facets[j].normal;
    dc.area_exp = dot(a, p.facets[j].normal) - p.facets[j].offset;
    out.classes.push_back(std::move(dc));
  }
  return out;
}

EnergyLevels energy_levels(const DiscClassSet& d) {
  EnergyLevels out;
  for (const DiscClass& dc : d.classes) {
    auto it = out.levels.begin();
    while (it != out.levels.end() && it->area_exp < dc.area_exp) ++it;
    if (it != out.levels.end() && it->area_exp == dc.area_exp) {
      it->indices.push_back(dc.facet_index);
    } else {
      EnergyLevel lvl;
      lvl.area_exp = dc.area_exp;
      lvl.indices.push_back(dc.facet_index);
      out.levels.insert(it, std::move(lvl));
    }
  }
  return out;
}

std::vector<NovikovNumeric> m12(const DiscClassSet& dset, const LocalSystem& l,
                                const BFieldWeights& w) {
  std::vector<std::complex<double>> x(l.point.data(), l.point.data() + l.point.size());
  std::vector<std::complex<double>> d(w.d.data(), w.d.data() + w.d.size());
  return m12(dset, x, d);
}

Verdict floer_verdict(const std::vector<NovikovExact>& m) {
  for (const NovikovExact& c : m)
    if (!c.is_zero()) return Verdict::Vanishing;
  return Verdict::NonVanishing;
}

Verdict floer_verdict(const std::vector<NovikovNumeric>& m) {
  for (const NovikovNumeric& c : m)
    for (const auto& t : c.terms())
      if (std::abs(t.coeff) >= 1e-10) return Verdict::Vanishing;
  return Verdict::NonVanishing;
}

std::vector<GaussianRational> trivial_field(int size) {
  return std::vector<GaussianRational>(static_cast<std::size_t>(size),
                                       GaussianRational(1));
}

}  // namespace toricfloer
