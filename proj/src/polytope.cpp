#include "toricfloer/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "toricfloer/linalg.hpp"

namespace toricfloer {
namespace {

// all k-subsets of {0..n-1}, lexicographic
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

MatrixXq normal_rows(const std::vector<Facet>& facets, int dim) {
  MatrixXq m(static_cast<Eigen::Index>(facets.size()), dim);
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Rational(facets[i].normal[j]);
  return m;
}

bool all_nonneg(const std::vector<Facet>& facets, const VectorXq& d) {
  for (const Facet& f : facets)
    if (dot(d, f.normal) < Rational(0)) return false;
  return true;
}

// Extreme rays (and lineality directions) of {d : <d, v_j> >= 0}.
// Empty result means the cone is trivial, i.e. the polytope is bounded.
std::vector<VectorXq> recession_rays(const std::vector<Facet>& facets, int dim) {
  std::vector<VectorXq> rays;
  MatrixXq v = normal_rows(facets, dim);
  Rref r = rref(v);
  if (r.rank < dim) {
    // lineality: directions orthogonal to every normal
    for (const VectorXq& d : null_space(v)) {
      rays.push_back(d);
      rays.push_back(-d);
    }
    return rays;
  }
  auto push_if_feasible = [&](const VectorXq& d) {
    if (all_nonneg(facets, d)) rays.push_back(d);
  };
  if (dim == 1) {
    VectorXq d(1);
    d[0] = Rational(1);
    push_if_feasible(d);
    push_if_feasible(-d);
    return rays;
  }
  const int n = static_cast<int>(facets.size());
  for_each_subset(n, dim - 1, [&](const std::vector<int>& idx) {
    MatrixXq sub(dim - 1, dim);
    for (int i = 0; i < dim - 1; ++i)
      for (int j = 0; j < dim; ++j) sub(i, j) = Rational(facets[idx[i]].normal[j]);
    auto ns = null_space(sub);
    if (ns.size() != 1) return;
    push_if_feasible(ns[0]);
    push_if_feasible(-ns[0]);
  });
  return rays;
}

bool satisfies_all(const std::vector<Facet>& facets, const VectorXq& x) {
  for (const Facet& f : facets)
    if (dot(x, f.normal) < f.offset) return false;
  return true;
}

std::vector<VectorXq> vertex_set(const std::vector<Facet>& facets, int dim) {
  std::vector<VectorXq> verts;
  const int n = static_cast<int>(facets.size());
  for_each_subset(n, dim, [&](const std::vector<int>& idx) {
    MatrixXq a(dim, dim);
    VectorXq b(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) a(i, j) = Rational(facets[idx[i]].normal[j]);
      b[i] = facets[idx[i]].offset;
    }
    auto x = solve_unique(a, b);
    if (!x || !satisfies_all(facets, *x)) return;
    for (const VectorXq& v : verts)
      if (v == *x) return;
    verts.push_back(*x);
  });
  return verts;
}

void check_essential(const std::vector<Facet>& facets, int dim) {
  for (std::size_t j = 0; j < facets.size(); ++j) {
    std::vector<Facet> rest;
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (k != j) rest.push_back(facets[k]);
    MatrixXq v = normal_rows(rest, dim);
    if (rref(v).rank < dim) continue;  // removal unbounds P: essential
    bool essential = false;
    for (const VectorXq& d : recession_rays(rest, dim))
      if (dot(d, facets[j].normal) < Rational(0)) essential = true;
    if (!essential)
      for (const VectorXq& x : vertex_set(rest, dim))
        if (dot(x, facets[j].normal) < facets[j].offset) essential = true;
    if (!essential)
      throw ParseError("inessential facet at index " + std::to_string(j));
  }
}

}  // namespace

Polytope make_polytope(std::string name, int dim, std::vector<Facet> facets,
                       bool fano_asserted) {
  if (dim < 1) throw ParseError("dim must be positive");
  if (static_cast<int>(facets.size()) <= dim)
    throw ParseError("need more than dim facets");
  for (Facet& f : facets) {
    if (f.normal.size() != dim) throw ParseError("normal dimension mismatch");
    long long g = 0;
    for (int k = 0; k < dim; ++k) g = std::gcd(g, static_cast<long long>(f.normal[k]));
    if (g == 0) throw ParseError("zero facet normal");
    if (g > 1) {
      for (int k = 0; k < dim; ++k) f.normal[k] /= static_cast<int>(g);
      f.offset /= Rational(g);
    }
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j)
      if (facets[i].normal == facets[j].normal)
        throw ParseError("duplicate facet normal");

  if (!recession_rays(facets, dim).empty())
    throw ParseError("polytope is unbounded");
  std::vector<VectorXq> verts = vertex_set(facets, dim);
  if (verts.empty()) throw ParseError("polytope is empty");
  VectorXq centroid = VectorXq::Constant(dim, Rational(0));
  for (const VectorXq& v : verts) centroid += v;
  Rational inv = Rational(1, static_cast<std::int64_t>(verts.size()));
  for (int k = 0; k < dim; ++k) centroid[k] *= inv;
  for (const Facet& f : facets)
    if (!(dot(centroid, f.normal) > f.offset))
      throw ParseError("polytope has empty interior");
  check_essential(facets, dim);

  Polytope p;
  p.name = std::move(name);
  p.dim = dim;
  p.facets = std::move(facets);
  p.fano_asserted = fano_asserted;
  return p;
}

Polytope parse_polytope(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polytope document: ") + e.what());
  }
  try {
    std::string name = doc.at("name").get<std::string>();
    int dim = doc.at("dim").get<int>();
    std::vector<Facet> facets;
    for (const auto& fj : doc.at("facets")) {
      Facet f;
      const auto& nj = fj.at("normal");
      f.normal.resize(static_cast<Eigen::Index>(nj.size()));
      for (std::size_t k = 0; k < nj.size(); ++k)
        f.normal[static_cast<Eigen::Index>(k)] = nj.at(k).get<int>();
      const auto& oj = fj.at("offset");
      if (oj.is_string())
        f.offset = Rational::parse(oj.get<std::string>());
      else if (oj.is_number_integer())
        f.offset = Rational(oj.get<std::int64_t>());
      else
        throw ParseError("offset must be an integer or a \"p/q\" string");
      facets.push_back(std::move(f));
    }
    bool fano = doc.value("fano_asserted", false);
    return make_polytope(std::move(name), dim, std::move(facets), fano);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polytope document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("polytope document: ") + e.what());
  }
}

std::vector<VectorXq> vertices(const Polytope& p) {
  return vertex_set(p.facets, p.dim);
}

ValidationReport validate(const Polytope& p) {
  ValidationReport rep;
  rep.bounded = true;            // enforced at construction
  rep.full_dimensional = true;
  rep.facets_essential = true;

  std::vector<VectorXq> verts = vertices(p);
  if (p.dim > 4) {
    rep.warnings.push_back("smoothness check skipped for dim > 4");
  } else {
    bool smooth = true;
    for (const VectorXq& v : verts) {
      std::vector<int> active;
      for (int j = 0; j < p.facet_count(); ++j)
        if (dot(v, p.facets[j].normal) == p.facets[j].offset) active.push_back(j);
      if (static_cast<int>(active.size()) != p.dim) {
        smooth = false;
        break;
      }
      Eigen::MatrixXi m(p.dim, p.dim);
      for (int i = 0; i < p.dim; ++i) m.row(i) = p.facets[active[i]].normal.transpose();
      Rational d = determinant(m);
      if (d != Rational(1) && d != Rational(-1)) {
        smooth = false;
        break;
      }
    }
    rep.smooth = smooth;
  }

  bool offsets_minus_one = true;
  for (const Facet& f : p.facets)
    if (f.offset != Rational(-1)) offsets_minus_one = false;
  bool integral = true;
  for (const VectorXq& v : verts)
    for (int k = 0; k < p.dim; ++k)
      if (!v[k].is_integer()) integral = false;
  VectorXq origin = VectorXq::Constant(p.dim, Rational(0));
  rep.reflexive = offsets_minus_one && integral && contains_interior(p, origin);

  if (p.fano_asserted)
    rep.warnings.push_back("Fano/positivity not verified — asserted by user");
  return rep;
}

std::optional<std::pair<FiberPoint, Rational>> monotone_fiber(const Polytope& p) {
  const int nfac = p.facet_count();
  MatrixXq a(nfac, p.dim + 1);
  VectorXq b(nfac);
  for (int j = 0; j < nfac; ++j) {
    for (int k = 0; k < p.dim; ++k) a(j, k) = Rational(p.facets[j].normal[k]);
    a(j, p.dim) = Rational(-1);
    b[j] = p.facets[j].offset;
  }
  auto sol = solve_unique(a, b);
  if (!sol) return std::nullopt;
  FiberPoint fiber = sol->head(p.dim);
  Rational r = (*sol)[p.dim];
  if (!(r > Rational(0)) || !contains_interior(p, fiber)) return std::nullopt;
  return std::make_pair(std::move(fiber), r);
}

bool contains_interior(const Polytope& p, const FiberPoint& a) {
  if (a.size() != p.dim) throw DomainError("fiber dimension mismatch");
  for (const Facet& f : p.facets)
    if (!(dot(a, f.normal) > f.offset)) return false;
  return true;
}

}  // namespace toricfloer
