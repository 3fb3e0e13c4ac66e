#ifndef TORICFLOER_POLYTOPE_HPP
#define TORICFLOER_POLYTOPE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toricfloer/rational.hpp"

namespace toricfloer {

/// Malformed input: bad syntax, dimension mismatch, or a facet system that
/// does not cut out a valid polytope.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valid data used outside its domain (fiber on the boundary, zero weight...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Facet {
  Eigen::VectorXi normal;  // inward, primitive
  Rational offset;
};

/// Moment polytope P = {x : <x, v_j> >= lambda_j}, bounded and
/// full-dimensional with every facet essential. Construct via
/// make_polytope or parse_polytope; both enforce the invariants.
struct Polytope {
  std::string name;
  int dim = 0;
  std::vector<Facet> facets;
  bool fano_asserted = false;  // positivity is never verified, only asserted

  int facet_count() const { return static_cast<int>(facets.size()); }
};

using FiberPoint = VectorXq;

struct ValidationReport {
  bool bounded = false;
  bool full_dimensional = false;
  bool facets_essential = false;
  std::optional<bool> smooth;  // unset when the check is skipped (n > 4)
  bool reflexive = false;
  std::vector<std::string> warnings;
};

/// Normalizes normals to primitive form (rescaling offsets accordingly) and
/// checks all polytope invariants. Throws ParseError on violation.
Polytope make_polytope(std::string name, int dim, std::vector<Facet> facets,
                       bool fano_asserted = false);

/// Parses the JSON polytope document {name, dim, facets:[{normal, offset}]}.
Polytope parse_polytope(const std::string& text);

/// Complete duplicate-free vertex set, by exhaustive intersection of
/// n-subsets of facets.
std::vector<VectorXq> vertices(const Polytope& p);

ValidationReport validate(const Polytope& p);

/// Fiber A with <A, v_j> - lambda_j = r > 0 for all j, when the linear
/// system is consistent; solved exactly.
std::optional<std::pair<FiberPoint, Rational>> monotone_fiber(const Polytope& p);

/// Strict interior test, exact.
bool contains_interior(const Polytope& p, const FiberPoint& a);

}  // namespace toricfloer

#endif
