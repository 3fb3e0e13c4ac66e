#include "toricfloer/builtins.hpp"

namespace toricfloer {
namespace {

Facet facet(std::initializer_list<int> normal, Rational offset) {
  Facet f;
  f.normal.resize(static_cast<Eigen::Index>(normal.size()));
  int k = 0;
  for (int v : normal) f.normal[k++] = v;
  f.offset = offset;
  return f;
}

void require_no_param(const std::optional<Rational>& eps, const std::string& name) {
  if (eps) throw ParseError("builtin '" + name + "' takes no parameter");
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"segment",       "cp1",          "cp2",
          "cp3",           "hirzebruch1",  "blowup3",
          "cube_blowup_a", "cube_blowup_b", "cube_reflexive"};
}

Polytope segment_polytope() {
  return make_polytope("segment", 1,
                       {facet({1}, Rational(-1)), facet({-1}, Rational(-1))},
                       /*fano_asserted=*/true);
}

Polytope cp_polytope(int n) {
  if (n < 1 || n > 3) throw ParseError("cp(n) supported for n in 1..3");
  std::vector<Facet> facets;
  for (int i = 0; i < n; ++i) {
    Facet f;
    f.normal = Eigen::VectorXi::Zero(n);
    f.normal[i] = 1;
    f.offset = Rational(0);
    facets.push_back(std::move(f));
  }
  Facet last;
  last.normal = Eigen::VectorXi::Constant(n, -1);
  last.offset = Rational(-1);
  facets.push_back(std::move(last));
  return make_polytope("cp" + std::to_string(n), n, std::move(facets), true);
}

Polytope hirzebruch1_polytope() {
  // counterclockwise: v1 = (-1,-1), v2 = (1,0), v3 = (1,1), v4 = (0,1)
  return make_polytope("hirzebruch1", 2,
                       {facet({-1, -1}, Rational(-1)), facet({1, 0}, Rational(-1)),
                        facet({1, 1}, Rational(-1)), facet({0, 1}, Rational(-1))},
                       true);
}

Polytope blowup3_polytope(Rational eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1, 3)))
    throw ParseError("blowup3 requires 0 < epsilon < 1/3");
  Rational m1e = -(Rational(1) - eps);
  // counterclockwise from v1 = (-1,-1)
  return make_polytope("blowup3", 2,
                       {facet({-1, -1}, Rational(-1)), facet({0, -1}, m1e),
                        facet({1, 0}, Rational(0)), facet({1, 1}, eps),
                        facet({0, 1}, Rational(0)), facet({-1, 0}, m1e)},
                       true);
}

Polytope cube_blowup_a_polytope(Rational eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1)))
    throw ParseError("cube_blowup_a requires 0 < epsilon < 1");
  Rational in = Rational(-1) + eps;
  Rational cut = -(Rational(1) - eps);
  return make_polytope(
      "cube_blowup_a", 3,
      {facet({1, 0, 0}, in), facet({0, 1, 0}, in), facet({0, 0, 1}, in),
       facet({-1, 0, 0}, Rational(-1)), facet({0, -1, 0}, Rational(-1)),
       facet({0, 0, -1}, Rational(-1)), facet({-1, -1, -1}, cut),
       facet({1, 1, 1}, Rational(-1))},
      true);
}

Polytope cube_blowup_b_polytope(Rational eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1)))
    throw ParseError("cube_blowup_b requires 0 < epsilon < 1");
  Rational cut = -(Rational(1) - eps);
  return make_polytope(
      "cube_blowup_b", 3,
      {facet({1, 0, 0}, Rational(-1)), facet({0, 1, 0}, Rational(-1)),
       facet({0, 0, 1}, Rational(-1)), facet({-1, 0, 0}, cut),
       facet({0, -1, 0}, cut), facet({0, 0, -1}, cut),
       facet({-1, -1, -1}, cut), facet({1, 1, 1}, Rational(-1))},
      true);
}

Polytope cube_blowup_reflexive_polytope() {
  return make_polytope(
      "cube_reflexive", 3,
      {facet({1, 0, 0}, Rational(-1)), facet({0, 1, 0}, Rational(-1)),
       facet({0, 0, 1}, Rational(-1)), facet({-1, 0, 0}, Rational(-1)),
       facet({0, -1, 0}, Rational(-1)), facet({0, 0, -1}, Rational(-1)),
       facet({-1, -1, -1}, Rational(-1)), facet({1, 1, 1}, Rational(-1))},
      true);
}

Polytope builtin_polytope(const std::string& name, std::optional<Rational> eps) {
  if (name == "segment") {
    require_no_param(eps, name);
    return segment_polytope();
  }
  if (name == "cp1" || name == "cp2" || name == "cp3") {
    require_no_param(eps, name);
    return cp_polytope(name[2] - '0');
  }
  if (name == "hirzebruch1") {
    require_no_param(eps, name);
    return hirzebruch1_polytope();
  }
  if (name == "cube_reflexive") {
    require_no_param(eps, name);
    return cube_blowup_reflexive_polytope();
  }
  if (name == "blowup3" || name == "cube_blowup_a" || name == "cube_blowup_b") {
    if (!eps) throw ParseError("builtin '" + name + "' requires --param epsilon");
    if (name == "blowup3") return blowup3_polytope(*eps);
    if (name == "cube_blowup_a") return cube_blowup_a_polytope(*eps);
    return cube_blowup_b_polytope(*eps);
  }
  throw ParseError("unknown builtin '" + name + "'");
}

}  // namespace toricfloer
