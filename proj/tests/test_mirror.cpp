#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "toricfloer/builtins.hpp"
#include "toricfloer/certificate.hpp"
#include "toricfloer/mirror.hpp"

using namespace toricfloer;

namespace {

FiberPoint fiber2(Rational a, Rational b) {
  FiberPoint f(2);
  f << a, b;
  return f;
}

BFieldWeights unit_weights(int n) {
  BFieldWeights w;
  w.d = Eigen::VectorXcd::Ones(n);
  return w;
}

LocalSystem trivial_system(int n) {
  return make_local_system(Eigen::VectorXcd::Ones(n));
}

}  // namespace

TEST_CASE("superpotential mirrors the facet data") {
  Superpotential seg = superpotential(segment_polytope());
  REQUIRE(seg.terms.size() == 2);
  CHECK(seg.terms[0].exponents[0] == 1);
  CHECK(seg.terms[0].log_coeff == Rational(-1));
  CHECK(seg.terms[1].exponents[0] == -1);
  CHECK(seg.terms[1].log_coeff == Rational(-1));

  Polytope h = hirzebruch1_polytope();
  Superpotential hw = superpotential(h);
  REQUIRE(hw.terms.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(hw.terms[j].exponents == h.facets[j].normal);
    CHECK(hw.terms[j].log_coeff == h.facets[j].offset);
  }
}

TEST_CASE("critical_equations and eval_laurent on cp2") {
  Superpotential w = superpotential(cp_polytope(2));
  auto eqs = critical_equations(w);
  REQUIRE(eqs.size() == 2);
  // E_1 = z1 - e^-1 z1^-1 z2^-1
  Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(2);
  std::complex<double> e1 = eval_laurent(eqs[0], ones);
  CHECK(std::abs(e1 - (1.0 - std::exp(-1.0))) < 1e-14);
  std::complex<double> e2 = eval_laurent(eqs[1], ones);
  CHECK(std::abs(e2 - (1.0 - std::exp(-1.0))) < 1e-14);
}

TEST_CASE("solve_critical: segment has roots +1 and -1") {
  auto roots = solve_critical(superpotential(segment_polytope()));
  REQUIRE(roots.size() == 2);
  std::vector<double> re;
  for (const CriticalPoint& cp : roots) {
    CHECK(cp.residual < 1e-10);
    CHECK(std::abs(std::abs(cp.z[0]) - 1.0) < 1e-10);
    CHECK(std::abs(cp.fiber[0]) < 1e-10);  // theta = -log|z| = 0
    CHECK(cp.interior);
    re.push_back(cp.z[0].real());
  }
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] + 1.0) < 1e-10);
  CHECK(std::abs(re[1] - 1.0) < 1e-10);
}

TEST_CASE("solve_critical: cp2 has the three cube-root points") {
  auto roots = solve_critical(superpotential(cp_polytope(2)));
  REQUIRE(roots.size() == 3);
  double radius = std::exp(-1.0 / 3.0);
  std::vector<double> args;
  for (const CriticalPoint& cp : roots) {
    CHECK(cp.residual < 1e-10);
    CHECK(std::abs(cp.z[0] - cp.z[1]) < 1e-8);
    CHECK(std::abs(std::abs(cp.z[0]) - radius) < 1e-8);
    CHECK(std::abs(cp.fiber[0] - 1.0 / 3.0) < 1e-8);
    CHECK(std::abs(cp.fiber[1] - 1.0 / 3.0) < 1e-8);
    CHECK(cp.interior);
    args.push_back(std::arg(cp.z[0]));
  }
  std::sort(args.begin(), args.end());
  CHECK(std::abs(args[0] + 2.0 * M_PI / 3.0) < 1e-8);
  CHECK(std::abs(args[1]) < 1e-8);
  CHECK(std::abs(args[2] - 2.0 * M_PI / 3.0) < 1e-8);
}

TEST_CASE("solve_critical: cp2 root set is stable across seeds") {
  SolveOptions a, b;
  a.seed = 1;
  b.seed = 987654321;
  auto ra = solve_critical(superpotential(cp_polytope(2)), a);
  auto rb = solve_critical(superpotential(cp_polytope(2)), b);
  REQUIRE(ra.size() == 3);
  REQUIRE(rb.size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK((ra[k].z - rb[k].z).lpNorm<Eigen::Infinity>() < 1e-8);
}

TEST_CASE("solve_critical: hirzebruch has four diagonal roots") {
  auto roots = solve_critical(superpotential(hirzebruch1_polytope()));
  REQUIRE(roots.size() == 4);
  // z1 = z2 = z with z^4 + z^3 = 1; the four values of log z
  std::vector<std::complex<double>> expected_logs = {
      {-0.1995, 0.0},
      {-0.0614, 1.8063},
      {-0.0614, -1.8063},
      {0.3223, M_PI}};
  std::vector<bool> used(4, false);
  for (const CriticalPoint& cp : roots) {
    CHECK(cp.residual < 1e-10);
    CHECK(std::abs(cp.z[0] - cp.z[1]) < 1e-8);
    std::complex<double> lg = std::log(cp.z[0]);
    bool matched = false;
    for (int k = 0; k < 4; ++k) {
      if (used[k]) continue;
      if (std::abs(lg - expected_logs[k]) < 5e-3) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("hirzebruch positive real root recovers fiber (0.1995, 0.1995)") {
  auto roots = solve_critical(superpotential(hirzebruch1_polytope()));
  bool found = false;
  for (const CriticalPoint& cp : roots) {
    if (std::abs(cp.z[0].imag()) > 1e-8 || cp.z[0].real() < 0) continue;
    found = true;
    CHECK(std::abs(cp.fiber[0] - 0.1995) < 5e-4);
    CHECK(std::abs(cp.fiber[1] - 0.1995) < 5e-4);
    CHECK(cp.interior);
  }
  CHECK(found);
}

TEST_CASE("convergent_verdict at monotone fibers") {
  Polytope h = hirzebruch1_polytope();
  DiscClassSet d = disc_classes(h, fiber2(0, 0));

  BFieldWeights cert;
  cert.d = Eigen::VectorXcd(4);
  cert.d << 2.0, 1.0, 1.0, 1.0;
  CHECK(convergent_verdict(d, trivial_system(2), cert) ==
        ConvergentVerdict::NonVanishingConvergent);
  CHECK(convergent_verdict(d, trivial_system(2), unit_weights(4)) ==
        ConvergentVerdict::VanishingConvergent);

  Polytope cp2 = cp_polytope(2);
  DiscClassSet dc = disc_classes(cp2, fiber2(Rational(1, 3), Rational(1, 3)));
  Eigen::VectorXcd omega(2);
  omega << std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, 2.0 * M_PI / 3.0);
  CHECK(convergent_verdict(dc, make_local_system(omega), unit_weights(3)) ==
        ConvergentVerdict::NonVanishingConvergent);
  // trivial holonomy at (1/3,1/3) is the real critical point: also kills m12
  CHECK(convergent_verdict(dc, trivial_system(2), unit_weights(3)) ==
        ConvergentVerdict::NonVanishingConvergent);
  // a half-turn in the first angle is not critical
  Eigen::VectorXcd half(2);
  half << -1.0, 1.0;
  CHECK(convergent_verdict(dc, make_local_system(half), unit_weights(3)) ==
        ConvergentVerdict::VanishingConvergent);
}

TEST_CASE("interior critical points evaluate to zero through the substitution") {
  for (const Polytope& p :
       {segment_polytope(), cp_polytope(2), hirzebruch1_polytope()}) {
    auto roots = solve_critical(superpotential(p));
    REQUIRE_FALSE(roots.empty());
    for (const CriticalPoint& cp : roots) {
      if (!cp.interior) continue;
      CHECK(convergent_verdict_at(p, cp.fiber, cp.holonomy_angles,
                                  Eigen::VectorXcd::Ones(p.facet_count()),
                                  1e-8) ==
            ConvergentVerdict::NonVanishingConvergent);
    }
  }
}

TEST_CASE("convergent_verdict_at rejects exterior fibers and zero weights") {
  Polytope h = hirzebruch1_polytope();
  Eigen::VectorXd outside(2);
  outside << 5.0, 5.0;
  CHECK_THROWS_AS(convergent_verdict_at(h, outside, Eigen::VectorXd::Zero(2),
                                        Eigen::VectorXcd::Ones(4)),
                  DomainError);
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(2);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Ones(4);
  bad[2] = 0.0;
  CHECK_THROWS_AS(convergent_verdict_at(h, origin, Eigen::VectorXd::Zero(2), bad),
                  DomainError);
}

TEST_CASE("unit-circle segment roots correspond to exact unitary vanishing") {
  auto roots = solve_critical(superpotential(segment_polytope()));
  DiscClassSet d = disc_classes(segment_polytope(), VectorXq::Zero(1));
  for (const CriticalPoint& cp : roots) {
    REQUIRE(std::abs(std::abs(cp.z[0]) - 1.0) < 1e-10);
    // z = +1 or -1: both are Gaussian-rational holonomies
    GaussianRational x(cp.z[0].real() > 0 ? Rational(1) : Rational(-1));
    auto m = m12(d, std::vector<GaussianRational>{x},
                 std::vector<GaussianRational>{GaussianRational(1),
                                               GaussianRational(1)});
    CHECK(m[0].is_zero());
  }
}

TEST_CASE("solve_critical output is deterministic for fixed options") {
  auto a = solve_critical(superpotential(hirzebruch1_polytope()));
  auto b = solve_critical(superpotential(hirzebruch1_polytope()));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].z == b[k].z);
    CHECK(a[k].residual == b[k].residual);
  }
}
