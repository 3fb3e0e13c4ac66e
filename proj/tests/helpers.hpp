#ifndef TORICFLOER_TESTS_HELPERS_HPP
#define TORICFLOER_TESTS_HELPERS_HPP

#include <random>

#include "toricfloer/novikov.hpp"
#include "toricfloer/rational.hpp"

namespace tfh {

using toricfloer::GaussianRational;
using toricfloer::NovikovExact;
using toricfloer::Rational;

inline Rational random_rational(std::mt19937_64& rng, int num_range = 8,
                                int den_range = 6) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng) {
  return GaussianRational(random_rational(rng), random_rational(rng));
}

inline NovikovExact random_novikov(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  NovikovExact s;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::uniform_int_distribution<int> num(0, 16);
    std::uniform_int_distribution<int> den(1, 4);
    Rational exp(num(rng), den(rng));
    s = s + NovikovExact::monomial(random_gaussian(rng), exp);
  }
  return s;
}

}  // namespace tfh

#endif
