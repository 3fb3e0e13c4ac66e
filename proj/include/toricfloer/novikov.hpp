#ifndef TORICFLOER_NOVIKOV_HPP
#define TORICFLOER_NOVIKOV_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "toricfloer/rational.hpp"

namespace toricfloer {

inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) {
  return c.real() == 0.0 && c.imag() == 0.0;
}

inline std::complex<double> coeff_to_complex(const GaussianRational& c) {
  return {c.real().to_double(), c.imag().to_double()};
}
inline std::complex<double> coeff_to_complex(const std::complex<double>& c) {
  return c;
}

/// Finite formal sum  sum_k coeff_k T^(2 pi exp_k)  with exact rational
/// exponents stored in units of 2 pi. Terms are exponent-ascending and
/// never carry a zero coefficient; the empty sum is 0.
template <class K>
class NovikovSeries {
public:
  struct Term {
    Rational exp;
    K coeff;
  };

  NovikovSeries() = default;

  static NovikovSeries monomial(K coeff, Rational exp) {
    NovikovSeries s;
    if (!coeff_is_zero(coeff)) s.terms_.push_back({exp, coeff});
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimal exponent; nullopt stands for +infinity (the zero element).
  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
  }

  friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
    NovikovSeries out;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        K c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (!coeff_is_zero(c)) out.terms_.push_back({a.terms_[i].exp, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b) {
    NovikovSeries nb = b;
    for (Term& t : nb.terms_) t.coeff = -t.coeff;
    return a + nb;
  }

  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
    NovikovSeries out;
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_)
        out = out + monomial(ta.coeff * tb.coeff, ta.exp + tb.exp);
    return out;
  }

  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp ||
          !coeff_is_zero(a.terms_[i].coeff - b.terms_[i].coeff))
        return false;
    return true;
  }

private:
  std::vector<Term> terms_;
};

using NovikovExact = NovikovSeries<GaussianRational>;
using NovikovNumeric = NovikovSeries<std::complex<double>>;

/// sum coeff_k * base^exp_k in floating point; base defaults to e^-1,
/// the substitution used by the convergent version.
template <class K>
std::complex<double> convergent_eval(const NovikovSeries<K>& a,
                                     double base = std::exp(-1.0)) {
  std::complex<double> acc = 0.0;
  for (const auto& t : a.terms())
    acc += coeff_to_complex(t.coeff) * std::pow(base, t.exp.to_double());
  return acc;
}

}  // namespace toricfloer

#endif
