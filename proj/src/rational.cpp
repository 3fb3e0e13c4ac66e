#include "toricfloer/rational.hpp"

#include <ostream>

namespace toricfloer {

Rational Rational::parse(const std::string& s) {
  auto bad = [&] {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    std::size_t pos = 0;
    std::int64_t n = std::stoll(s.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? s.size() : slash)) bad();
    std::int64_t d = 1;
    if (slash != std::string::npos) {
      std::string ds = s.substr(slash + 1);
      if (ds.empty()) bad();
      d = std::stoll(ds, &pos);
      if (pos != ds.size()) bad();
      if (d == 0) bad();
    }
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    bad();
  } catch (const std::out_of_range&) {
    bad();
  }
  return Rational();  // unreachable
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace toricfloer
