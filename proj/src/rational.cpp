#include "kdt/rational.hpp"

#include "kdt/errors.hpp"

namespace kdt {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw BadConfig("empty rational");
  s = s.substr(first, last - first + 1);
  if (s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw BadConfig("not a rational: " + s);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::mpz_int(s));
    boost::multiprecision::mpz_int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw BadConfig("zero denominator: " + s);
    return Rational(num, den);
  } catch (const BadConfig&) {
    throw;
  } catch (const std::exception&) {
    throw BadConfig("not a rational: " + s);
  }
}

std::string to_string(const Rational& q) { return q.str(); }

bool is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace kdt
