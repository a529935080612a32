#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace kdt {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;

/// Accepts "p", "-p/q" and decimal-free forms only.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Mat zeros(Eigen::Index r, Eigen::Index c) { return Mat::Zero(r, c); }
inline Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }
inline Vec unit(Eigen::Index n, Eigen::Index i) {
  Vec v = Vec::Zero(n);
  v(i) = 1;
  return v;
}

bool is_zero(const Mat& m);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace kdt
