#include <doctest.h>

#include <random>

#include "kdt/linalg.hpp"
#include "kdt/multi_index.hpp"

using namespace kdt;

namespace {

Mat random_matrix(std::mt19937_64& rng, int rows, int cols, int rank_hint) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Mat a(rows, rank_hint), b(rank_hint, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rank_hint; ++j) a(i, j) = coef(rng);
  for (int i = 0; i < rank_hint; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = Rational(coef(rng), 1 + (i + j) % 3);
  return a * b;
}

SparseVec<Rational> to_sparse(const Vec& v) {
  SparseVec<Rational> s;
  for (int i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) s[i] = v(i);
  return s;
}

}  // namespace

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(parse_rational("4/-6")) == "-2/3");
  CHECK(to_string(Rational(3)) == "3");
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("dense kernel, solve and inverse agree with matrix products") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 3 + trial % 4, cols = 4 + trial % 3, r = 1 + trial % 3;
    Mat m = random_matrix(rng, rows, cols, r);
    Mat k = kernel(m);
    CHECK(is_zero(Mat(m * k)));
    CHECK(rank(m) + k.cols() == cols);
    Vec x = Vec::Zero(cols);
    x(trial % cols) = 2;
    Vec b = m * x;
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
  }
  Mat a(2, 2);
  a << 1, 2, 3, 4;
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == identity(2));
  Mat sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK_FALSE(inverse(sing));
  Vec b(2);
  b << 1, 0;
  CHECK_FALSE(solve(sing, b));
}

TEST_CASE("sparse echelon matches the dense routines") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 5, cols = 6;
    Mat m = random_matrix(rng, rows, cols, 1 + trial % 4);
    std::vector<SparseVec<Rational>> images;
    for (int c = 0; c < cols; ++c) images.push_back(to_sparse(m.col(c)));
    auto ker = sparse_kernel(images);
    CHECK(static_cast<Eigen::Index>(ker.size()) == kernel(m).cols());
    for (const auto& rel : ker) {
      Vec x = Vec::Zero(cols);
      for (const auto& [i, v] : rel) x(i) = v;
      CHECK(is_zero(Mat(m * x)));
    }
    SparseEchelon<Rational> ech;
    for (int c = 0; c < cols; ++c) ech.insert(images[c], {{c, Rational(1)}});
    CHECK(static_cast<Eigen::Index>(ech.rank()) == rank(m));
    Vec target = m.col(0) * 3 - m.col(cols - 1);
    auto sol = ech.solve(to_sparse(target));
    REQUIRE(sol);
    Vec recon = Vec::Zero(rows);
    for (const auto& [i, v] : *sol) recon += v * m.col(i);
    CHECK(recon == target);
    auto rr = ech.reduced_rows();
    Mat dense = Mat::Zero(static_cast<Eigen::Index>(rr.size()), rows);
    for (std::size_t i = 0; i < rr.size(); ++i)
      for (const auto& [j, v] : rr[i]) dense(static_cast<Eigen::Index>(i), j) = v;
    Mat mt = m.transpose();
    auto e = row_echelon(mt);
    CHECK(dense == e.rref.topRows(e.rank()));
  }
}

TEST_CASE("multi-index ordering and enumeration") {
  MultiIndex a(3, {1, 0, 2}), b(3, {0, 1, 1});
  CHECK(a.degree() == 3);
  CHECK(a.contact_degree() == 4);
  CHECK(b < a);
  CHECK((a + b) - b == a);
  CHECK(MultiIndex(3, {1, 0, 0}).divides(a));
  CHECK(a.factorial() == 2);
  CHECK(sub_indices(a).size() == 6);
  CHECK(indices_up_to_degree(3, 2).size() == 10);
  // |I|' <= 2 in dim 3: 1, d0, d1, d2, d1^2, d1d2, d2^2.
  CHECK(indices_up_to_contact(3, 2).size() == 7);
  auto all = indices_up_to_contact(5, 4);
  CHECK(std::is_sorted(all.begin(), all.end()));
}
