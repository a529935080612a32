#include <doctest.h>

#include <random>

#include "kdt/errors.hpp"
#include "kdt/pseudoalgebra.hpp"

using namespace kdt;

namespace {

Mat mat2(int a, int b, int c, int d) {
  Mat m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

TwistData jordan_twist(const ContactLieData& d) {
  return TwistData(d, {Mat::Zero(2, 2), mat2(1, 1, 0, 1), mat2(2, 3, 0, 2)});
}

TensorElement random_element(std::mt19937_64& rng, int dim, int rank, int degree) {
  std::uniform_int_distribution<int> coef(-2, 2);
  TensorElement out;
  for (const auto& i : indices_up_to_degree(dim, degree))
    for (int r = 0; r < rank; ++r) out.add(i, r, coef(rng));
  return out;
}

PairTensor random_pair(std::mt19937_64& rng, int dim, int rank, int degree) {
  std::uniform_int_distribution<int> coef(-2, 2);
  const auto idx = indices_up_to_degree(dim, degree);
  PairTensor out;
  for (const auto& f : idx)
    for (const auto& g : idx)
      if (f.degree() + g.degree() <= degree)
        for (int r = 0; r < rank; ++r) out.add(f, g, r, coef(rng));
  return out;
}

TensorModule module(const Enveloping& h, int weight, const Rational& c, Convention conv = Convention::V) {
  SpGenerators g(h.data());
  return TensorModule(h, TensorModuleSpec{TwistData::trivial(h.data()), scan_module(g, weight), c, conv});
}

std::vector<ContactLieData> algebras() { return {heisenberg(1), sl2(), affine_plus_line(), heisenberg(2)}; }

}  // namespace

TEST_CASE("normal forms") {
  std::mt19937_64 rng(1);
  for (const auto& d : {heisenberg(1), sl2(), affine_plus_line()}) {
    Enveloping h(d);
    for (int trial = 0; trial < 4; ++trial) {
      const PairTensor x = random_pair(rng, 3, 2, 2);
      const NormalizedAction left = to_left_normal(h, x), right = to_right_normal(h, x);
      CHECK_FALSE(left.right);
      CHECK(right.right);
      CHECK(from_normal(h, left) == x);
      CHECK(from_normal(h, right) == x);
      CHECK(to_right_normal(h, from_normal(h, left)) == right);
    }
    // (1 (x) d_i) (x)_H v = (-d_i (x) 1) (x)_H v + (1 (x) 1) (x)_H d_i v
    const TensorElement v = random_element(rng, 3, 2, 1);
    for (int i = 0; i < 3; ++i) {
      const PairTensor lhs = pair_tensor(h, h.one(), h.gen(i), v);
      const PairTensor rhs = pair_tensor(h, Rational(-1) * h.gen(i), h.one(), v) +
                             pair_tensor(h, h.one(), h.one(), left_mul(h, h.gen(i), v));
      CHECK(lhs == rhs);
    }
    // (h (x) 1) (x)_H (1 (x) u) is already left normal.
    TensorElement u;
    u.add(MultiIndex(3), 1, 3);
    const NormalizedAction n = to_left_normal(h, pair_tensor(h, h.gen(2), h.one(), u));
    REQUIRE(n.coeffs.size() == 1);
    CHECK(n.at(MultiIndex::unit(3, 2)) == u);
    CHECK(to_left_normal(h, PairTensor{}).is_zero());
  }
}

TEST_CASE("trivial sp action matches the explicit formula") {
  for (const auto& d : {heisenberg(1), sl2(), heisenberg(2)}) {
    Enveloping h(d);
    const int dim = d.dim();
    for (int c : {0, 3}) {
      const TensorModule m = module(h, 0, c);
      TensorElement one;
      one.add(MultiIndex(dim), 0, 1);
      PairTensor expect;
      for (int k = 1; k < dim; ++k)
        expect += pair_tensor(h, h.gen(k), h.one(), tensor(h.vec(d.dual(k)), unit(1, 0)));
      expect += Rational(c, 2) * pair_tensor(h, h.gen(0), h.one(), one);
      expect -= pair_tensor(h, h.one(), h.one(), tensor(h.gen(0), unit(1, 0)));
      CHECK(m.e_on_generator(0) == expect);
    }
  }
}

TEST_CASE("the two conventions are related by the trace shift") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    SpGenerators g(d);
    const int n = d.N();
    for (int w : {0, 1}) {
      const SpRep u = scan_module(g, w);
      for (int c : {-1, 2}) {
        const Carrier r = product_carrier(g, TwistData::trivial(d), u, c);
        const TensorModule v(h, r, Convention::V), t(h, trace_shift(d, r, 1), Convention::T);
        // With the twist written as Pi (x) k_{tr ad}.
        const TensorModule t2(h, TensorModuleSpec{TwistData::trace_character(d, 1), u, c - 2 * n - 2, Convention::T});
        for (int k = 0; k < v.rank(); ++k) {
          CHECK(v.e_on_generator(k) == t.e_on_generator(k));
          CHECK(v.e_on_generator(k) == t2.e_on_generator(k));
        }
      }
    }
  }
}

TEST_CASE("e acts by a module action") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    const int n = d.N();
    for (int w : {0, 1, -2}) {
      if (w == -2 && n > 1) continue;
      for (int c : {0, 1, 4}) {
        const auto rep = jacobi_check(module(h, w, c));
        CHECK(rep.checked > 0);
        CHECK(rep.ok());
        CHECK(jacobi_check(module(h, w, c, Convention::T)).ok());
      }
    }
    // The direct action of W(d) on forms, restricted to e.
    for (int k = 0; k <= d.dim(); ++k) CHECK(jacobi_check(h, e_action_on_forms(h, k)).ok());
  }
  // A corrupted action is caught.
  Enveloping h(heisenberg(1));
  const TensorModule m = module(h, 1, 1);
  std::vector<PairTensor> action{m.e_on_generator(0), m.e_on_generator(1)};
  action[0].add(MultiIndex::unit(3, 1), MultiIndex(3), 1, 1);
  CHECK_FALSE(jacobi_check(h, action).ok());
}

TEST_CASE("H-bilinearity of the action") {
  std::mt19937_64 rng(2);
  Enveloping h(sl2());
  const TensorModule m = module(h, 1, 2);
  const TensorElement v = random_element(rng, 3, 2, 1);
  for (const auto& i : indices_up_to_degree(3, 2)) {
    const PBWElement b = h.basis(i);
    CHECK(m.e_star_pair(left_mul(h, b, v)) == mul_pair(h, h.one(), b, m.e_star_pair(v)));
  }
  CHECK(m.e_star(TensorElement{}).is_zero());
}

TEST_CASE("forms are tensor modules") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    SpGenerators g(d);
    // Full forms need the cz term.
    for (int n = 0; n <= d.dim(); ++n) {
      const Carrier full = full_form_carrier(g, n);
      CHECK(full.cz.empty() == (n == 0 || n == d.dim()));
      const TensorModule m(h, full, Convention::T);
      const auto direct = e_action_on_forms(h, n);
      for (int k = 0; k < m.rank(); ++k) CHECK(direct[k] == m.e_on_generator(k));
    }
    const auto rc = rumin_complex(h);
    for (const auto& t : rc.terms) {
      const Carrier r = form_carrier(g, t, TwistData::trivial(d));
      CHECK(r.cz.empty());
      const int n = t.degree();
      CHECK(r.iprime == Rational(t.quotient() ? -n : -n - 1) * identity(r.dim));
      const TensorModule m(h, r, Convention::T);
      const auto direct = e_action_on_term(h, t);
      for (int k = 0; k < m.rank(); ++k) CHECK(direct[k] == m.e_on_generator(k));
    }
  }
}

TEST_CASE("twisting the action") {
  auto d = heisenberg(1);
  Enveloping h(d);
  SpGenerators g(d);
  const auto pi = jordan_twist(d);
  for (int w : {0, 1})
    for (auto conv : {Convention::T, Convention::V}) {
      const SpRep u = scan_module(g, w);
      const TensorModule plain(h, TensorModuleSpec{TwistData::trivial(d), u, 2, conv});
      const TensorModule twisted(h, TensorModuleSpec{pi, u, 2, conv});
      std::vector<PairTensor> action;
      for (int r = 0; r < plain.rank(); ++r) action.push_back(plain.e_on_generator(r));
      const auto t = twist_action(h, pi, action, plain.rank());
      REQUIRE(static_cast<int>(t.size()) == twisted.rank());
      for (int r = 0; r < twisted.rank(); ++r) CHECK(t[r] == twisted.e_on_generator(r));
      CHECK(jacobi_check(twisted).ok());
    }
}

TEST_CASE("singular vectors") {
  Enveloping h(heisenberg(1));
  const int dim = 3;
  SUBCASE("constants are singular") {
    for (int w : {0, 1, -2})
      for (int c : {-2, 0, 5}) {
        const TensorModule m = module(h, w, c);
        for (int r = 0; r < m.rank(); ++r) {
          const TensorElement v = constant_element(dim, unit(m.rank(), r));
          CHECK(is_singular(m, v));
          CHECK(is_singular_right(m, v));
        }
      }
  }
  SUBCASE("trivial U at c = 0") {
    const TensorModule m = module(h, 0, 0);
    for (int i = 1; i < dim; ++i) {
      TensorElement v;
      v.add(MultiIndex::unit(dim, i), 0, 1);
      CHECK(is_singular(m, v));
      CHECK(is_singular_right(m, v));
    }
    TensorElement v0;
    v0.add(MultiIndex::unit(dim, 0), 0, 1);
    CHECK_FALSE(is_singular(m, v0));
    CHECK_FALSE(is_singular_right(m, v0));
    const auto s = singular_space(m, 3);
    CHECK(s.new_by_degree == std::vector<int>{1, 2, 0, 0});
  }
  SUBCASE("singular spaces") {
    const auto s1 = singular_space(module(h, 1, 1), 2);
    CHECK_FALSE(s1.only_constants());
    CHECK(s1.degrees() == std::vector<int>{2});
    CHECK(singular_space(module(h, 1, 2), 2).only_constants());
    CHECK(singular_space(module(h, 0, 5), 3).only_constants());
    const auto s3 = singular_space(module(h, 1, 3), 2);
    CHECK(s3.degrees() == std::vector<int>{1});
    for (const auto& sp : {s1, s3})
      for (const auto& v : sp.basis) {
        CHECK(is_singular(module(h, 1, sp.degrees()[0] == 2 ? 1 : 3), v));
      }
  }
}

TEST_CASE("action on singular vectors") {
  for (const auto& d : {heisenberg(1), sl2()}) {
    Enveloping h(d);
    for (int w : {0, 1, -2})
      for (int c : {0, 1, 3}) {
        const TensorModule m = module(h, w, c);
        CHECK(rho_sing_constants_check(m));
        CHECK(rho_sing_constants_check(module(h, w, c, Convention::T)));
        for (const auto& v : singular_space(m, 2).basis) {
          CHECK(iprime_grading_check(m, c, v));
          CHECK(csp_stability_check(m, v));
          CHECK(coefficient_lemma_check(m, v));
          CHECK(is_singular_right(m, v));
        }
      }
  }
  std::mt19937_64 rng(4);
  Enveloping h(heisenberg(2));
  const TensorModule m = module(h, 2, 2);
  CHECK(rho_sing_constants_check(m));
  for (int t = 0; t < 3; ++t) CHECK(coefficient_lemma_check(m, random_element(rng, 5, m.rank(), 2)));
}

TEST_CASE("constants: coefficient of 1 (x) d_i d_j") {
  Enveloping h(heisenberg(2));
  const TensorModule m = module(h, 1, 4);
  const auto& g = m.sp();
  for (int r = 0; r < m.rank(); ++r) {
    const Vec u = unit(m.rank(), r);
    const NormalizedAction right = to_right_normal(h, m.e_star_pair(constant_element(5, u)));
    for (int k = 0; k < g.count(); ++k) {
      const auto [i, j] = g.pair(k);
      const MultiIndex ij = MultiIndex::unit(5, i) + MultiIndex::unit(5, j);
      CHECK(right.at(ij) == constant_element(5, Vec(Rational(2) * (m.carrier().sp[k] * u))));
    }
  }
}

TEST_CASE("degree-two singular vectors") {
  for (const auto& d : {heisenberg(1), sl2()}) {
    Enveloping h(d);
    const TensorModule m = module(h, 1, 1);
    const auto s = singular_space(m, 2);
    int found = 0;
    for (const auto& v : s.basis) {
      const auto rep = degree2_structure_check(m, 1, v);
      CHECK(rep.ok());
      if (v.contact_degree() == 2) {
        ++found;
        CHECK(rep.top);
        CHECK(rep.v0 == Vec(Rational(-3, 2) * rep.u));
        // Perturbing by d_0 d_1 (x) u breaks singularity.
        TensorElement bad = v;
        bad.add(MultiIndex::unit(3, 0) + MultiIndex::unit(3, 1), 0, 1);
        CHECK_FALSE(degree2_structure_check(m, 1, bad).ok());
      } else {
        CHECK_FALSE(rep.top);
      }
    }
    CHECK(found == 2);
  }
}

TEST_CASE("tau(e)") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    const auto direct = tau_direct(h);
    CHECK(direct == tau_formula(h));
    // The cz part is present: d_i d_0 (x) e^{i0}.
    SpGenerators g(d);
    bool cz = false;
    for (int i = 1; i < d.dim(); ++i)
      for (const auto& [idx, c] : h.mul(h.gen(i), h.gen(0)).terms)
        if (idx.degree() == 2 && direct.count(idx)) cz = cz || !is_zero(g.e_upper(i, 0));
    CHECK(cz);
  }
}

TEST_CASE("twisted Rumin complex") {
  auto d = heisenberg(1);
  Enveloping h(d);
  for (const auto& pi : {TwistData::trivial(d), jordan_twist(d)}) {
    const auto tc = twisted_rumin(h, pi);
    const auto rep = complex_check(h, tc, pi);
    CHECK(rep.maps == 3);
    CHECK(rep.ok());
    CHECK(is_complex(h, tc.complex));
    // A map that is not a homomorphism.
    FreeMap bad = tc.complex.maps[0];
    bad.images[0].add(MultiIndex(3), 0, 1);
    CHECK_FALSE(is_homomorphism(tc.modules[0], tc.modules[1], bad));
    CHECK(is_homomorphism(tc.modules[0], tc.modules[1], zero_map(tc.modules[0].rank(), tc.modules[1].rank())));
  }
  Enveloping h2(heisenberg(2));
  const auto tc = twisted_rumin(h2, TwistData::trivial(heisenberg(2)));
  CHECK(complex_check(h2, tc, TwistData::trivial(heisenberg(2))).ok());
}

TEST_CASE("classification at N = 1") {
  for (const auto& d : {heisenberg(1), sl2()}) {
    Enveloping h(d);
    const auto scan = classification_scan(h, TwistData::trivial(d), -3, 6);
    CHECK(scan.size() == 30);
    for (const auto& e : scan) {
      const auto ref = reference_verdict(1, e.weight, e.c);
      INFO(e.label << " c=" << e.c.str());
      CHECK(e.verdict.reducible == ref.reducible);
      CHECK(e.verdict.has_degree(2) == ref.degree2);
      CHECK(e.degree2_vectors.empty() == !ref.degree2);
    }
  }
  Enveloping h(heisenberg(1));
  SpGenerators g(heisenberg(1));
  const Verdict v = classify(h, TensorModuleSpec{TwistData::trivial(heisenberg(1)), fundamental_rep(g, 1), 3});
  CHECK(v.reducible);
  CHECK(v.cutoff == 2);
  CHECK(v.degrees == std::vector<int>{1});
}
