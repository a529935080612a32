#include "kdt/suites.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "kdt/annihilation.hpp"
#include "kdt/errors.hpp"
#include "kdt/exterior.hpp"
#include "kdt/pseudoalgebra.hpp"
#include "kdt/pseudoforms.hpp"

namespace kdt {

using json = nlohmann::ordered_json;

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string mask_str(Mask m);

std::string fmt(const Rational& q) { return str(q); }
std::string fmt(const Mat& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? " " : "") + str(m(i, j));
  }
  return s + "]";
}
std::string fmt(const Vec& v) { return fmt(Mat(v.transpose())); }
std::string fmt(const Form& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms) s += (s.empty() ? "" : " + ") + str(c) + " " + mask_str(m);
  return s;
}
std::string fmt(const PBWElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : a.terms) s += (s.empty() ? "" : " + ") + str(c) + " d^" + i.str();
  return s;
}
std::string fmt(const HTensor2& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : a) s += (s.empty() ? "" : " + ") + str(c) + " d^" + k[0].str() + " (x) d^" + k[1].str();
  return s;
}
std::string fmt(const PseudoForm& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, f] : a.terms) s += (s.empty() ? "" : " + ") + std::string("d^") + i.str() + " (x) (" + fmt(f) + ")";
  return s;
}
std::string fmt(const TensorElement& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : v.terms)
    s += (s.empty() ? "" : " + ") + str(c) + " d^" + key.first.str() + " u_" + std::to_string(key.second);
  return s;
}
std::string fmt(const std::map<MultiIndex, Mat>& t) {
  std::string s;
  for (const auto& [i, m] : t) s += (s.empty() ? "" : " + ") + std::string("d^") + i.str() + " (x) " + fmt(m);
  return s.empty() ? "0" : s;
}

// One record; the first failure's witness is kept.
class Check {
 public:
  Check(std::string suite, std::string name) {
    rec_.suite = std::move(suite);
    rec_.name = std::move(name);
    rec_.passed = true;
  }
  bool operator()(bool ok, const json& witness = json()) {
    ++rec_.checked;
    if (!ok && rec_.passed) {
      rec_.passed = false;
      rec_.witness = witness.is_null() ? json("failed") : witness;
    }
    return ok;
  }
  // Identity check; on failure the witness gets both sides.
  template <class T>
  bool eq(const T& lhs, const T& rhs, json input = json::object()) {
    const bool ok = lhs == rhs;
    if (!ok && rec_.passed) {
      if (!input.is_object()) input = json{{"input", input}};
      input["lhs"] = fmt(lhs);
      input["rhs"] = fmt(rhs);
    }
    return (*this)(ok, input);
  }
  void set_data(json d) { rec_.data = std::move(d); }
  CheckRecord done() { return rec_; }

 private:
  CheckRecord rec_;
};

std::string mask_str(Mask m) {
  std::string s;
  for (int i : mask_indices(m)) s += (s.empty() ? "x" : " ^ x") + std::to_string(i);
  return s.empty() ? "1" : s;
}

PBWElement antipode_left(const Enveloping& h, const PBWElement& a) {
  PBWElement out;
  for (const auto& [k, v] : h.coproduct(a)) out += v * h.mul(h.antipode_basis(k[0]), h.basis(k[1]));
  return out;
}

PBWElement antipode_right(const Enveloping& h, const PBWElement& a) {
  PBWElement out;
  for (const auto& [k, v] : h.coproduct(a)) out += v * h.mul(h.basis(k[0]), h.antipode_basis(k[1]));
  return out;
}

PBWElement random_pbw(std::mt19937_64& rng, const std::vector<MultiIndex>& idx, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  PBWElement out;
  for (int t = 0; t < terms; ++t) out.add(idx[pick(rng)], coef(rng));
  return out;
}

const char* kCore = "verify-core";

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CheckRecord> contact_checks(const Enveloping& h) {
  const auto& d = h.data();
  const int n = d.dim(), N = d.N();
  std::vector<CheckRecord> out;

  Check frame(kCore, "contact: theta(s) = -1, theta vanishes on d-bar");
  for (int k = 0; k < n; ++k) frame(d.theta()(k) == (k == 0 ? -1 : 0), json{{"k", k}});
  out.push_back(frame.done());

  Check om(kCore, "contact: omega(a ^ b) = -theta([a, b])");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational t = 0;
      for (int k = 0; k < n; ++k) t += d.c(i, j, k) * d.theta()(k);
      om.eq(d.omega()(i, j), Rational(-t), json{{"i", i}, {"j", j}});
    }
  out.push_back(om.done());

  Check is(kCore, "contact: iota_s omega = 0 and [s, d-bar] in d-bar");
  for (int j = 0; j < n; ++j) is(d.omega()(0, j).is_zero() && d.omega()(j, 0).is_zero(), json{{"j", j}});
  for (int j = 1; j < n; ++j) is(d.c(0, j, 0).is_zero(), json{{"j", j}});
  out.push_back(is.done());

  Check inv(kCore, "contact: r inverts omega on d-bar");
  for (int i = 1; i < n; ++i)
    for (int k = 1; k < n; ++k) {
      Rational s = 0;
      for (int j = 1; j < n; ++j) s += d.r()(i, j) * d.omega()(j, k);
      inv.eq(s, Rational(i == k ? 1 : 0), json{{"i", i}, {"k", k}});
    }
  out.push_back(inv.done());

  Check dual(kCore, "contact: omega(d^i ^ d_k) = delta, omega(d^i ^ d^j) = -r^ij = r^ji");
  for (int i = 1; i < n; ++i)
    for (int k = 1; k < n; ++k) {
      dual.eq(d.omega(d.dual(i), unit(n, k)), Rational(i == k ? 1 : 0), json{{"i", i}, {"k", k}});
      dual.eq(d.omega(d.dual(i), d.dual(k)), Rational(-d.r()(i, k)), json{{"i", i}, {"j", k}});
      dual.eq(d.r()(k, i), Rational(-d.r()(i, k)), json{{"r^ji", {k, i}}});
    }
  out.push_back(dual.done());

  Check jac(kCore, "contact: Jacobi identity");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const Vec x = unit(n, a), y = unit(n, b), z = unit(n, c);
        const Vec s = d.bracket(x, d.bracket(y, z)) + d.bracket(y, d.bracket(z, x)) + d.bracket(z, d.bracket(x, y));
        jac.eq(s, Vec(Vec::Zero(n)), json{{"a", a}, {"b", b}, {"c", c}});
      }
  out.push_back(jac.done());

  Check rem(kCore, "contact: sum r^ki c_ij^j + 1/2 sum r^ij c_ij^k = 0");
  rem(check_remark_identity(d));
  out.push_back(rem.done());

  Check sym(kCore, "contact: symplectic basis");
  const ContactLieData s = with_symplectic_basis(d);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sym(s.omega()(i, j) == (j == i + N ? 1 : 0), json{{"i", i}, {"j", j}});
  for (int i = 1; i <= N; ++i) {
    sym.eq(s.dual(i), Vec(-unit(n, i + N)), json{{"dual", i}});
    sym.eq(s.dual(i + N), unit(n, i), json{{"dual", i + N}});
  }
  out.push_back(sym.done());

  Check reeb(kCore, "contact: d_0 coefficient of 2 sum d_i d^i is -2N");
  PBWElement sum;
  for (int i = 1; i < n; ++i) sum += Rational(2) * h.mul(h.gen(i), h.vec(d.dual(i)));
  reeb.eq(sum.coeff(MultiIndex::unit(n, 0)), Rational(-2 * N));
  out.push_back(reeb.done());
  return out;
}

std::vector<CheckRecord> exterior_checks(const ContactLieData& d) {
  const int n = d.dim(), N = d.N();
  const SpGenerators g(d);
  std::vector<CheckRecord> out;

  Check dd(kCore, "exterior: d0 d0 = 0 on every monomial");
  Check cartan(kCore, "exterior: (ad a). = d0 iota_a + iota_a d0");
  for (int deg = 0; deg <= n; ++deg) {
    FormSpace fs(n, deg);
    for (int k = 0; k < fs.size(); ++k) {
      const Form a = monomial(fs.monomial(k));
      dd.eq(d0(d, d0(d, a)), Form(), json{{"monomial", mask_str(fs.monomial(k))}});
      for (int i = 0; i < n; ++i)
        cartan.eq(gl_act(d.ad(i), a), d0(d, contract(unit(n, i), a)) + contract(unit(n, i), d0(d, a)),
               json{{"a", i}, {"monomial", mask_str(fs.monomial(k))}});
    }
  }
  out.push_back(dd.done());
  out.push_back(cartan.done());

  const Form theta = theta_form(d), omega = omega_form(d);
  Check tw(kCore, "exterior: d0 theta = omega, theta ^ omega^N != 0, iota_s omega = 0");
  tw.eq(d0(d, theta), omega, json("d0 theta"));
  Form top = theta;
  for (int k = 0; k < N; ++k) top = wedge(top, omega);
  tw(!top.is_zero(), json("theta ^ omega^N"));
  tw.eq(contract(unit(n, 0), omega), Form(), json("iota_s omega"));
  out.push_back(tw.done());

  Check csp(kCore, "exterior: I'.theta = -2 theta, I'.omega = -2 omega, e^{ij}.omega = x^i ^ x^j, sp kills both");
  csp.eq(gl_act(g.i_prime(), theta), Rational(-2) * theta, json("I' theta"));
  csp.eq(gl_act(g.i_prime(), omega), Rational(-2) * omega, json("I' omega"));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) csp.eq(gl_act(g.e_upper(i, j), omega), wedge(x(i), x(j)), json{{"i", i}, {"j", j}});
  for (int k = 0; k < g.count(); ++k)
    csp(gl_act(g.generator(k), theta).is_zero() && gl_act(g.generator(k), omega).is_zero(), json{{"f", k}});
  out.push_back(csp.done());

  Check ik(kCore, "exterior: I^n = Omega^n for n > N, K^n = 0 for n <= N");
  for (int deg = 0; deg <= n; ++deg) {
    const auto red = compute_IK(d, deg);
    const int full = FormSpace(n, deg).size();
    if (deg >= N + 1) ik(red.I.dim() == full, json{{"n", deg}, {"dim I", red.I.dim()}});
    if (deg <= N) ik(red.K.dim() == 0, json{{"n", deg}, {"dim K", red.K.dim()}});
  }
  out.push_back(ik.done());

  Check rc(kCore, "exterior: constant Rumin complex has the Lie algebra cohomology");
  const auto rumin = rumin_constant(d);
  const auto full = lie_algebra_complex(d);
  rc(rumin.is_complex(), json("not a complex"));
  rc(rumin.cohomology() == full.cohomology(), json{{"rumin", rumin.cohomology()}, {"de Rham", full.cohomology()}});
  out.push_back(rc.done());
  return out;
}

std::vector<CheckRecord> hopf_checks(const Enveloping& h, int degree_bound, std::uint64_t seed) {
  const int n = h.dim();
  std::vector<CheckRecord> out;
  const auto idx = indices_up_to_degree(n, degree_bound);

  Check ant(kCore, "hopf: S(h_(1)) h_(2) = h_(1) S(h_(2)) = eps(h) 1, exhaustive");
  Check cou(kCore, "hopf: (eps (x) id) Delta = (id (x) eps) Delta = id, exhaustive");
  for (const auto& i : idx) {
    const PBWElement b = h.basis(i);
    const PBWElement eps = h.counit(b) * h.one();
    cou.eq(h.counit(b), Rational(i.is_zero() ? 1 : 0), json{{"I", i.str()}});
    ant.eq(antipode_left(h, b), eps, json{{"I", i.str()}, {"side", "left"}});
    ant.eq(antipode_right(h, b), eps, json{{"I", i.str()}, {"side", "right"}});
    PBWElement l, r;
    for (const auto& [k, v] : h.coproduct(b)) {
      l += (v * h.counit(h.basis(k[0]))) * h.basis(k[1]);
      r += (v * h.counit(h.basis(k[1]))) * h.basis(k[0]);
    }
    cou.eq(l, b, json{{"I", i.str()}, {"side", "left"}});
    cou.eq(r, b, json{{"I", i.str()}, {"side", "right"}});
  }
  out.push_back(ant.done());
  out.push_back(cou.done());

  std::mt19937_64 rng(seed);
  Check ants(kCore, "hopf: antipode axiom on sampled elements up to degree " + std::to_string(degree_bound + 2));
  const auto wide = indices_up_to_degree(n, degree_bound + 2);
  for (int t = 0; t < 20; ++t) {
    const PBWElement a = random_pbw(rng, wide, 4);
    const PBWElement eps = h.counit(a) * h.one();
    ants.eq(antipode_left(h, a), eps, json{{"sample", fmt(a)}, {"side", "left"}});
    ants.eq(antipode_right(h, a), eps, json{{"sample", fmt(a)}, {"side", "right"}});
  }
  out.push_back(ants.done());

  Check alg(kCore, "hopf: Delta(ab) = Delta(a) Delta(b), S(ab) = S(b) S(a) on samples");
  const auto low = indices_up_to_degree(n, 2);
  for (int t = 0; t < 20; ++t) {
    const PBWElement a = random_pbw(rng, low, 3), b = random_pbw(rng, low, 3);
    alg.eq(h.coproduct(h.mul(a, b)), h.mul(h.coproduct(a), h.coproduct(b)), json{{"a", fmt(a)}, {"b", fmt(b)}, {"map", "Delta"}});
    alg.eq(h.antipode(h.mul(a, b)), h.mul(h.antipode(b), h.antipode(a)), json{{"a", fmt(a)}, {"b", fmt(b)}, {"map", "S"}});
  }
  out.push_back(alg.done());

  Check assoc(kCore, "hopf: associativity on basis triples, each of degree <= 2");
  for (const auto& a : low)
    for (const auto& b : low)
      for (const auto& c : low) {
        const PBWElement ab = h.mul(h.basis(a), h.basis(b));
        if (!assoc.eq(h.mul(ab, h.basis(c)), h.mul(h.basis(a), h.mul(h.basis(b), h.basis(c))),
                   json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}}))
          break;
      }
  out.push_back(assoc.done());

  Check symm(kCore, "hopf: symmetrization identities on all basis triples and quadruples");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        symm(symmetrization_identity3(h, unit(n, a), unit(n, b), unit(n, c)), json{{"a", a}, {"b", b}, {"c", c}});
        for (int e = 0; e < n; ++e)
          symm(symmetrization_identity4(h, unit(n, a), unit(n, b), unit(n, c), unit(n, e)),
               json{{"a", a}, {"b", b}, {"c", c}, {"d", e}});
      }
  out.push_back(symm.done());
  return out;
}

std::vector<CheckRecord> sp_checks(const SpGenerators& g) {
  const int n = g.dim(), N = g.N();
  std::vector<CheckRecord> out;

  Check gens(kCore, "sp: f^{ij} lie in sp(d-bar), N(2N+1) of them");
  gens(g.count() == N * (2 * N + 1), json{{"count", g.count()}});
  for (int k = 0; k < g.count(); ++k) gens(g.in_sp(g.generator(k)), json{{"f", k}});
  out.push_back(gens.done());

  Check table(kCore, "sp: bracket table of the f^{ij}");
  for (int a = 0; a < g.count(); ++a)
    for (int b = 0; b < g.count(); ++b) {
      const auto [i, j] = g.pair(a);
      const auto [k, l] = g.pair(b);
      const Mat lhs = g.generator(a) * g.generator(b) - g.generator(b) * g.generator(a);
      table.eq(lhs, g.bracket_table(i, j, k, l), json{{"ij", {i, j}}, {"kl", {k, l}}});
    }
  out.push_back(table.done());

  Check tri(kCore, "sp: sl2-triples (-2 f_i^i, f_ii, -f^ii)");
  for (int i = 1; i < n; ++i) {
    const Mat hh = Rational(-2) * g.f_mixed(i, i), e = g.f_lower(i, i), f = Rational(-1) * g.f_upper(i, i);
    tri.eq(Mat(hh * e - e * hh), Mat(Rational(2) * e), json{{"i", i}, {"bracket", "[h, e]"}});
    tri.eq(Mat(hh * f - f * hh), Mat(Rational(-2) * f), json{{"i", i}, {"bracket", "[h, f]"}});
    tri.eq(Mat(e * f - f * e), hh, json{{"i", i}, {"bracket", "[e, f]"}});
  }
  out.push_back(tri.done());

  Check fund(kCore, "sp: R(pi_p) has dimension C(2N,p) - C(2N,p-2) and Casimir p(2N+2-p)/2");
  json values = json::array();
  for (int p = 0; p <= N; ++p) {
    const SpRep rep = fundamental_rep(g, p);
    const Rational expect(p * (2 * N + 2 - p), 2);
    fund.eq(Rational(rep.dim), binomial(2 * N, p) - binomial(2 * N, p - 2), json{{"p", p}, {"quantity", "dim"}});
    fund(check_sp_brackets(g, rep), json{{"p", p}, {"brackets", false}});
    const Mat cas = casimir_apply(g, rep);
    fund.eq(cas, Mat(expect * identity(rep.dim)), json{{"p", p}, {"quantity", "Casimir"}});
    values.push_back(json{{"p", p}, {"dim", rep.dim}, {"casimir", str(expect)}});
  }
  fund.set_data(values);
  out.push_back(fund.done());

  Check other(kCore, "sp: Casimir on d-bar is (2N+1)/2 and on R(2 pi_1) is 2N+2");
  other.eq(casimir_apply(g, vector_rep(g)), Mat(Rational(2 * N + 1, 2) * identity(n - 1)), json("vector"));
  const SpRep adj = sym_square_rep(g);
  other(check_sp_brackets(g, adj), json("sym2 brackets"));
  other.eq(casimir_apply(g, adj), Mat(Rational(2 * N + 2) * identity(adj.dim)), json("sym2"));
  out.push_back(other.done());

  Check nil(kCore, "sp: (f^{ab})^4 = 0 in the graded algebra");
  nil(nilpotency_certificate());
  out.push_back(nil.done());
  return out;
}

std::vector<CheckRecord> verify_core(const Enveloping& h, const RunConfig& config) {
  std::vector<CheckRecord> out = contact_checks(h);
  for (auto& r : exterior_checks(h.data())) out.push_back(std::move(r));
  for (auto& r : hopf_checks(h, config.degree_bound, config.seed)) out.push_back(std::move(r));
  for (auto& r : sp_checks(SpGenerators(h.data()))) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckRecord> rumin_suite(const Enveloping& h, const RunConfig& config) {
  const char* suite = "rumin";
  const auto& d = h.data();
  const int n = d.dim(), N = d.N();
  std::vector<CheckRecord> out;

  Check one(suite, "d 1 = -epsilon");
  one.eq(pseudo_d(h, constant_pseudo(n, one_form())), Rational(-1) * epsilon_form(n));
  out.push_back(one.done());

  Check rel(suite, "d d = 0, d Psi = Psi d, d Theta = Psi - Theta d up to degree " +
                       std::to_string(config.degree_bound));
  const RelationsReport rr = relations_check(h, config.degree_bound);
  rel.set_data(json{{"checked", rr.checked}});
  rel(rr.d_squared_failures == 0, json{{"d_squared_failures", rr.d_squared_failures}});
  rel(rr.psi_failures == 0, json{{"psi_failures", rr.psi_failures}});
  rel(rr.theta_failures == 0, json{{"theta_failures", rr.theta_failures}});
  out.push_back(rel.done());

  const RuminMap forward(h), backward(h, true);
  const auto low = indices_up_to_degree(n, 1);
  Check wd(suite, "Rumin map: independent of pivot order, lands in closed K-valued forms");
  FormSpace mid(n, N);
  for (const auto& i : low)
    for (int k = 0; k < mid.size(); ++k) {
      const PseudoForm a = basis_pseudo(i, monomial(mid.monomial(k)));
      const PseudoForm r = forward(a);
      const json at{{"I", i.str()}, {"monomial", mask_str(mid.monomial(k))}};
      wd.eq(r, backward(a), at);
      wd(in_K(d, r), at);
      wd.eq(pseudo_d(h, r), PseudoForm(), at);
    }
  out.push_back(wd.done());

  Check van(suite, "Rumin map vanishes on I^N and on d(Omega^{N-1})");
  FormSpace below(n, N - 1);
  for (const auto& i : low) {
    for (int k = 0; k < below.size(); ++k) {
      const PseudoForm a = basis_pseudo(i, monomial(below.monomial(k)));
      van.eq(forward(pseudo_theta(d, a)), PseudoForm(), json{{"theta ^", mask_str(below.monomial(k))}, {"I", i.str()}});
      van.eq(forward(pseudo_d(h, a)), PseudoForm(), json{{"d", mask_str(below.monomial(k))}, {"I", i.str()}});
    }
    if (N >= 2) {
      FormSpace two(n, N - 2);
      for (int k = 0; k < two.size(); ++k)
        van.eq(forward(pseudo_omega(d, basis_pseudo(i, monomial(two.monomial(k))))), PseudoForm(),
            json{{"omega ^", mask_str(two.monomial(k))}, {"I", i.str()}});
    }
  }
  out.push_back(van.done());

  const auto rc = rumin_complex(h);
  Check cx(suite, "Rumin complex over H: ranks, composition, injective start");
  for (int k = 0; k <= N; ++k) {
    const int expect = (binomial(2 * N, k) - binomial(2 * N, k - 2)).convert_to<int>();
    cx(rc.complex.ranks[k] == expect && rc.complex.ranks[n - k] == expect, json{{"term", k}});
  }
  cx(is_complex(h, rc.complex), json("maps do not compose to zero"));
  cx(injective_start(h, rc.complex, 2), json("first map has a kernel"));
  cx.set_data(json{{"ranks", rc.complex.ranks}});
  out.push_back(cx.done());

  for (const auto& r : exactness_sample(h, rc.complex, config.samples, config.exactness_degree, config.seed)) {
    Check ex(suite, "exactness samples at term " + std::to_string(r.term));
    ex(r.ok(), json{{"successes", r.successes}, {"trials", r.trials}});
    ex(r.kernel_dim > 0, json{{"kernel_dim", r.kernel_dim}});
    ex.set_data(json{{"kernel_dim", r.kernel_dim}, {"trials", r.trials}, {"seed", r.seed}});
    out.push_back(ex.done());
  }

  Check tw(suite, "twisted complexes: homomorphisms, composition, singular images");
  std::vector<std::pair<std::string, TwistData>> twists{{"trivial", TwistData::trivial(d)},
                                                         {"trace character", TwistData::trace_character(d, 1)}};
  // The Jordan twist only exists when d-bar is abelian modulo d_0.
  try {
    twists.emplace_back("jordan", TwistData::jordan(d));
  } catch (const BadConfig&) {
  }
  for (const auto& [name, pi] : twists) {
    const auto tc = twisted_rumin(h, pi);
    const auto rep = complex_check(h, tc, pi);
    tw(rep.ok(), json{{"twist", name},
                      {"homomorphism_failures", rep.homomorphism_failures},
                      {"composition_failures", rep.composition_failures},
                      {"singular_image_failures", rep.singular_image_failures},
                      {"identification_failures", rep.identification_failures}});
  }
  for (const auto& m : rc.complex.maps) tw(twist_map(h, TwistData::trivial(d), m).images == m.images, json("trivial twist"));
  out.push_back(tw.done());
  return out;
}

// ---------------------------------------------------------------------------

int parse_module(const SpGenerators& g, const std::string& name) {
  if (name == "trivial") return 0;
  if (name == "sym2") return -2;
  if (name.size() > 2 && name.rfind("pi", 0) == 0) {
    int p = 0;
    try {
      p = std::stoi(name.substr(2));
    } catch (const std::exception&) {
      throw BadConfig("unknown module '" + name + "'");
    }
    if (p < 1 || p > g.N()) throw BadConfig("module " + name + " needs 1 <= p <= N");
    return p;
  }
  throw BadConfig("unknown module '" + name + "' (expected trivial, pi<p> or sym2)");
}

std::vector<CheckRecord> singular_suite(const Enveloping& h, const RunConfig& config) {
  const char* suite = "singular";
  const SpGenerators g(h.data());
  const int weight = parse_module(g, config.module);
  const Rational c = parse_rational(config.c);
  const SpRep u = scan_module(g, weight);
  const TensorModule m(h, TensorModuleSpec{TwistData::trivial(h.data()), u, c, Convention::V});
  const SingularSpace s = singular_space(m, config.degree_bound);
  std::vector<CheckRecord> out;

  Check sp(suite, "singular space of V(" + u.name + ", " + str(c) + ")");
  json basis = json::array();
  for (const auto& v : s.basis) {
    const int deg = v.contact_degree();
    sp(is_singular(m, v) && is_singular_right(m, v), json{{"vector", fmt(v)}});
    basis.push_back(json{{"degree", deg}, {"iprime", str(c + deg)}, {"vector", fmt(v)}});
  }
  sp.set_data(json{{"module", u.name},
                   {"c", str(c)},
                   {"cutoff", s.cutoff},
                   {"rank", s.rank},
                   {"new_by_degree", s.new_by_degree},
                   {"reducible", !s.only_constants()},
                   {"basis", basis}});
  out.push_back(sp.done());

  Check jac(suite, "e * (e * v) Jacobi identity on generators");
  const auto jr = jacobi_check(m);
  jac(jr.ok(), json{{"first_failure", jr.first_failure}, {"failures", jr.failures}});
  out.push_back(jac.done());

  Check rs(suite, "rho_sing on singular vectors");
  rs(rho_sing_constants_check(m), json("constants"));
  for (const auto& v : s.basis) {
    rs(iprime_grading_check(m, c, v), json{{"I' grading", fmt(v)}});
    rs(csp_stability_check(m, v), json{{"csp stability", fmt(v)}});
    rs(coefficient_lemma_check(m, v), json{{"coefficient lemma", fmt(v)}});
  }
  out.push_back(rs.done());

  Check d2(suite, "degree-two singular vectors: v_0, Casimir and quadratic identities");
  for (const auto& v : s.basis) {
    const auto rep = degree2_structure_check(m, c, v);
    d2(rep.ok(), json{{"vector", fmt(v)},
                      {"v0_identity", rep.v0_identity},
                      {"casimir_identity", rep.casimir_identity},
                      {"quadratic", rep.quadratic}});
  }
  out.push_back(d2.done());

  Check ref(suite, "verdict agrees with the classification");
  const auto expect = reference_verdict(g.N(), weight, c);
  const bool reducible = !s.only_constants();
  const auto degrees = s.degrees();
  const bool deg2 = std::find(degrees.begin(), degrees.end(), 2) != degrees.end();
  ref(reducible == expect.reducible && deg2 == expect.degree2,
      json{{"reducible", reducible}, {"expected", expect.reducible}, {"degree2", deg2}, {"expected_degree2", expect.degree2}});
  out.push_back(ref.done());
  return out;
}

std::vector<CheckRecord> classify_suite(const Enveloping& h, const RunConfig& config) {
  const char* suite = "classify";
  const auto& d = h.data();
  const SpGenerators g(d);
  const auto pi = TwistData::trivial(d);
  const auto scan = classification_scan(h, pi, config.c_min, config.c_max, -1, config.threads);
  std::vector<CheckRecord> out;
  Check jac(suite, "Jacobi identity on every scanned module");
  Check d2(suite, "degree-two solutions satisfy the v_0 and quadratic identities");
  for (const auto& e : scan) {
    const auto ref = reference_verdict(g.N(), e.weight, e.c);
    Check row(suite, e.label + " c=" + str(e.c));
    row(e.verdict.reducible == ref.reducible && e.verdict.has_degree(2) == ref.degree2,
        json{{"reducible", e.verdict.reducible}, {"expected", ref.reducible}, {"degrees", e.verdict.degrees}});
    row.set_data(json{{"module", e.label},
                      {"c", str(e.c)},
                      {"reducible", e.verdict.reducible},
                      {"degrees", e.verdict.degrees},
                      {"cutoff", e.verdict.cutoff}});
    out.push_back(row.done());
    const TensorModule m(h, TensorModuleSpec{pi, scan_module(g, e.weight), e.c, Convention::V});
    const auto jr = jacobi_check(m);
    jac(jr.ok(), json{{"module", e.label}, {"c", str(e.c)}, {"first_failure", jr.first_failure}});
    for (const auto& v : e.degree2_vectors) {
      const auto rep = degree2_structure_check(m, e.c, v);
      d2(rep.ok() && rep.top, json{{"module", e.label}, {"c", str(e.c)}, {"vector", fmt(v)}});
    }
  }
  out.push_back(jac.done());
  out.push_back(d2.done());
  Check tau(suite, "tau(e) by direct expansion equals the closed formula");
  tau.eq(tau_direct(h), tau_formula(h));
  out.push_back(tau.done());
  return out;
}

std::vector<CheckRecord> annihilation_records(const Enveloping& h, const RunConfig& config) {
  std::vector<CheckRecord> out;
  for (const auto& c : annihilation_suite(h, config.truncation)) {
    CheckRecord r;
    r.suite = "annihilation";
    r.name = c.name;
    r.passed = c.passed;
    r.checked = c.checked;
    if (!c.passed) r.witness = c.witness;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"verify-core", "rumin", "singular", "classify", "annihilation"};
  return names;
}

Report run_suites(const RunConfig& config) {
  if (config.suites.empty()) throw BadConfig("no suite selected");
  std::set<std::string> selected;
  for (const auto& s : config.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw BadConfig("unknown suite '" + s + "'");
    selected.insert(s);
  }
  if (config.degree_bound < 1) throw BadConfig("degree bound must be positive");
  if (config.truncation < 1) throw BadConfig("truncation must be positive");
  if (config.samples < 1) throw BadConfig("samples must be positive");
  if (config.exactness_degree < 2) throw BadConfig("exactness degree must be at least 2");
  if (config.c_min > config.c_max) throw BadConfig("c-min exceeds c-max");

  const Enveloping h(load_algebra(config.algebra));
  Report report;
  report.config = config;
  for (const auto& s : suite_names()) {
    if (!selected.count(s)) continue;
    std::vector<CheckRecord> recs;
    if (s == "verify-core") recs = verify_core(h, config);
    else if (s == "rumin") recs = rumin_suite(h, config);
    else if (s == "singular") recs = singular_suite(h, config);
    else if (s == "classify") recs = classify_suite(h, config);
    else recs = annihilation_records(h, config);
    for (auto& r : recs) report.checks.push_back(std::move(r));
  }
  return report;
}

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.passed; }));
}

json Report::to_json() const {
  json cfg{{"algebra", config.algebra}};
  json suites = json::array();
  for (const auto& s : suite_names())
    if (std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end()) suites.push_back(s);
  cfg["suites"] = suites;
  cfg["degree_bound"] = config.degree_bound;
  cfg["truncation"] = config.truncation;
  cfg["seed"] = config.seed;
  cfg["c_min"] = config.c_min;
  cfg["c_max"] = config.c_max;
  cfg["samples"] = config.samples;
  cfg["exactness_degree"] = config.exactness_degree;
  cfg["module"] = config.module;
  cfg["c"] = config.c;
  json recs = json::array();
  for (const auto& r : checks) {
    json j{{"suite", r.suite}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"checked", r.checked}};
    if (!r.passed) j["witness"] = r.witness;
    if (!r.data.is_null()) j["data"] = r.data;
    recs.push_back(std::move(j));
  }
  return json{{"tool", "kdtheta"},
              {"version", kToolVersion},
              {"config", cfg},
              {"checks", recs},
              {"summary", {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string Report::to_table() const {
  std::size_t width = 10;
  for (const auto& r : checks) width = std::max(width, r.name.size());
  std::ostringstream s;
  s << "kdtheta " << kToolVersion << "  algebra=" << config.algebra << "  seed=" << config.seed << "\n";
  s << std::left << std::setw(13) << "suite" << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(6)
    << "status" << "  count\n";
  for (const auto& r : checks) {
    s << std::left << std::setw(13) << r.suite << std::setw(static_cast<int>(width) + 2) << r.name << std::setw(6)
      << (r.passed ? "PASS" : "FAIL") << "  " << r.checked << "\n";
    if (!r.passed) s << "    witness: " << r.witness.dump() << "\n";
  }
  s << passed() << "/" << checks.size() << " checks passed\n";
  return s.str();
}

}  // namespace kdt
