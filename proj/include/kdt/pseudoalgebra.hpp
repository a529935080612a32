#pragma once

// The contact Lie pseudoalgebra K(d, theta) = He acting on tensor modules
// H (x) R, singular vectors and the reducibility scan.

#include <map>
#include <string>
#include <vector>

#include "kdt/pseudoforms.hpp"
#include "kdt/sp_rep.hpp"
#include "kdt/tensor_module.hpp"

namespace kdt {

/// T: the action written with -e (x)_H (1 (x) u); V: the trace-shifted
/// variant, V(R) = T(R') with d acting by rho + tr ad and A by rho - tr A.
enum class Convention { T, V };

/// A finite-dimensional module R over d + (cz x| csp).
struct Carrier {
  int dim = 0;
  std::vector<Mat> d;   // rho(d_k)
  std::vector<Mat> sp;  // rho(f^{ij}), in SpGenerators pair order
  Mat iprime;
  std::vector<Mat> cz;  // rho(e^{i0}) for i = 1..2N at index i - 1; empty when cz acts trivially

  /// rho of an element of sp given as a matrix on d.
  Mat rho_sp(const SpGenerators& g, const Mat& a) const;
  Mat rho_f(const SpGenerators& g, int i, int j) const { return sp[g.pair_index(i, j)]; }
};

/// Pi (x) U with I' acting by c; generator p * dim U + q is u_p (x) w_q.
Carrier product_carrier(const SpGenerators& g, const TwistData& pi, const SpRep& u, const Rational& c);
/// Pi (x) (carrier of a Rumin term), with gl(d) acting on forms; the cz part
/// is kept when it acts nontrivially.
Carrier form_carrier(const SpGenerators& g, const RuminTerm& term, const TwistData& pi);
/// All n-forms (FormSpace order) with d acting trivially; cz acts nontrivially here.
Carrier full_form_carrier(const SpGenerators& g, int n);
/// d -> rho + sign tr ad, I' -> rho - sign (2N + 2). With sign = 1 this turns
/// a V-convention carrier into the equivalent T-convention one.
Carrier trace_shift(const ContactLieData& data, Carrier r, int sign);

struct TensorModuleSpec {
  TwistData pi;
  SpRep u;
  Rational c;
  Convention convention = Convention::V;
};

class TensorModule {
 public:
  TensorModule(const Enveloping& h, Carrier r, Convention convention);
  TensorModule(const Enveloping& h, const TensorModuleSpec& spec);

  const Enveloping& h() const { return *h_; }
  const SpGenerators& sp() const { return g_; }
  const Carrier& carrier() const { return r_; }
  Convention convention() const { return convention_; }
  int rank() const { return r_.dim; }

  /// e * (1 (x) r) in generator form.
  const PairTensor& e_on_generator(int r) const { return generator_action_[r]; }
  /// e * v, extended by a * (h v) = (1 (x) h)(a * v).
  PairTensor e_star_pair(const TensorElement& v) const;
  NormalizedAction e_star(const TensorElement& v) const { return to_left_normal(*h_, e_star_pair(v)); }

 private:
  PairTensor generator_action(int r) const;

  const Enveloping* h_;
  SpGenerators g_;
  Carrier r_;
  Convention convention_;
  std::vector<PairTensor> generator_action_;
};

/// e * x for x = e * v, in H^{(x)3} (x)_H V: (f (x) g) (x) w with
/// e * w = (p (x) q) (x) w' gives p (x) f q_(1) (x) g q_(2).
TripleTensor act_again(const TensorModule& m, const PairTensor& x);
/// [e * e] * v computed from x = e * v, with [e * e] = (r + s (x) 1 - 1 (x) s) (x)_H e.
TripleTensor bracket_act(const Enveloping& h, const PairTensor& x);
TripleTensor swap_first_two(const TripleTensor& x);

struct JacobiReport {
  int checked = 0;
  int failures = 0;
  int first_failure = -1;  // generator index
  bool ok() const { return failures == 0; }
};
/// [e * e] * v = e * (e * v) - (sigma (x) id)(e * (e * v)) on every 1 (x) r.
JacobiReport jacobi_check(const TensorModule& m);
/// The same identity for an action given directly on generators.
JacobiReport jacobi_check(const Enveloping& h, const std::vector<PairTensor>& generator_action);

/// ((id (x) id) (x)_H beta)(e * (1 (x) v_i)) = e * beta(1 (x) v_i) for all i.
bool is_homomorphism(const TensorModule& source, const TensorModule& target, const FreeMap& beta);
/// The action on Pi (x) V induced from the action on V:
/// (f (x) g) (x) (1 (x) v_j) -> (f (x) g_(1)) (x) (1 (x) S(g_(2)) u_p (x) v_j).
std::vector<PairTensor> twist_action(const Enveloping& h, const TwistData& pi,
                                     const std::vector<PairTensor>& action, int rank);

// ---------------------------------------------------------------------------
// Singular vectors.

/// Left-normal coefficients of e * v vanish beyond contact degree 2.
bool is_singular(const TensorModule& m, const TensorElement& v);
/// The same criterion with right-normal coefficients.
bool is_singular_right(const TensorModule& m, const TensorElement& v);

struct SingularSpace {
  int cutoff = 0;
  int rank = 0;
  std::vector<TensorElement> basis;  // adapted to the contact filtration
  std::vector<int> new_by_degree;    // dim of sing cap Fil'^p minus dim of sing cap Fil'^{p-1}
  bool only_constants() const { return static_cast<int>(basis.size()) == rank; }
  /// Contact degrees p >= 1 that carry new singular vectors.
  std::vector<int> degrees() const;
};
SingularSpace singular_space(const TensorModule& m, int cutoff);
int default_cutoff(const SpRep& u);

/// rho_sing(f^{ij}) v (in pair order) and rho_sing(I') v, read off from the
/// left-normal coefficients of e * v for singular v.
struct SingularAction {
  std::vector<TensorElement> f;
  TensorElement iprime;
};
SingularAction rho_sing(const TensorModule& m, const TensorElement& v);
/// On constants rho_sing(A)(1 (x) u) = 1 (x) rho_R(A) u for A in csp.
bool rho_sing_constants_check(const TensorModule& m);
/// (rho_sing(I') - c - k) v lies in Fil'^{k-1} where k is the contact degree of v.
bool iprime_grading_check(const TensorModule& m, const Rational& c, const TensorElement& v);
/// csp maps the singular vector v to singular vectors.
bool csp_stability_check(const TensorModule& m, const TensorElement& v);

/// psi(u) = sum_{i,j > 0} d_i d_j (x) rho(f^{ij}) u.
TensorElement psi(const TensorModule& m, const Vec& u);
/// The right-normal coefficient of e * v at 1 (x) d^(I) equals psi(v_I) modulo
/// canonical degree <= 1, for every I.
bool coefficient_lemma_check(const TensorModule& m, const TensorElement& v);

struct Degree2Report {
  bool singular = false;
  bool top = false;  // v has a nonzero d_i d_j part
  bool v0_identity = false;
  bool casimir_identity = false;
  bool quadratic = false;
  Vec u, v0;
  bool ok() const { return singular && (!top || (v0_identity && casimir_identity && quadratic)); }
};
/// For a V-convention module with I' = c: recovers u from the d_i d_j part
/// of v, then checks v_0 = (c/2 - N - 1) u, c v_0 = sum f_ab f^{ab} u and
/// c^2 - (2N+2) c + 2 kappa = 0 where the Casimir acts on u by kappa.
Degree2Report degree2_structure_check(const TensorModule& m, const Rational& c, const TensorElement& v);

// ---------------------------------------------------------------------------
// Classification.

struct Verdict {
  bool reducible = false;
  std::vector<int> degrees;  // contact degrees of nonconstant singular vectors
  int cutoff = 0;
  bool has_degree(int p) const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};
Verdict classify(const Enveloping& h, const TensorModuleSpec& spec, int cutoff = -1);

/// weight: 0 for the trivial module, p for R(pi_p), -2 for R(2 pi_1).
struct ScanEntry {
  int weight = 0;
  std::string label;
  Rational c;
  Verdict verdict;
  std::vector<TensorElement> degree2_vectors;
};
std::vector<ScanEntry> classification_scan(const Enveloping& h, const TwistData& pi, int c_min, int c_max,
                                           int cutoff = -1, int threads = 0);
SpRep scan_module(const SpGenerators& g, int weight);
/// Expected outcome: reducible iff (trivial, 0) or (R(pi_p), p) or
/// (R(pi_p), 2N + 2 - p); degree-2 singular vectors only at (R(pi_N), N).
struct ReferenceVerdict {
  bool reducible = false;
  bool degree2 = false;
};
ReferenceVerdict reference_verdict(int N, int weight, const Rational& c);

// ---------------------------------------------------------------------------

/// tau(e) in H (x) gl(d), by expanding tau(h (x) d_i) = h (x) ad d_i + sum_j h d_j (x) e_i^j.
std::map<MultiIndex, Mat> tau_direct(const Enveloping& h);
/// (id (x) ad_sp)(e) + d_0 (x) I'/2 - sum d_0 d_i (x) e^{i0} + sum d_i d_j (x) f^{ij}.
/// The order d_0 d_i matters when [d_0, d_i] != 0.
std::map<MultiIndex, Mat> tau_formula(const Enveloping& h);

/// The Rumin complex twisted by Pi together with its members as tensor modules.
struct TwistedComplex {
  std::vector<RuminTerm> terms;
  std::vector<TensorModule> modules;
  FreeComplex complex;
};
TwistedComplex twisted_rumin(const Enveloping& h, const TwistData& pi);

struct ComplexReport {
  int maps = 0;
  int homomorphism_failures = 0;
  int composition_failures = 0;
  int singular_image_failures = 0;
  int identification_failures = 0;
  bool ok() const {
    return homomorphism_failures == 0 && composition_failures == 0 && singular_image_failures == 0 &&
           identification_failures == 0;
  }
};
/// Each twisted map is a module homomorphism, consecutive maps compose to
/// zero, images of generators are singular, and the module structures agree
/// with the twisted direct action on forms.
ComplexReport complex_check(const Enveloping& h, const TwistedComplex& tc, const TwistData& pi);

}  // namespace kdt
