#pragma once

// Forms with coefficients in H: Omega^n(d) = H (x) Omega^n, the pseudo de
// Rham differential, its contact reduction (the Rumin complex over H) and
// the twisting functor on free H-modules.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kdt/exterior.hpp"
#include "kdt/tensor_module.hpp"

namespace kdt {

/// sum_I d^(I) (x) alpha_I with constant forms alpha_I.
struct PseudoForm {
  std::map<MultiIndex, Form> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const MultiIndex& i, const Form& f);
  PseudoForm& operator+=(const PseudoForm& o);
  PseudoForm& operator-=(const PseudoForm& o);
  PseudoForm& operator*=(const Rational& s);
  friend PseudoForm operator+(PseudoForm a, const PseudoForm& b) { return a += b; }
  friend PseudoForm operator-(PseudoForm a, const PseudoForm& b) { return a -= b; }
  friend PseudoForm operator*(const Rational& s, PseudoForm a) { return a *= s; }
  friend bool operator==(const PseudoForm&, const PseudoForm&) = default;
};

/// 1 (x) alpha.
PseudoForm constant_pseudo(int dim, const Form& alpha);
PseudoForm basis_pseudo(const MultiIndex& i, const Form& alpha);
/// h . alpha (left multiplication on the coefficients).
PseudoForm h_mul(const Enveloping& h, const PBWElement& a, const PseudoForm& alpha);
/// Coefficientwise application of a map on constant forms.
template <class Fn>
PseudoForm map_coefficients(const PseudoForm& a, Fn&& fn) {
  PseudoForm out;
  for (const auto& [i, f] : a.terms) out.add(i, fn(f));
  return out;
}

/// d(h (x) alpha) = h (x) d0 alpha - sum_k h d_k (x) x^k ^ alpha.
PseudoForm pseudo_d(const Enveloping& h, const PseudoForm& alpha);
/// sum_i d_i (x) x^i; d(1) = -epsilon_form.
PseudoForm epsilon_form(int dim);
PseudoForm pseudo_theta(const ContactLieData& data, const PseudoForm& alpha);
PseudoForm pseudo_omega(const ContactLieData& data, const PseudoForm& alpha);
/// theta ^ alpha = omega ^ alpha = 0.
bool in_K(const ContactLieData& data, const PseudoForm& alpha);

struct RelationsReport {
  int checked = 0;
  int d_squared_failures = 0;
  int psi_failures = 0;    // d Psi = Psi d
  int theta_failures = 0;  // d Theta = Psi - Theta d
  bool ok() const { return d_squared_failures == 0 && psi_failures == 0 && theta_failures == 0; }
};
/// Checks the three operator identities on every d^(I) (x) x^S with
/// |I| <= degree_bound.
RelationsReport relations_check(const Enveloping& h, int degree_bound);

/// The second-order map Omega^N(d) -> K^{N+1}(d): split each coefficient of
/// d alpha as theta ^ beta + omega ^ gamma and return d(alpha - theta ^ gamma).
class RuminMap {
 public:
  explicit RuminMap(const Enveloping& h, bool reversed = false);
  PseudoForm operator()(const PseudoForm& alpha) const;

 private:
  const Enveloping& h_;
  ThetaOmegaSolver solver_;
};

/// A term of the Rumin complex over H: H (x) (Omega^n / I^n) for n <= N,
/// H (x) K^n for n > N. Generators are the standard monomials of the
/// quotient or the RREF basis of K^n.
class RuminTerm {
 public:
  RuminTerm(const ContactLieData& data, int n);
  int degree() const { return n_; }
  bool quotient() const { return quotient_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const Form& generator(int k) const { return generators_[k]; }
  /// Carrier coordinates of a form (reduced mod I^n, or expanded in K^n).
  Vec coords(const Form& f) const;
  TensorElement to_tensor(const PseudoForm& a) const;
  PseudoForm from_tensor(const TensorElement& t) const;
  /// Matrix of A . on the carrier (A in gl(d) acting on forms).
  Mat gl_matrix(const Mat& a) const;
  std::string label() const;

 private:
  int n_;
  bool quotient_;
  Subspace space_;  // I^n or K^n
  std::vector<Form> generators_;
};

struct FreeComplex {
  std::vector<int> ranks;
  std::vector<FreeMap> maps;  // maps[k]: term k -> term k + 1
};

struct RuminComplex {
  std::vector<RuminTerm> terms;
  FreeComplex complex;
};
/// The contact pseudo de Rham complex 0 -> Omega^0/I^0 -> ... -> K^{2N+1}.
RuminComplex rumin_complex(const Enveloping& h);

/// Checks that consecutive maps compose to zero on all generators.
bool is_complex(const Enveloping& h, const FreeComplex& c);

struct ExactnessReport {
  int term = 0;        // interior term index
  int kernel_dim = 0;  // dimension of the sampled cocycle space
  int trials = 0;
  int successes = 0;
  std::uint64_t seed = 0;
  bool ok() const { return successes == trials; }
};
/// For every interior term k, draws random cocycles of coefficient degree
/// <= degree_bound - 2 and solves for a preimage of degree <= degree_bound.
std::vector<ExactnessReport> exactness_sample(const Enveloping& h, const FreeComplex& c, int trials,
                                              int degree_bound, std::uint64_t seed);
/// The first map has trivial kernel in coefficient degree <= degree_bound.
bool injective_start(const Enveloping& h, const FreeComplex& c, int degree_bound);

/// A finite-dimensional d-module: matrices rho(d_k).
class TwistData {
 public:
  /// Throws BadConfig unless the matrices satisfy the brackets of d.
  TwistData(const ContactLieData& data, std::vector<Mat> rho);
  static TwistData trivial(const ContactLieData& data, int dim = 1);
  /// k_chi for chi = sign * tr ad.
  static TwistData trace_character(const ContactLieData& data, int sign);
  /// Non-semisimple 2-dim twist: d_0 -> 0, d_i -> i + (2i - 1) J with J the
  /// nilpotent Jordan block. Only a representation when d-bar acts
  /// commutatively modulo d_0 (Heisenberg); BadConfig otherwise.
  static TwistData jordan(const ContactLieData& data);

  int dim() const { return dim_; }
  const Mat& rho(int k) const { return rho_[k]; }
  const std::vector<Mat>& matrices() const { return rho_; }
  /// rho extended to H.
  Mat rho_h(const PBWElement& a) const;
  /// rho(d^(I)) = prod_k rho(d_k)^{i_k} / i_k!.
  const Mat& rho_basis(const MultiIndex& i) const;
  /// rho(S(d^(I))).
  const Mat& rho_antipode(const Enveloping& h, const MultiIndex& i) const;
  /// Pi (x) Pi' with d acting by the Leibniz rule.
  TwistData tensor(const TwistData& o) const;

 private:
  TwistData(int dim, std::vector<Mat> rho) : dim_(dim), rho_(std::move(rho)) {}
  int dim_;
  std::vector<Mat> rho_;
  using Cache = MemoCache<MultiIndex, Mat, MultiIndexHash>;
  std::shared_ptr<Cache> basis_cache_ = std::make_shared<Cache>();
  std::shared_ptr<Cache> antipode_cache_ = std::make_shared<Cache>();
};

/// T_Pi(beta)(1 (x) u (x) v_i) = sum h_(1) (x) h_(-2) u (x) v'_j, where
/// beta(1 (x) v_i) = sum h_ij (x) v'_j. Generator u_p (x) v_i has index
/// p * rank + i.
FreeMap twist_map(const Enveloping& h, const TwistData& pi, const FreeMap& beta);

/// e * (1 (x) x^S) for the d-module structure given by the W(d) action on
/// forms, for every monomial of degree n (in FormSpace order). Values are
/// in FormSpace coordinates.
std::vector<PairTensor> e_action_on_forms(const Enveloping& h, int n);
/// The same action induced on a Rumin term, in carrier coordinates.
std::vector<PairTensor> e_action_on_term(const Enveloping& h, const RuminTerm& term);

}  // namespace kdt
