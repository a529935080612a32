#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "kdt/contact_lie.hpp"
#include "kdt/linalg.hpp"

namespace kdt {

/// Bit i set <=> x^i occurs. Monomial x^{i1} ^ ... ^ x^{in} with i1 < ... < in
/// is stored under its mask with the convention that its value on
/// d_{i1} ^ ... ^ d_{in} is 1.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
/// Sign (+1/-1) of moving x^k to the front of the increasing word for m.
inline int insertion_sign(Mask m, int k) { return (popcount(m & ((Mask(1) << k) - 1)) & 1) ? -1 : 1; }
std::vector<int> mask_indices(Mask m);

/// Constant-coefficient form: a finite sum of monomials, possibly of mixed degree.
struct Form {
  std::map<Mask, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  /// Degree of the (first) monomial; -1 for the zero form.
  int degree() const { return terms.empty() ? -1 : popcount(terms.begin()->first); }
  Rational coeff(Mask m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add(Mask m, const Rational& v);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= Rational(-1); }
  friend bool operator==(const Form&, const Form&) = default;
};

Form one_form();  // the constant 0-form 1
Form monomial(Mask m, const Rational& c = 1);
Form x(int i);

Form wedge(const Form& a, const Form& b);
/// Chevalley-Eilenberg differential with trivial coefficients.
Form d0(const ContactLieData& data, const Form& a);
/// iota_v: (iota_v alpha)(a_1, ...) = alpha(v ^ a_1 ^ ...).
Form contract(const Vec& v, const Form& a);
/// (A.alpha)(a_1..a_n) = sum_i (-1)^i alpha(A a_i ^ a_1 .. ^a_i^ .. a_n).
Form gl_act(const Mat& a, const Form& f);

Form theta_form(const ContactLieData& data);
Form omega_form(const ContactLieData& data);
Form theta_mul(const ContactLieData& data, const Form& a);
Form omega_mul(const ContactLieData& data, const Form& a);

/// Matrix unit e_i^j on d: e_i^j(d_k) = delta^j_k d_i.
Mat gl_unit(int dim, int i, int j);
/// I' = 2 e_0^0 + sum_{i>0} e_i^i.
Mat i_prime(int dim);

/// The n-forms (optionally only those without x^0) with monomials listed in
/// lexicographic order of their index words.
class FormSpace {
 public:
  FormSpace(int dim, int degree, bool bar = false);
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool bar() const { return bar_; }
  int size() const { return static_cast<int>(monos_.size()); }
  Mask monomial(int k) const { return monos_[k]; }
  int index(Mask m) const;
  SparseVec<Rational> coords(const Form& f) const;
  Form form(const SparseVec<Rational>& v) const;

 private:
  int dim_, degree_;
  bool bar_;
  std::vector<Mask> monos_;
  std::unordered_map<Mask, int> index_;
};

/// Linear subspace of a FormSpace, canonicalized by reduced row echelon form.
class Subspace {
 public:
  Subspace(FormSpace space, const std::vector<Form>& spanning);
  const FormSpace& space() const { return space_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Form>& basis() const { return basis_; }
  bool contains(const Form& f) const;
  /// Canonical representative modulo this subspace (supported on standard
  /// monomials).
  Form reduce(const Form& f) const;
  /// Monomials that are not pivots: a basis of the quotient.
  std::vector<Mask> standard_monomials() const;
  /// Coordinates of f (which must lie in the subspace) in basis().
  Vec coordinates(const Form& f) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  FormSpace space_;
  SparseEchelon<Rational> ech_;
  std::vector<Form> basis_;
  std::vector<SparseVec<Rational>> basis_coords_;
};

struct ContactReduction {
  Subspace I, K;
};

/// I^n = omega ^ Omega^{n-2} + theta ^ Omega^{n-1}, K^n = ker(omega^) ∩ ker(theta^).
ContactReduction compute_IK(const ContactLieData& data, int n);
/// The same inside forms without x^0: I-bar = omega ^ Omega-bar^{n-2}, K-bar = ker(omega^).
ContactReduction compute_IK_bar(const ContactLieData& data, int n);

/// A cochain complex of finite-dimensional spaces; maps[k]: dims[k] -> dims[k+1].
struct CochainComplex {
  std::vector<int> dims;
  std::vector<Mat> maps;
  std::vector<int> cohomology() const;
  bool is_complex() const;
};

/// 0 -> Omega^0/I^0 -> ... -> Omega^N/I^N -> K^{N+1} -> ... -> K^{2N+1},
/// with coordinates on standard monomials (quotients) and on the RREF bases
/// of K^n. The middle map sends a to d0(a - theta ^ g) where d0 a = theta ^ b + omega ^ g.
CochainComplex rumin_constant(const ContactLieData& data);
/// The full complex (Omega, d0).
CochainComplex lie_algebra_complex(const ContactLieData& data);

/// Writes an n-form in I^n as theta ^ beta + omega ^ gamma. The elimination
/// runs over generators in a fixed order; `reversed` flips that order, which
/// generally yields a different (beta, gamma) pair.
class ThetaOmegaSolver {
 public:
  ThetaOmegaSolver(const ContactLieData& data, int n, bool reversed = false);
  struct Split {
    Form beta, gamma;
  };
  /// Throws SolveFailure if target is not in I^n.
  Split split(const Form& target) const;

 private:
  int dim_, n_;
  FormSpace target_space_;
  std::vector<std::pair<bool, Mask>> generators_;  // (is_theta, monomial)
  SparseEchelon<Rational> ech_;
};

/// K-bar^{N+m} -> Omega-bar^{N-m}/I-bar^{N-m} via the inverse of omega^m is bijective.
bool omega_power_iso_check(const ContactLieData& data, int m);

}  // namespace kdt
