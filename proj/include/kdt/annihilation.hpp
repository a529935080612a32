#pragma once

// The annihilation algebra W = X (x) d of W(d), the subalgebra K spanned by
// the Fourier coefficients x (x)_H e, and their contact filtrations. All
// elements are truncated in the contact degree of X.

#include <string>
#include <vector>

#include "kdt/enveloping.hpp"
#include "kdt/sp_rep.hpp"

namespace kdt {

/// sum_j parts[j] (x) d_j, exact for |I|' <= truncation.
struct TruncatedWElement {
  int truncation = 0;
  std::vector<DualElement> parts;

  int dim() const { return static_cast<int>(parts.size()); }
  Rational coeff(const MultiIndex& i, int j) const { return parts[j].coeff(i); }
  bool is_zero() const;
  TruncatedWElement& operator+=(const TruncatedWElement& o);
  TruncatedWElement& operator-=(const TruncatedWElement& o);
  TruncatedWElement& operator*=(const Rational& s);
  friend TruncatedWElement operator+(TruncatedWElement a, const TruncatedWElement& b) { return a += b; }
  friend TruncatedWElement operator-(TruncatedWElement a, const TruncatedWElement& b) { return a -= b; }
  friend TruncatedWElement operator*(const Rational& s, TruncatedWElement a) { return a *= s; }
  /// Equal on the common truncation range.
  bool agrees_with(const TruncatedWElement& o) const;
};

TruncatedWElement w_zero(int dim, int truncation);
/// x (x) a for a vector a in d.
TruncatedWElement w_elem(const DualElement& x, const Vec& a);

/// [x (x) a, y (x) b] = xy (x) [a,b] - x(ya) (x) b + (xb)y (x) a. The result
/// is exact up to min(T_u, T_v) - 2; TruncationOverflow if that is negative.
TruncatedWElement w_bracket(const Enveloping& h, const TruncatedWElement& u, const TruncatedWElement& v);

/// x (x)_H e -> x (x) d_0 - sum_i x d_i (x) d^i; exact up to T_x - 1.
TruncatedWElement embed_k(const Enveloping& h, const DualElement& x);

/// Membership in W_p = Fil_p X (x) d (all |I| >= p + 1).
bool in_w(const TruncatedWElement& u, int p);
/// Membership in W'_p = Fil'_p X (x) d-bar + Fil'_{p+1} X (x) d_0.
bool in_w_prime(const TruncatedWElement& u, int p);
/// W_0 / W_1 -> gl(d), (x (x) a) -> -a (x) (x mod Fil_1 X). Requires u in W_0.
Mat to_gl(const TruncatedWElement& u);

struct AnnihilationCheck {
  std::string name;
  bool passed = false;
  int checked = 0;
  std::string witness;  // first failure
};

/// The images of x (x)_H e for x = 1, x^j, x^0, x^i x^j, x^0 x^j, x^i x^j x^k,
/// one record per item.
std::vector<AnnihilationCheck> fourier_checks(const Enveloping& h, int truncation);
/// W_0/W_1 brackets of x^j (x) d_i match the commutators of their images in
/// gl(d), and the adjoint action on W/W_0 is the standard action on d.
AnnihilationCheck w0_quotient_iso_check(const Enveloping& h, int truncation);
/// -I' = 2 x^0 (x) d_0 + sum x^i (x) d_i = 2 x^0 (x) d_0 + sum omega_ij x^i (x) d^j
///     = 2 x^0 (x)_H e + 2 sum_{i<j} omega_ij f^{ij}  mod W_1.
AnnihilationCheck iprime_expansion_check(const Enveloping& h, int truncation);
/// pi(K'_0) = cz x| csp, pi(K'_1) = cz, pi(K'_2) = 0, and the brackets of
/// preimages of f^{ij}, I' reproduce the csp table modulo cz.
AnnihilationCheck csp_quotient_check(const Enveloping& h, int truncation);
/// d-bar lowers Fil'_p X by one and d_0 by two, from both sides; d lowers
/// Fil_p X by one.
AnnihilationCheck d_action_filtration_check(const Enveloping& h, int truncation);
/// embed_k(Fil'_{p+1} X) lies in W'_p, and K'_2 lies in W_1.
AnnihilationCheck k_filtration_check(const Enveloping& h, int truncation);
/// Antisymmetry, [W_i, W_j] in W_{i+j} and [K'_m, K'_n] in W'_{m+n} on basis
/// elements, and Jacobi within the truncation.
AnnihilationCheck bracket_properties_check(const Enveloping& h, int truncation);

std::vector<AnnihilationCheck> annihilation_suite(const Enveloping& h, int truncation);

}  // namespace kdt
