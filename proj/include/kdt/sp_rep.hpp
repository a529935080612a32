#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdt/contact_lie.hpp"
#include "kdt/linalg.hpp"

namespace kdt {

/// The generators of sp(d-bar) and csp(d-bar) as dim x dim matrices on d
/// (row and column 0 vanish except for I'). Pairs (i, j) with 1 <= i <= j
/// <= 2N are numbered in lexicographic order.
class SpGenerators {
 public:
  explicit SpGenerators(const ContactLieData& data);

  int dim() const { return dim_; }
  int N() const { return (dim_ - 1) / 2; }
  const ContactLieData& data() const { return data_; }

  /// e^{ij} = sum_k r^{ik} e_k^j, for 1 <= i and 0 <= j.
  Mat e_upper(int i, int j) const;
  /// f^{ij} = -(e^{ij} + e^{ji}) / 2 for 1 <= i, j.
  const Mat& f_upper(int i, int j) const { return f_[pair_index(i, j)]; }
  /// f_i^j = sum_a omega_ia f^{aj}.
  Mat f_mixed(int i, int j) const;
  /// f_ij = sum_{a,b} omega_ia omega_jb f^{ab}.
  Mat f_lower(int i, int j) const;
  const Mat& i_prime() const { return i_prime_; }

  int count() const { return static_cast<int>(pairs_.size()); }
  const std::pair<int, int>& pair(int k) const { return pairs_[k]; }
  int pair_index(int i, int j) const;
  const Mat& generator(int k) const { return f_[k]; }

  bool in_sp(const Mat& a) const;
  /// Coefficients of a in the basis f^{ij}, i <= j. Throws SolveFailure if
  /// a is not in sp(d-bar).
  Vec decompose(const Mat& a) const;

  /// Right-hand side of the f^{ij} bracket table:
  /// [f^{ij}, f^{kl}] = (r^{ik} f^{jl} + r^{il} f^{jk} + r^{jk} f^{il} + r^{jl} f^{ik}) / 2.
  Mat bracket_table(int i, int j, int k, int l) const;

 private:
  ContactLieData data_;
  int dim_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Mat> f_;
  Mat i_prime_;
  SparseEchelon<Rational> ech_;
};

/// A finite-dimensional sp(d-bar)-module, given by the matrices of the
/// generators f^{ij} (numbered as in SpGenerators).
struct SpRep {
  std::string name;
  int dim = 0;
  std::vector<Mat> f;

  bool is_trivial() const;
  const Mat& upper(const SpGenerators& g, int i, int j) const { return f[g.pair_index(i, j)]; }
  /// rho of sum_k coeffs(k) f^{pair k}.
  Mat act(const Vec& coeffs) const;
  /// rho of an element of sp(d-bar) given as a matrix.
  Mat act(const SpGenerators& g, const Mat& a) const { return act(g.decompose(a)); }
  Mat lower(const SpGenerators& g, int i, int j) const;
};

SpRep trivial_rep(const SpGenerators& g);
/// d-bar itself.
SpRep vector_rep(const SpGenerators& g);
/// Symmetric square of d-bar, isomorphic to the adjoint module R(2 pi_1).
SpRep sym_square_rep(const SpGenerators& g);
/// R(pi_n) realized as the primitive forms K-bar^{2N-n} under the form
/// action. Throws BadWeightIndex unless 0 <= n <= N.
SpRep fundamental_rep(const SpGenerators& g, int n);

/// -sum_{i,j} rho(f_ij) rho(f^{ij}).
Mat casimir_apply(const SpGenerators& g, const SpRep& rep);
/// True iff rho respects the f^{ij} bracket table on all generator pairs.
bool check_sp_brackets(const SpGenerators& g, const SpRep& rep);

/// ad_sp d_0 = ad d_0 on d-bar; ad_sp d^k = ad d^k - e^k_0 + (1/2) sum c_ij^k e^{ij}.
/// The result is a dim x dim matrix supported on d-bar.
Mat ad_sp_dual(const SpGenerators& g, int k);
/// ad_sp extended linearly to arbitrary vectors (d_m = sum_k omega_mk d^k).
Mat ad_sp(const SpGenerators& g, const Vec& a);
/// Restriction to d-bar followed by the projection gl(d-bar) -> sp(d-bar)
/// along the omega-symmetric complement.
Mat sp_projection(const SpGenerators& g, const Mat& a);

/// sum over permutations of (a, b, c, d) of rho(f^{..}) rho(f^{..}) == 0.
bool symmetrized_quartic_check(const SpGenerators& g, const SpRep& rep, int a, int b, int c, int d);
/// Searches all index quadruples for a violation; returns the first one.
std::optional<std::array<int, 4>> find_quartic_violation(const SpGenerators& g, const SpRep& rep);

/// In the symmetric algebra on symbols x = f^{aa}, y = f^{ab}, z = f^{bb}
/// the quartic relations for {a,a,a,a}, {b,b,b,b} and {a,a,b,b} read
/// 24x^2, 24z^2 and 8xz + 16y^2. Returns true iff y^4 is verified to be an
/// explicit combination of them.
bool nilpotency_certificate();

}  // namespace kdt
