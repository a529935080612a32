#pragma once

#include <string>
#include <vector>

#include "kdt/rational.hpp"

namespace kdt {

/// One nonzero structure constant: [b_i, b_j] has coefficient value on b_k.
struct BracketEntry {
  int i, j, k;
  Rational value;
};

/// A contact Lie algebra (d, theta) written in a basis with d_0 = s (the
/// Reeb element: omega(s, .) = 0, theta(s) = -1) and d_1..d_2N spanning
/// ker theta. Matrices indexed by basis labels are dim x dim; the rows and
/// columns of label 0 in omega and r are zero.
class ContactLieData {
 public:
  int dim() const { return dim_; }
  int N() const { return (dim_ - 1) / 2; }

  /// c_ij^k with [d_i, d_j] = sum_k c_ij^k d_k.
  const Rational& c(int i, int j, int k) const { return ad_[i](k, j); }
  /// Matrix of ad d_i: column j is [d_i, d_j].
  const Mat& ad(int i) const { return ad_[i]; }
  Mat ad(const Vec& a) const;
  Vec bracket(const Vec& a, const Vec& b) const;

  const Vec& theta() const { return theta_; }
  /// omega(d_i ^ d_j) = -theta([d_i, d_j]).
  const Mat& omega() const { return omega_; }
  /// Inverse of omega on d-bar: sum_j r^{ij} omega_jk = delta.
  const Mat& r() const { return r_; }
  /// Coordinates of d^i = sum_j r^{ij} d_j (zero vector for i = 0).
  Vec dual(int i) const;
  /// tr ad d_k.
  const Rational& trace_ad(int k) const { return trace_ad_[k]; }
  /// omega(a ^ b) for arbitrary vectors.
  Rational omega(const Vec& a, const Vec& b) const;

  /// Column j holds the coordinates of d_j in the basis the algebra was
  /// given in.
  const Mat& frame() const { return frame_; }
  const std::vector<std::string>& input_labels() const { return labels_; }

  /// Re-expresses the algebra in a new basis of d-bar. Columns of `basis`
  /// are coordinates (in the current d_1..d_2N, as dim-vectors with zero in
  /// slot 0) of the new d_1..d_2N.
  ContactLieData rebased(const Mat& basis) const;

  /// Structure constants in the input basis (dim^3, i-major); used to
  /// rebuild and to corrupt data in tests.
  std::vector<Rational> raw_constants() const;

  friend ContactLieData build_contact_data(int dim, const std::vector<BracketEntry>& brackets,
                                           const std::vector<Rational>& theta,
                                           std::vector<std::string> labels);
  friend ContactLieData from_normalized_constants(int dim, std::vector<Rational> c);

 private:
  void derive();

  int dim_ = 0;
  std::vector<Mat> ad_;
  Vec theta_;
  Mat omega_, r_;
  std::vector<Rational> trace_ad_;
  Mat frame_;
  std::vector<std::string> labels_;
};

/// Validates (d, theta) and normalizes the basis. Throws JacobiViolation or
/// NotContact.
ContactLieData build_contact_data(int dim, const std::vector<BracketEntry>& brackets,
                                  const std::vector<Rational>& theta,
                                  std::vector<std::string> labels = {});

/// Builds a datum directly from constants c[(i*dim+j)*dim+k] that are
/// already normalized (theta = -x^0). No validation beyond the derived data;
/// used for perturbation tests.
ContactLieData from_normalized_constants(int dim, std::vector<Rational> c);

/// Ordered basis u_1..u_N, v_1..v_N of d-bar with omega(u_i ^ v_i) = 1 and
/// all other pairings zero. Columns are coordinates in d_0..d_2N.
Mat symplectic_frame(const ContactLieData& data);
ContactLieData with_symplectic_basis(const ContactLieData& data);

/// sum_{i,j} r^{ki} c_ij^j + 1/2 sum_{i,j} r^{ij} c_ij^k == 0 for all k != 0.
bool check_remark_identity(const ContactLieData& data);

/// Jacobi identity of arbitrary constants c[(i*dim+j)*dim+k].
bool satisfies_jacobi(int dim, const std::vector<Rational>& c);

ContactLieData sl2();
ContactLieData heisenberg(int n);
/// r_2 (+) k with [e1, e2] = e2 and theta = x^2 + x^3: a contact algebra
/// that is not unimodular (tr ad d_1 = 1).
ContactLieData affine_plus_line();

/// "sl2", "heisenberg:N", "affine" or a path to a JSON file with fields
/// dim, brackets [[i,j,k,num,den],...], theta [...].
ContactLieData load_algebra(const std::string& source);

}  // namespace kdt
