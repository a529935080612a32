#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kdt/rational.hpp"

namespace kdt {

inline constexpr int kMaxDim = 15;

/// Exponent vector (i_0, ..., i_{dim-1}) of a PBW monomial. Index 0 is the
/// Reeb direction, which counts twice in the contact degree.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int dim) : dim_(static_cast<std::uint8_t>(dim)) {}
  MultiIndex(int dim, std::initializer_list<int> entries);

  static MultiIndex unit(int dim, int i, int power = 1) {
    MultiIndex m(dim);
    m.e_[i] = static_cast<std::uint8_t>(power);
    return m;
  }

  int dim() const { return dim_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) { e_[i] = static_cast<std::uint8_t>(v); }
  void add(int i, int v) { e_[i] = static_cast<std::uint8_t>(e_[i] + v); }

  int degree() const {
    int s = 0;
    for (int i = 0; i < dim_; ++i) s += e_[i];
    return s;
  }
  int contact_degree() const { return degree() + (dim_ ? e_[0] : 0); }
  bool is_zero() const { return degree() == 0; }
  int first_nonzero() const {
    for (int i = 0; i < dim_; ++i)
      if (e_[i]) return i;
    return -1;
  }

  /// Componentwise <=.
  bool divides(const MultiIndex& o) const {
    for (int i = 0; i < dim_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Rational factorial() const;

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < a.dim_; ++i) a.e_[i] = static_cast<std::uint8_t>(a.e_[i] + b.e_[i]);
    return a;
  }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < a.dim_; ++i) a.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
    return a;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  // Graded by total degree first so that std::map iteration lists low
  // filtration pieces first.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (a.e_[i] != b.e_[i]) return b.e_[i] <=> a.e_[i];
    return a.dim_ <=> b.dim_;
  }

  std::size_t hash() const {
    std::size_t h = dim_;
    for (int i = 0; i < dim_; ++i) h = h * 131 + e_[i];
    return h;
  }

  std::string str() const;

 private:
  std::array<std::uint8_t, kMaxDim> e_{};
  std::uint8_t dim_ = 0;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const { return m.hash(); }
};

/// All sub-multi-indices J <= I, i.e. the J in Delta(d^(I)) = sum d^(J) (x) d^(I-J).
std::vector<MultiIndex> sub_indices(const MultiIndex& i);

/// All I with |I| <= bound (canonical degree), in MultiIndex order.
std::vector<MultiIndex> indices_up_to_degree(int dim, int bound);
/// All I with |I|' <= bound (contact degree), in MultiIndex order.
std::vector<MultiIndex> indices_up_to_contact(int dim, int bound);

}  // namespace kdt

template <>
struct std::hash<kdt::MultiIndex> {
  std::size_t operator()(const kdt::MultiIndex& m) const { return m.hash(); }
};
