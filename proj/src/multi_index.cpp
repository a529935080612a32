#include "kdt/multi_index.hpp"

#include <algorithm>

namespace kdt {

MultiIndex::MultiIndex(int dim, std::initializer_list<int> entries) : dim_(static_cast<std::uint8_t>(dim)) {
  int i = 0;
  for (int v : entries) e_[i++] = static_cast<std::uint8_t>(v);
}

Rational MultiIndex::factorial() const {
  Rational r = 1;
  for (int i = 0; i < dim_; ++i) r *= kdt::factorial(e_[i]);
  return r;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::vector<MultiIndex> sub_indices(const MultiIndex& m) {
  std::vector<MultiIndex> out{MultiIndex(m.dim())};
  for (int i = 0; i < m.dim(); ++i) {
    const std::size_t n = out.size();
    for (int p = 1; p <= m[i]; ++p)
      for (std::size_t k = 0; k < n; ++k) {
        MultiIndex j = out[k];
        j.set(i, p);
        out.push_back(j);
      }
  }
  return out;
}

namespace {

template <class Weight>
void enumerate(int dim, int pos, int budget, MultiIndex& cur, Weight w, std::vector<MultiIndex>& out) {
  if (pos == dim) {
    out.push_back(cur);
    return;
  }
  for (int p = 0; p * w(pos) <= budget; ++p) {
    cur.set(pos, p);
    enumerate(dim, pos + 1, budget - p * w(pos), cur, w, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<MultiIndex> indices_up_to_degree(int dim, int bound) {
  std::vector<MultiIndex> out;
  if (bound < 0) return out;
  MultiIndex cur(dim);
  enumerate(dim, 0, bound, cur, [](int) { return 1; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> indices_up_to_contact(int dim, int bound) {
  std::vector<MultiIndex> out;
  if (bound < 0) return out;
  MultiIndex cur(dim);
  enumerate(dim, 0, bound, cur, [](int i) { return i == 0 ? 2 : 1; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kdt
