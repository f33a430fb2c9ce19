#include "cwb/cayley.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>

#include "cwb/error.hpp"

namespace cwb {

CayleyTable::CayleyTable(std::size_t order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != order_ * order_) {
    throw Error(ErrorKind::InvalidParameter, "multiplication table must be order x order");
  }
  const int n = static_cast<int>(order_);
  for (int v : table_) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidParameter, "table entry out of range");
  }
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = product(e, a) == a && product(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorKind::InvalidParameter, "table has no identity");

  inverse_.assign(order_, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (product(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0 || product(inverse_[a], a) != identity_) {
      throw Error(ErrorKind::InvalidParameter, "element without two-sided inverse");
    }
  }
  if (order_ <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (product(product(a, b), c) != product(a, product(b, c))) {
            throw Error(ErrorKind::InvalidParameter, "table is not associative");
          }
  }

  element_order_.assign(order_, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1;
    int x = a;
    while (x != identity_) {
      x = product(x, a);
      ++k;
    }
    element_order_[a] = k;
  }
}

int CayleyTable::power(int a, int k) const {
  const int ord = element_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  int x = identity_;
  for (int i = 0; i < k; ++i) x = product(x, a);
  return x;
}

bool CayleyTable::is_abelian() const {
  const int n = static_cast<int>(order_);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!commute(a, b)) return false;
  return true;
}

bool CayleyTable::is_cyclic() const {
  return std::any_of(element_order_.begin(), element_order_.end(),
                     [this](int o) { return static_cast<std::size_t>(o) == order_; });
}

std::vector<int> CayleyTable::center() const {
  std::vector<int> z;
  const int n = static_cast<int>(order_);
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = commute(a, b);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> CayleyTable::generated_subgroup(const std::vector<int>& generators) const {
  std::vector<char> seen(order_, 0);
  std::deque<int> queue{identity_};
  seen[identity_] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : generators) {
      const int y = product(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < order_; ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> CayleyTable::derived_subgroup(const std::vector<int>& subgroup) const {
  std::vector<char> is_commutator(order_, 0);
  for (int a : subgroup)
    for (int b : subgroup)
      is_commutator[product(product(a, b), product(inverse(a), inverse(b)))] = 1;
  std::vector<int> gens;
  for (std::size_t i = 0; i < order_; ++i)
    if (is_commutator[i]) gens.push_back(static_cast<int>(i));
  return generated_subgroup(gens);
}

std::vector<int> CayleyTable::derived_subgroup() const {
  std::vector<int> all(order_);
  for (std::size_t i = 0; i < order_; ++i) all[i] = static_cast<int>(i);
  return derived_subgroup(all);
}

std::optional<int> CayleyTable::derived_length() const {
  std::vector<int> current(order_);
  for (std::size_t i = 0; i < order_; ++i) current[i] = static_cast<int>(i);
  int length = 0;
  while (current.size() > 1) {
    std::vector<int> next = derived_subgroup(current);
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
    ++length;
  }
  return length;
}

bool CayleyTable::is_solvable() const { return derived_length().has_value(); }

std::vector<int> CayleyTable::involutions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < order_; ++i)
    if (element_order_[i] == 2) out.push_back(static_cast<int>(i));
  return out;
}

CayleyTable sl25_table() {
  using M = std::array<int, 4>;  // (a b; c d)
  std::vector<M> elems;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          if (((a * d - b * c) % 5 + 5) % 5 == 1) elems.push_back({a, b, c, d});
  std::map<M, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const std::size_t n = elems.size();
  std::vector<int> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const M& x = elems[i];
      const M& y = elems[j];
      const M p = {(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                   (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
      table[i * n + j] = index.at(p);
    }
  }
  return CayleyTable(n, std::move(table));
}

CayleyTable klein_four_table() {
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = a ^ b;
  return CayleyTable(4, std::move(table));
}

CayleyTable cyclic_table(std::size_t n) {
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<int>((a + b) % n);
  return CayleyTable(n, std::move(table));
}

}  // namespace cwb
