#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace cwb {

/// Abstract finite group given by its multiplication table. Elements are
/// indices 0..order-1; product(a, b) is the index of a*b.
class CayleyTable {
 public:
  /// Validates shape, identity, inverses and (for order <= 256) associativity.
  CayleyTable(std::size_t order, std::vector<int> table);

  std::size_t order() const { return order_; }
  int identity() const { return identity_; }
  int product(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  int power(int a, int k) const;

  bool commute(int a, int b) const { return product(a, b) == product(b, a); }
  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<int> center() const;

  /// Subgroup generated by the given elements (sorted element indices).
  std::vector<int> generated_subgroup(const std::vector<int>& generators) const;

  /// Commutator subgroup of the whole group.
  std::vector<int> derived_subgroup() const;
  /// Commutator subgroup of a subgroup given as a list of element indices.
  std::vector<int> derived_subgroup(const std::vector<int>& subgroup) const;

  bool is_perfect() const { return derived_subgroup().size() == order_; }
  bool is_solvable() const;
  /// Length of the derived series down to the trivial group; nullopt when the
  /// series stabilizes at a nontrivial perfect subgroup.
  std::optional<int> derived_length() const;

  std::vector<int> involutions() const;

 private:
  std::size_t order_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
};

/// SL(2,5): 2x2 matrices of determinant 1 over the field with five elements.
CayleyTable sl25_table();

/// The Klein four group C2 x C2.
CayleyTable klein_four_table();

/// Cyclic group Z/n.
CayleyTable cyclic_table(std::size_t n);

}  // namespace cwb
