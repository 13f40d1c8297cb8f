#ifndef GBBRAID_GROUP_HPP
#define GBBRAID_GROUP_HPP

#include <cstdint>
#include <vector>

namespace gbbraid {

// A finite group given by its full multiplication table.  Elements are the
// dense indices 0..order-1 and the identity is always index 0 (tables handed
// in with the identity elsewhere are renumbered on construction).
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 255;

  int order() const { return order_; }
  int mult(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }
  // ^g h = g h g^{-1}
  int conj(int g, int h) const { return mult(mult(g, h), inv(g)); }
  int element_order(int a) const;
  bool is_abelian() const;

  // Validates: index range, two-sided identity (NoIdentity), associativity
  // (NonAssociative, lexicographically first failing triple), two-sided
  // inverses (NoInverse).  If the identity is not index 0 the table is
  // relabelled by swapping it with 0 first; error witnesses refer to the
  // relabelled numbering.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

 private:
  friend FiniteGroup cyclic_group(int);
  friend FiniteGroup dihedral_group(int);
  friend FiniteGroup symmetric_group(int);
  friend FiniteGroup product_group(const std::vector<const FiniteGroup*>&);

  FiniteGroup() = default;
  void finish(bool check_associativity);  // fills inv_, validates

  int order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
};

// Z_m with index = exponent, so mult(a,b) = (a+b) mod m.
FiniteGroup cyclic_group(int m);

// Dihedral group of order 2k:  s^i r^j  <->  index i*k + j  with
// (s^i r^j)(s^a r^b) = s^{i+a} r^{(-1)^a j + b}.  Rotations occupy 0..k-1.
FiniteGroup dihedral_group(int k);

// S_n on {0..n-1}; elements are one-line permutations in lexicographic
// order (identity first), composition (p*q)(i) = p(q(i)).  n <= 5.
FiniteGroup symmetric_group(int n);

// Direct product; index is mixed-radix with the first factor most
// significant, so (0,...,0) = 0.
FiniteGroup product_group(const std::vector<const FiniteGroup*>& factors);

// Lexicographically ordered one-line permutations of {0..n-1}; the element
// numbering used by symmetric_group.
std::vector<std::vector<int>> permutations_lex(int n);

// A subgroup, stored as the sorted list of parent indices.  Validates
// nonemptiness, closure under multiplication and inverse, and membership of
// the identity.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& g, std::vector<int> elements);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int elem(int i) const { return elems_[i]; }
  const std::vector<int>& elements() const { return elems_; }
  bool contains(int g) const { return pos_[g] >= 0; }
  // Position of g in elements(), or ElementNotInSubgroup.
  int local_index(int g) const;
  bool is_normal() const;
  bool same_elements(const Subgroup& o) const { return elems_ == o.elems_; }

 private:
  const FiniteGroup* group_;
  std::vector<int> elems_;
  std::vector<int> pos_;
};

// { k in H : k h = h k }; h must lie in H.
Subgroup centralizer(const Subgroup& h_sub, int h);

}  // namespace gbbraid

#endif
