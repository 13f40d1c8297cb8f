#include "gbbraid/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gbbraid/errors.hpp"

namespace gbbraid {

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity()) {
    x = mult(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

void FiniteGroup::finish(bool check_associativity) {
  const int n = order_;
  for (int b = 0; b < n; ++b)
    if (mult(0, b) != b || mult(b, 0) != b) throw NoIdentity();
  if (check_associativity) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw NonAssociative(a, b, c);
  }
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (mult(a, b) == 0 && mult(b, a) == 0) {
        found = b;
        break;
      }
    if (found < 0) throw NoInverse(a);
    inv_[a] = static_cast<std::uint16_t>(found);
  }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw ValidationError("multiplication table is empty");
  if (n > kMaxOrder)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(n), kMaxOrder);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw ValidationError("multiplication table row " + std::to_string(a) +
                            " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ValidationError("multiplication table entry (" + std::to_string(a) +
                              "," + std::to_string(b) + ") out of range");
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = table[c][b] == b && table[b][c] == b;
    if (ok) e = c;
  }
  if (e < 0) throw NoIdentity();

  // Relabel by swapping the identity with index 0.
  auto relabel = [e](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  FiniteGroup g;
  g.order_ = n;
  g.table_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[relabel(a) * n + relabel(b)] =
          static_cast<std::uint16_t>(relabel(table[a][b]));
  g.finish(true);
  return g;
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw ValidationError("cyclic group needs m >= 1");
  if (m > FiniteGroup::kMaxOrder)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(m), FiniteGroup::kMaxOrder);
  FiniteGroup g;
  g.order_ = m;
  g.table_.assign(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      g.table_[a * m + b] = static_cast<std::uint16_t>((a + b) % m);
  g.finish(false);  // modular addition is associative
  return g;
}

FiniteGroup dihedral_group(int k) {
  if (k < 1) throw ValidationError("dihedral group needs k >= 1");
  const int n = 2 * k;
  if (n > FiniteGroup::kMaxOrder)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(n), FiniteGroup::kMaxOrder);
  FiniteGroup g;
  g.order_ = n;
  g.table_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < k; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < k; ++b) {
          int jj = a ? (k - j) % k : j;  // r^j conjugated past s^a
          int idx = ((i + a) % 2) * k + (jj + b) % k;
          g.table_[(i * k + j) * n + (a * k + b)] = static_cast<std::uint16_t>(idx);
        }
  g.finish(true);
  return g;
}

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw ValidationError("symmetric group needs n >= 1");
  if (n > 5)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(n), 5);
  auto perms = permutations_lex(n);
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  FiniteGroup g;
  g.order_ = order;
  g.table_.assign(static_cast<size_t>(order) * order, 0);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      g.table_[a * order + b] = static_cast<std::uint16_t>(index.at(comp));
    }
  g.finish(true);
  return g;
}

FiniteGroup product_group(const std::vector<const FiniteGroup*>& factors) {
  if (factors.empty()) throw ValidationError("product group needs at least one factor");
  std::uint64_t order = 1;
  for (const auto* f : factors) {
    order *= static_cast<std::uint64_t>(f->order());
    if (order > FiniteGroup::kMaxOrder)
      throw SizeLimitExceeded(order, FiniteGroup::kMaxOrder);
  }
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(factors.size());
  auto decode = [&](int x, std::vector<int>& digits) {
    for (int i = k - 1; i >= 0; --i) {
      digits[i] = x % factors[i]->order();
      x /= factors[i]->order();
    }
  };
  FiniteGroup g;
  g.order_ = n;
  g.table_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> da(k), db(k);
  for (int a = 0; a < n; ++a) {
    decode(a, da);
    for (int b = 0; b < n; ++b) {
      decode(b, db);
      int idx = 0;
      for (int i = 0; i < k; ++i)
        idx = idx * factors[i]->order() + factors[i]->mult(da[i], db[i]);
      g.table_[a * n + b] = static_cast<std::uint16_t>(idx);
    }
  }
  g.finish(false);  // componentwise product of associative tables
  return g;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> elements)
    : group_(&g), elems_(std::move(elements)) {
  if (elems_.empty()) throw ValidationError("subgroup element list is empty");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  pos_.assign(g.order(), -1);
  for (int i = 0; i < size(); ++i) {
    int x = elems_[i];
    if (x < 0 || x >= g.order())
      throw ValidationError("subgroup element " + std::to_string(x) + " out of range");
    pos_[x] = i;
  }
  if (pos_[FiniteGroup::identity()] < 0)
    throw ValidationError("subgroup does not contain the identity");
  for (int a : elems_) {
    if (pos_[g.inv(a)] < 0)
      throw ValidationError("subgroup not closed under inverse at element " +
                            std::to_string(a));
    for (int b : elems_)
      if (pos_[g.mult(a, b)] < 0)
        throw ValidationError("subgroup not closed under product at (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return Subgroup(g, {FiniteGroup::identity()});
}

int Subgroup::local_index(int g) const {
  if (g < 0 || g >= group_->order() || pos_[g] < 0) throw ElementNotInSubgroup(g);
  return pos_[g];
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < group_->order(); ++g)
    for (int h : elems_)
      if (!contains(group_->conj(g, h))) return false;
  return true;
}

Subgroup centralizer(const Subgroup& h_sub, int h) {
  if (!h_sub.contains(h)) throw ElementNotInSubgroup(h);
  const FiniteGroup& g = h_sub.group();
  std::vector<int> elems;
  for (int k : h_sub.elements())
    if (g.mult(k, h) == g.mult(h, k)) elems.push_back(k);
  return Subgroup(g, std::move(elems));
}

}  // namespace gbbraid
