#include "gbbraid/coset.hpp"

#include <algorithm>

#include "gbbraid/errors.hpp"

namespace gbbraid {

CosetData::CosetData(const FiniteGroup& g, const Subgroup& h)
    : group_(&g), h_elems_(h.elements()) {
  if (&h.group() != &g)
    throw MixedAmbientData("subgroup belongs to a different group object");
  const int n = g.order();
  h_pos_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(h_elems_.size()); ++i) h_pos_[h_elems_[i]] = i;

  rep_pos_.assign(n, -1);
  h_part_.assign(n, -1);
  std::vector<int> rep_of(n, -1);
  for (int x = 0; x < n; ++x) {
    if (rep_of[x] >= 0) continue;
    // x is the minimal element of its left coset xH (smaller members would
    // have been visited first).
    int rpos = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (int i = 0; i < static_cast<int>(h_elems_.size()); ++i) {
      int y = g.mult(x, h_elems_[i]);
      rep_of[y] = x;
      rep_pos_[y] = rpos;
      h_part_[y] = i;
    }
  }
}

int CosetData::h_local(int g) const {
  if (g < 0 || g >= group_->order() || h_pos_[g] < 0) throw ElementNotInSubgroup(g);
  return h_pos_[g];
}

CheckReport kappa_identity_check(const CosetData& c) {
  const FiniteGroup& g = c.group();
  for (int x = 0; x < g.order(); ++x) {
    int rebuilt = g.mult(c.rep(c.rep_pos_of(x)), c.h_elem(c.h_part_of(x)));
    if (rebuilt != x)
      return CheckReport::fail("coset factorization fails at g = " + std::to_string(x));
  }
  for (int g1 = 0; g1 < g.order(); ++g1)
    for (int g2 = 0; g2 < g.order(); ++g2)
      for (int rpos = 0; rpos < c.num_cosets(); ++rpos) {
        int lhs = c.kappa(g.mult(g1, g2), rpos);
        int rhs = g.mult(c.kappa(g1, c.act(g2, rpos)), c.kappa(g2, rpos));
        if (lhs != rhs)
          return CheckReport::fail("kappa identity fails at (g1,g2,r) = (" +
                                   std::to_string(g1) + "," + std::to_string(g2) + "," +
                                   std::to_string(c.rep(rpos)) + ")");
      }
  return CheckReport::pass();
}

}  // namespace gbbraid
