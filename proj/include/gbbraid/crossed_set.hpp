#ifndef GBBRAID_CROSSED_SET_HPP
#define GBBRAID_CROSSED_SET_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"

namespace gbbraid {

// A finite crossed G-set: a G-action together with a grading |.| : X -> G
// satisfying |g . x| = g |x| g^{-1}.
class CrossedGSet {
 public:
  CrossedGSet(const FiniteGroup& g, std::vector<int> action, std::vector<int> grade);

  const FiniteGroup& group() const { return *group_; }
  int size() const { return size_; }
  int act(int g, int x) const { return action_[static_cast<size_t>(g) * size_ + x]; }
  int grade(int x) const { return grade_[x]; }

  // Bitmask (one word per 64 group elements) of the stabilizer of x.
  std::vector<std::uint64_t> stabilizer_mask(int x) const;

 private:
  const FiniteGroup* group_;
  int size_;
  std::vector<int> action_;  // |G| x size
  std::vector<int> grade_;
};

// Stabilizer subgroup of x.
Subgroup stabilizer(const CrossedGSet& x_set, int x);

// The braiding c(x, y) = (|x| . y, x) of crossed G-sets over the same group.
std::pair<int, int> crossed_braiding(const CrossedGSet& x_set, const CrossedGSet& y_set,
                                     int x, int y);

// Re-verifies the action and grading axioms (the constructor already enforces
// them; this produces a report for verification runs).
CheckReport crossed_axioms_check(const CrossedGSet& x_set);

// Orbit decomposition of a G-action given as a callable (g, x) -> x'.
// Canonical representatives are the minimal elements; transporter[x] is the
// first g in index order with g . x = rep(orbit of x).
struct OrbitPartition {
  std::vector<int> orbit_of;                // x -> orbit id
  std::vector<int> rep;                     // orbit id -> representative
  std::vector<int> transporter;             // x -> g
  std::vector<std::vector<int>> members;    // orbit id -> ascending members
};

template <class Act>
OrbitPartition orbit_partition(const FiniteGroup& g, int size, Act&& act) {
  OrbitPartition p;
  p.orbit_of.assign(size, -1);
  p.transporter.assign(size, -1);
  for (int x = 0; x < size; ++x) {
    if (p.orbit_of[x] >= 0) continue;
    // Ascending scan: x is minimal in its orbit.
    int id = static_cast<int>(p.rep.size());
    p.rep.push_back(x);
    std::vector<int> orbit;
    for (int gg = 0; gg < g.order(); ++gg) {
      int y = act(g.inv(gg), x);  // gg . y = x  <=>  y = gg^{-1} . x
      if (p.orbit_of[y] < 0) {
        p.orbit_of[y] = id;
        p.transporter[y] = gg;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    p.members.push_back(std::move(orbit));
  }
  return p;
}

OrbitPartition orbits(const CrossedGSet& x_set);

}  // namespace gbbraid

#endif
