#include "gbbraid/crossed_set.hpp"

#include <string>

#include "gbbraid/errors.hpp"

namespace gbbraid {

CrossedGSet::CrossedGSet(const FiniteGroup& g, std::vector<int> action,
                         std::vector<int> grade)
    : group_(&g),
      size_(static_cast<int>(grade.size())),
      action_(std::move(action)),
      grade_(std::move(grade)) {
  if (action_.size() != static_cast<size_t>(g.order()) * size_)
    throw ValidationError("crossed set action table has wrong size");
  for (int x : action_)
    if (x < 0 || x >= size_) throw ValidationError("crossed set action out of range");
  for (int h : grade_)
    if (h < 0 || h >= g.order()) throw ValidationError("crossed set grade out of range");
  for (int x = 0; x < size_; ++x)
    if (act(FiniteGroup::identity(), x) != x)
      throw ValidationError("crossed set: identity acts nontrivially at " +
                            std::to_string(x));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int ab = g.mult(a, b);
      for (int x = 0; x < size_; ++x)
        if (act(ab, x) != act(a, act(b, x)))
          throw ValidationError("crossed set: action not compatible at (g,h,x) = (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(x) + ")");
    }
  for (int gg = 0; gg < g.order(); ++gg)
    for (int x = 0; x < size_; ++x)
      if (grade_[act(gg, x)] != g.conj(gg, grade_[x]))
        throw ValidationError("crossed set: grading not equivariant at (g,x) = (" +
                              std::to_string(gg) + "," + std::to_string(x) + ")");
}

std::vector<std::uint64_t> CrossedGSet::stabilizer_mask(int x) const {
  std::vector<std::uint64_t> mask((group_->order() + 63) / 64, 0);
  for (int g = 0; g < group_->order(); ++g)
    if (act(g, x) == x) mask[g >> 6] |= std::uint64_t{1} << (g & 63);
  return mask;
}

Subgroup stabilizer(const CrossedGSet& x_set, int x) {
  std::vector<int> elems;
  for (int g = 0; g < x_set.group().order(); ++g)
    if (x_set.act(g, x) == x) elems.push_back(g);
  return Subgroup(x_set.group(), std::move(elems));
}

std::pair<int, int> crossed_braiding(const CrossedGSet& x_set, const CrossedGSet& y_set,
                                     int x, int y) {
  if (&x_set.group() != &y_set.group())
    throw MixedAmbientData("crossed braiding requires sets over the same group");
  return {y_set.act(x_set.grade(x), y), x};
}

OrbitPartition orbits(const CrossedGSet& x_set) {
  return orbit_partition(x_set.group(), x_set.size(),
                         [&](int g, int x) { return x_set.act(g, x); });
}

CheckReport crossed_axioms_check(const CrossedGSet& x_set) {
  const FiniteGroup& g = x_set.group();
  for (int x = 0; x < x_set.size(); ++x)
    if (x_set.act(FiniteGroup::identity(), x) != x)
      return CheckReport::fail("identity acts nontrivially at " + std::to_string(x));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < x_set.size(); ++x)
        if (x_set.act(g.mult(a, b), x) != x_set.act(a, x_set.act(b, x)))
          return CheckReport::fail("action incompatible at (g,h,x) = (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(x) + ")");
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < x_set.size(); ++x)
      if (x_set.grade(x_set.act(a, x)) != g.conj(a, x_set.grade(x)))
        return CheckReport::fail("grading not equivariant at (g,x) = (" +
                                 std::to_string(a) + "," + std::to_string(x) + ")");
  return CheckReport::pass();
}

}  // namespace gbbraid
