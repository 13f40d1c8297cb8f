#include <doctest.h>

#include <numeric>
#include <vector>

#include "gbbraid/crossed_set.hpp"
#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"

using namespace gbbraid;

namespace {

// G acting on itself by conjugation, graded by the element itself: the
// archetypal crossed G-set.
CrossedGSet conjugation_set(const FiniteGroup& g) {
  std::vector<int> action(static_cast<size_t>(g.order()) * g.order());
  std::vector<int> grade(g.order());
  for (int x = 0; x < g.order(); ++x) grade[x] = x;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      action[static_cast<size_t>(a) * g.order() + x] = g.conj(a, x);
  return CrossedGSet(g, std::move(action), std::move(grade));
}

}  // namespace

TEST_CASE("conjugation crossed set satisfies the axioms") {
  FiniteGroup s3 = symmetric_group(3);
  CrossedGSet c = conjugation_set(s3);
  CHECK(c.size() == 6);
  CHECK(crossed_axioms_check(c).ok);
  // Orbits are conjugacy classes: sizes 1, 2, 3 in S_3.
  OrbitPartition p = orbits(c);
  REQUIRE(p.rep.size() == 3);
  std::vector<int> sizes;
  for (const auto& m : p.members) sizes.push_back(static_cast<int>(m.size()));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3});
  // Identity is alone in its orbit and is its own representative.
  CHECK(p.rep[p.orbit_of[0]] == 0);
  CHECK(p.members[p.orbit_of[0]].size() == 1);
}

TEST_CASE("orbit representatives are minima and transporters hit them") {
  FiniteGroup s4 = symmetric_group(4);
  CrossedGSet c = conjugation_set(s4);
  OrbitPartition p = orbits(c);
  CHECK(p.rep.size() == 5);  // 5 conjugacy classes of S_4
  for (size_t o = 0; o < p.rep.size(); ++o) {
    CHECK(p.members[o].front() == p.rep[o]);  // minimal member
    for (int x : p.members[o]) {
      CHECK(p.orbit_of[x] == static_cast<int>(o));
      CHECK(c.act(p.transporter[x], x) == p.rep[o]);
      // Transporter is the first group element carrying x to the rep.
      for (int g = 0; g < p.transporter[x]; ++g) CHECK(c.act(g, x) != p.rep[o]);
    }
  }
  int total = 0;
  for (const auto& m : p.members) total += static_cast<int>(m.size());
  CHECK(total == c.size());
}

TEST_CASE("stabilizers are subgroups of the expected size") {
  FiniteGroup s3 = symmetric_group(3);
  CrossedGSet c = conjugation_set(s3);
  for (int x = 0; x < c.size(); ++x) {
    Subgroup st = stabilizer(c, x);
    // Orbit-stabilizer: |orbit| * |stab| = |G|.
    OrbitPartition p = orbits(c);
    int osize = static_cast<int>(p.members[p.orbit_of[x]].size());
    CHECK(osize * st.size() == s3.order());
    // Mask agrees with the subgroup.
    auto mask = c.stabilizer_mask(x);
    for (int g = 0; g < s3.order(); ++g) {
      bool bit = (mask[g / 64] >> (g % 64)) & 1;
      CHECK(bit == st.contains(g));
    }
  }
}

TEST_CASE("crossed braiding") {
  FiniteGroup s3 = symmetric_group(3);
  CrossedGSet c = conjugation_set(s3);
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      auto [y2, x2] = crossed_braiding(c, c, x, y);
      CHECK(y2 == c.act(c.grade(x), y));
      CHECK(x2 == x);
      // The braiding preserves the total grade |x||y|.
      CHECK(s3.mult(c.grade(x), c.grade(y)) ==
            s3.mult(c.grade(y2), c.grade(x2)));
    }
}

TEST_CASE("crossed set construction rejects bad data") {
  FiniteGroup z2 = cyclic_group(2);
  std::vector<int> ok_action = {0, 1, 0, 1};  // trivial action on 2 points
  std::vector<int> grade_e = {0, 0};

  CHECK_NOTHROW(CrossedGSet(z2, ok_action, grade_e));

  SUBCASE("identity must act trivially") {
    std::vector<int> bad = {1, 0, 1, 0};
    CHECK_THROWS_AS(CrossedGSet(z2, bad, grade_e), ValidationError);
  }
  SUBCASE("action must compose") {
    // g=1 acts by the transposition on {0,1} but grade says swap forbidden?
    // Composition failure: 1.(1.x) must equal (1*1).x = x; send both to 0.
    std::vector<int> bad = {0, 1, 0, 0};
    CHECK_THROWS_AS(CrossedGSet(z2, bad, grade_e), ValidationError);
  }
  SUBCASE("grade must be equivariant") {
    FiniteGroup s3 = symmetric_group(3);
    // Trivial action on one point graded by a non-central element.
    std::vector<int> action(static_cast<size_t>(s3.order()), 0);
    int noncentral = -1;
    for (int h = 1; h < 6; ++h) {
      bool central = true;
      for (int g = 0; g < 6; ++g) central = central && s3.conj(g, h) == h;
      if (!central) { noncentral = h; break; }
    }
    REQUIRE(noncentral > 0);
    std::vector<int> grade = {noncentral};
    CHECK_THROWS_AS(CrossedGSet(s3, action, grade), ValidationError);
  }
  SUBCASE("range checks") {
    std::vector<int> bad = {0, 7, 0, 1};
    CHECK_THROWS_AS(CrossedGSet(z2, bad, grade_e), ValidationError);
    std::vector<int> bad_grade = {0, 9};
    CHECK_THROWS_AS(CrossedGSet(z2, ok_action, bad_grade), ValidationError);
    std::vector<int> short_action = {0, 1};
    CHECK_THROWS_AS(CrossedGSet(z2, short_action, grade_e), ValidationError);
  }
}

TEST_CASE("braiding rejects sets over different groups") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z2b = cyclic_group(2);
  CrossedGSet a(z2, {0, 1, 0, 1}, {0, 0});
  CrossedGSet b(z2b, {0, 1, 0, 1}, {0, 0});
  CHECK_THROWS_AS(crossed_braiding(a, b, 0, 0), MixedAmbientData);
  CHECK_NOTHROW(crossed_braiding(a, a, 0, 0));
}
