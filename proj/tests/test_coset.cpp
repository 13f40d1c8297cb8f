#include <doctest.h>

#include <set>

#include "gbbraid/coset.hpp"
#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"

using namespace gbbraid;

namespace {

void check_coset_structure(const FiniteGroup& g, const Subgroup& h) {
  CosetData c(g, h);
  CHECK(c.num_cosets() * c.subgroup_size() == g.order());
  // Representative of the trivial coset is the identity and reps ascend.
  CHECK(c.rep(0) == 0);
  for (int i = 1; i < c.num_cosets(); ++i) CHECK(c.rep(i - 1) < c.rep(i));
  // Each representative is the minimum of its coset.
  for (int i = 0; i < c.num_cosets(); ++i)
    for (int k = 0; k < c.subgroup_size(); ++k)
      CHECK(c.rep(i) <= g.mult(c.rep(i), c.h_elem(k)));
  // Factorization g = rep * h is exact and unique.
  std::set<int> seen;
  for (int x = 0; x < g.order(); ++x) {
    int r = c.rep(c.rep_pos_of(x));
    int hh = c.h_elem(c.h_part_of(x));
    CHECK(g.mult(r, hh) == x);
    seen.insert(x);
  }
  CHECK(static_cast<int>(seen.size()) == g.order());
  // Defining property of the action and kappa: g * r = (g . r) * kappa(g, r).
  for (int x = 0; x < g.order(); ++x)
    for (int i = 0; i < c.num_cosets(); ++i) {
      int lhs = g.mult(x, c.rep(i));
      int rhs = g.mult(c.rep(c.act(x, i)), c.kappa(x, i));
      CHECK(lhs == rhs);
    }
  CHECK(kappa_identity_check(c).ok);
}

}  // namespace

TEST_CASE("coset data over assorted subgroups") {
  FiniteGroup d6 = dihedral_group(3);
  check_coset_structure(d6, Subgroup(d6, {0, 1, 2}));   // normal, index 2
  check_coset_structure(d6, Subgroup(d6, {0, 3}));      // non-normal, index 3
  check_coset_structure(d6, Subgroup::whole(d6));
  check_coset_structure(d6, Subgroup::trivial(d6));

  FiniteGroup z4 = cyclic_group(4);
  check_coset_structure(z4, Subgroup(z4, {0, 2}));

  FiniteGroup s4 = symmetric_group(4);
  // The stabilizer of the point 3 inside S_4 (one-line perms fixing 3).
  std::vector<int> stab;
  auto perms = permutations_lex(4);
  for (int a = 0; a < 24; ++a)
    if (perms[a][3] == 3) stab.push_back(a);
  check_coset_structure(s4, Subgroup(s4, stab));
}

TEST_CASE("kappa identity spelled out on D_6 with a non-normal subgroup") {
  FiniteGroup d6 = dihedral_group(3);
  Subgroup h(d6, {0, 3});
  CosetData c(d6, h);
  REQUIRE(c.num_cosets() == 3);
  // R = {e, r, r^2}: 1 and 2 are the minima of their cosets {1,5} and {2,4}.
  CHECK(c.rep(1) == 1);
  CHECK(c.rep(2) == 2);
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2)
      for (int i = 0; i < 3; ++i) {
        int lhs = c.kappa(d6.mult(g1, g2), i);
        int rhs = d6.mult(c.kappa(g1, c.act(g2, i)), c.kappa(g2, i));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("kappa is trivial on coset representatives of a normal complement") {
  // G = Z_6, H = {0,3}: reps {0,1,2}, and acting by h in H permutes cosets
  // with kappa(h h', r) staying in H.
  FiniteGroup z6 = cyclic_group(6);
  Subgroup h(z6, {0, 3});
  CosetData c(z6, h);
  REQUIRE(c.num_cosets() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c.rep(i) == i);
  // For abelian G the kappa cocycle is independent of the coset: kappa(g,r)
  // equals the H-part of g * r, and act is translation on Z_6 / {0,3} = Z_3.
  CHECK(c.act(1, 0) == 1);
  CHECK(c.act(1, 2) == 0);       // 1 + 2 = 3 lies in the coset of 0
  CHECK(c.kappa(1, 2) == 3);     // 1 * 2 = 0 * 3
  CHECK(c.kappa(1, 0) == 0);
}

TEST_CASE("h_local rejects elements outside H") {
  FiniteGroup d6 = dihedral_group(3);
  CosetData c(d6, Subgroup(d6, {0, 1, 2}));
  CHECK(c.h_local(2) == 2);
  CHECK_THROWS_AS(c.h_local(3), ElementNotInSubgroup);
}
