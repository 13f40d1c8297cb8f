#include <doctest.h>

#include <vector>

#include "gbbraid/braid.hpp"
#include "gbbraid/cocycle.hpp"
#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"
#include "gbbraid/lagrangian.hpp"
#include "gbbraid/monomial.hpp"
#include "gbbraid/oracle.hpp"

using namespace gbbraid;

namespace {

LagrangianData make_boundary(const FiniteGroup& g, const ThreeCocycle& w,
                             const std::vector<int>& h_elems) {
  Subgroup h(g, h_elems);
  return lagrangian_new(g, w, h, TwoCochain::trivial(h));
}

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
  SUBCASE("conductor 1 is the rationals") {
    CycloField f(1);
    CHECK(f.degree() == 1);
    CHECK(f.equal(f.root(Phase::zero()), f.one()));
    auto half = f.scaled(f.one(), mpq_class(1, 2));
    CHECK(f.equal(f.mul(half, f.scaled(f.one(), mpq_class(2))), f.one()));
  }
  SUBCASE("conductor 2") {
    CycloField f(2);
    CHECK(f.degree() == 1);
    auto minus_one = f.root(Phase::half());
    CHECK(f.equal(f.mul(minus_one, minus_one), f.one()));
    auto sum = minus_one;
    f.add_to(sum, f.one());
    CHECK(f.is_zero(sum));
  }
  SUBCASE("conductor 4: Gaussian rationals") {
    CycloField f(4);
    CHECK(f.degree() == 2);  // phi(4) = 2
    auto i = f.root(Phase::of(1, 4));
    auto i2 = f.mul(i, i);
    CHECK(f.equal(i2, f.root(Phase::half())));
    auto i4 = f.mul(i2, i2);
    CHECK(f.equal(i4, f.one()));
    // (1 + i)(1 - i) = 2.
    auto a = f.one();
    f.add_to(a, i);
    auto b = f.one();
    f.sub_from(b, i);
    CHECK(f.equal(f.mul(a, b), f.scaled(f.one(), mpq_class(2))));
    // Inverse round trips.
    CHECK(f.equal(f.mul(a, f.inverse(a)), f.one()));
    CHECK(f.equal(f.inverse(i), f.root(Phase::of(3, 4))));
  }
  SUBCASE("conductor 6 and 12: composite cyclotomics") {
    for (int m : {3, 6, 8, 12}) {
      CycloField f(m);
      // Root exponents add.
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          auto lhs = f.mul(f.root(Phase::of(a, m)), f.root(Phase::of(b, m)));
          CHECK(f.equal(lhs, f.root(Phase::of(a + b, m))));
        }
      // zeta^m = 1 and the primitive root is not 1.
      CHECK(f.equal(f.root(Phase::of(m, m)), f.one()));
      if (m > 1) CHECK(!f.equal(f.root(Phase::of(1, m)), f.one()));
      // Inverses of assorted nonzero elements.
      auto v = f.root(Phase::of(1, m));
      f.add_to(v, f.scaled(f.one(), mpq_class(3, 7)));
      CHECK(f.equal(f.mul(v, f.inverse(v)), f.one()));
    }
  }
  SUBCASE("degree is Euler phi") {
    CHECK(CycloField(3).degree() == 2);
    CHECK(CycloField(8).degree() == 4);
    CHECK(CycloField(12).degree() == 4);
    CHECK(CycloField(15).degree() == 8);
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(CycloField(0), ValidationError);
    CHECK_THROWS_AS(CycloField(-2), ValidationError);
    CHECK_THROWS_AS(CycloField(1001), SizeLimitError);
  }
  SUBCASE("root denominators must divide the conductor") {
    CycloField f(4);
    CHECK_THROWS_AS(f.root(Phase::of(1, 3)), InternalError);
    CHECK(f.equal(f.root(Phase::of(1, 2)), f.mul(f.root(Phase::of(1, 4)),
                                                 f.root(Phase::of(1, 4)))));
  }
}

TEST_CASE("exact rank") {
  CycloField f(4);
  auto i = f.root(Phase::of(1, 4));
  auto one = f.one();
  auto zero = f.zero();

  SUBCASE("dependent rows over Q(i)") {
    // Row 2 = i * row 1.
    std::vector<std::vector<CycloField::Elt>> rows = {
        {one, i},
        {i, f.mul(i, i)},
    };
    CHECK(f.rank(rows) == 1);
  }
  SUBCASE("identity") {
    std::vector<std::vector<CycloField::Elt>> rows = {{one, zero}, {zero, one}};
    CHECK(f.rank(rows) == 2);
  }
  SUBCASE("zero matrix") {
    std::vector<std::vector<CycloField::Elt>> rows = {{zero, zero}};
    CHECK(f.rank(rows) == 0);
  }
}

TEST_CASE("averaging projector is idempotent") {
  auto check_projector = [](const TupleSpace& s) {
    AveragingProjector ap = averaging_projector(s);
    const CycloField& f = ap.field;
    const int d = ap.dim;
    REQUIRE(d == s.graded_count());
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        auto acc = f.zero();
        for (int k = 0; k < d; ++k)
          f.add_to(acc, f.mul(ap.p[r][k], ap.p[k][c]));
        CHECK(f.equal(acc, ap.p[r][c]));
      }
  };

  FiniteGroup z2 = cyclic_group(2);
  ThreeCocycle wz2 = cyclic_cocycle(z2, 1);
  LagrangianData semion = make_boundary(z2, wz2, {0});
  check_projector(tuple_space(semion.module(), 2));

  FiniteGroup z4 = cyclic_group(4);
  ThreeCocycle wz4 = cyclic_cocycle(z4, 2);
  LagrangianData tw = make_boundary(z4, wz4, {0, 2});
  check_projector(tuple_space(tw.module(), 2));
}

TEST_CASE("projector rank equals the regular orbit count") {
  auto check_dim = [](const MonomialYD& m, int n) {
    CHECK(brute_force_dimension(m, n) == dimension(m, n));
  };

  FiniteGroup z2 = cyclic_group(2);
  for (int p : {0, 1}) {
    ThreeCocycle w = cyclic_cocycle(z2, p);
    LagrangianData l = make_boundary(z2, w, {0});
    check_dim(l.module(), 2);
    check_dim(l.module(), 3);
    check_dim(l.module(), 4);
  }

  FiniteGroup z4 = cyclic_group(4);
  ThreeCocycle wz4 = cyclic_cocycle(z4, 2);
  LagrangianData tw = make_boundary(z4, wz4, {0, 2});
  check_dim(tw.module(), 2);
  check_dim(tw.module(), 3);

  FiniteGroup d6 = dihedral_group(3);
  ThreeCocycle wd6 = ThreeCocycle::trivial(d6);
  LagrangianData rot = make_boundary(d6, wd6, {0, 1, 2});
  check_dim(rot.module(), 2);
  LagrangianData refl = make_boundary(d6, wd6, {0, 3});
  check_dim(refl.module(), 2);

  FiniteGroup s3 = symmetric_group(3);
  ThreeCocycle ws3 = ThreeCocycle::trivial(s3);
  LagrangianData whole = make_boundary(s3, ws3, {0, 1, 2, 3, 4, 5});
  check_dim(whole.module(), 2);
  LagrangianData nn = make_boundary(s3, ws3, {0, 1});
  check_dim(nn.module(), 2);

  // The hand-built sign module: the projector sees the irregular orbit too.
  ThreeCocycle triv2 = ThreeCocycle::trivial(z2);
  CrossedGSet point(z2, {0, 0}, {0});
  MonomialYD sign(triv2, point, {Phase::zero(), Phase::half()});
  CHECK(brute_force_dimension(sign, 1) == 0);
  CHECK(brute_force_dimension(sign, 2) == 1);
  CHECK(brute_force_dimension(sign, 3) == 0);
}

TEST_CASE("oracle accepts the computed braid matrices") {
  auto check_rep = [](const MonomialYD& m, int n) {
    TupleSpace s = tuple_space(m, n);
    BraidRep rep = braid_matrices(m, n);
    CHECK(oracle_braid_check(s, rep).ok);
  };

  FiniteGroup z2 = cyclic_group(2);
  ThreeCocycle wz2 = cyclic_cocycle(z2, 1);
  LagrangianData semion = make_boundary(z2, wz2, {0});
  check_rep(semion.module(), 2);
  check_rep(semion.module(), 3);

  FiniteGroup z4 = cyclic_group(4);
  ThreeCocycle wz4 = cyclic_cocycle(z4, 2);
  LagrangianData tw = make_boundary(z4, wz4, {0, 2});
  check_rep(tw.module(), 2);
  check_rep(tw.module(), 3);

  FiniteGroup d6 = dihedral_group(3);
  ThreeCocycle wd6 = ThreeCocycle::trivial(d6);
  LagrangianData rot = make_boundary(d6, wd6, {0, 1, 2});
  check_rep(rot.module(), 2);

  FiniteGroup s3 = symmetric_group(3);
  ThreeCocycle ws3 = ThreeCocycle::trivial(s3);
  LagrangianData nn = make_boundary(s3, ws3, {0, 1});
  check_rep(nn.module(), 2);
}

TEST_CASE("oracle rejects corrupted matrices") {
  FiniteGroup z4 = cyclic_group(4);
  ThreeCocycle w = cyclic_cocycle(z4, 2);
  LagrangianData l = make_boundary(z4, w, {0, 2});
  TupleSpace s = tuple_space(l.module(), 2);
  BraidRep rep = braid_matrices(l.module(), 2);

  SUBCASE("wrong phase") {
    rep.generators[0].phases[0] = Phase::half();
    CHECK(!oracle_braid_check(s, rep).ok);
  }
  SUBCASE("wrong permutation") {
    std::swap(rep.generators[0].perm[0], rep.generators[0].perm[1]);
    CHECK(!oracle_braid_check(s, rep).ok);
  }
  SUBCASE("wrong dimension") {
    rep.dim = 3;
    rep.basis.pop_back();
    for (auto& g : rep.generators) {
      g.dim = 3;
      g.perm.pop_back();
      g.phases.pop_back();
    }
    CHECK(!oracle_braid_check(s, rep).ok);
  }
}

TEST_CASE("oracle size guard") {
  FiniteGroup z2 = cyclic_group(2);
  ThreeCocycle w = ThreeCocycle::trivial(z2);
  LagrangianData l = make_boundary(z2, w, {0});
  CHECK_THROWS_AS(brute_force_dimension(l.module(), 14), SizeLimitError);
}
