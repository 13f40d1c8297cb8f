#ifndef GBBRAID_COCYCLE_HPP
#define GBBRAID_COCYCLE_HPP

#include <cstdint>
#include <vector>

#include "gbbraid/group.hpp"
#include "gbbraid/phase.hpp"

namespace gbbraid {

// A normalized 3-cocycle omega : G^3 -> U(1), stored as phase exponents.
// Validity means the pentagon identity
//   omega(ab,c,d) + omega(a,b,cd) = omega(a,b,c) + omega(a,bc,d) + omega(b,c,d)
// (written additively) plus the normalization omega(a,e,b) = 0, which forces
// omega(e,a,b) = omega(a,b,e) = 0 as well.
class ThreeCocycle {
 public:
  enum class Kind { Trivial, Cyclic, Table };
  // Explicit tables are kept dense; |G|^3 entries caps the order.
  static constexpr int kMaxTableOrder = 64;

  static ThreeCocycle trivial(const FiniteGroup& g);

  Kind kind() const { return kind_; }
  const FiniteGroup& group() const { return *group_; }
  Phase value(int a, int b, int c) const;
  // True iff every value is the zero phase.
  bool is_trivial_values() const;
  bool same_values(const ThreeCocycle& o) const;
  // Cyclic parameters (Kind::Cyclic only).
  int cyclic_m() const { return m_; }
  int cyclic_p() const { return p_; }
  // An integer divisible by every value's denominator.
  std::int64_t denominator_lcm() const;

 private:
  friend ThreeCocycle cyclic_cocycle(const FiniteGroup&, int);
  friend ThreeCocycle check_three_cocycle(const FiniteGroup&, const std::vector<Phase>&);

  ThreeCocycle(Kind k, const FiniteGroup& g) : kind_(k), group_(&g) {}

  Kind kind_;
  const FiniteGroup* group_;
  int m_ = 0, p_ = 0;          // Kind::Cyclic
  std::vector<Phase> table_;   // Kind::Table, index (a*N + b)*N + c
};

// The standard generator family on Z_m:
//   omega_p(a,b,c) = exp(2 pi i * p * a * (b + c - ((b+c) mod m)) / m^2),
// i.e. exponent p*a*floor((b+c)/m)/m.  `zm` must be the canonical cyclic
// group of order m (index = exponent); p is reduced mod m, and p = 0 yields
// the trivial cocycle.
ThreeCocycle cyclic_cocycle(const FiniteGroup& zm, int p);

// Validates an explicit table (index (a*N+b)*N+c).  The pentagon identity is
// scanned over all quadruples in lexicographic order first (CocycleViolation
// names the first failure), then normalization (NotNormalized).
ThreeCocycle check_three_cocycle(const FiniteGroup& g, const std::vector<Phase>& values);

// A normalized 2-cochain gamma : H^2 -> U(1) whose coboundary
//   (delta gamma)(a,b,c) = gamma(b,c) - gamma(ab,c) + gamma(a,bc) - gamma(a,b)
// equals omega restricted to H.  Stored over H-local indices.
class TwoCochain {
 public:
  static TwoCochain trivial(const Subgroup& h);

  const Subgroup& subgroup() const { return h_; }
  Phase value_local(int i, int j) const { return table_[i * h_.size() + j]; }
  // Arguments are G-indices and must lie in H.
  Phase value(int h1, int h2) const;
  bool is_trivial_values() const;

 private:
  friend TwoCochain check_two_cochain(const ThreeCocycle&, const Subgroup&,
                                      const std::vector<Phase>&);
  explicit TwoCochain(const Subgroup& h) : h_(h) {}

  Subgroup h_;
  std::vector<Phase> table_;  // |H| x |H|, H-local indices
};

// Validates gamma against omega|_H: normalization gamma(e,h) = gamma(h,e) = 0
// first (NotNormalized; unnormalized cochains are rejected outright), then
// the coboundary condition over all H-triples in lexicographic order
// (CoboundaryViolation, witnesses reported as G-indices).
TwoCochain check_two_cochain(const ThreeCocycle& omega, const Subgroup& h,
                             const std::vector<Phase>& values_local);

// Derived 2-cocycle of the conjugation pair (g, g') at grade h:
//   omega(g,g'; h) = omega(g, ^{g'}h, g') - omega(^{gg'}h, g, g') - omega(g, g', h).
// Vanishes whenever g, g', or h is the identity.
Phase omega_pair(const ThreeCocycle& omega, int g, int gp, int h);

// Derived action 2-cochain used when a factor of a graded product is carried
// past g:
//   omega_g(f, h) = omega(g, f, h) - omega(^g f, g, h) + omega(^g f, ^g h, g).
Phase omega_action(const ThreeCocycle& omega, int g, int f, int h);

// Commutator pairing of the cochain: eps(h1, h2) = gamma(h1, h2) - gamma(^{h1}h2, h1).
Phase epsilon(const TwoCochain& gamma, int h1, int h2);

}  // namespace gbbraid

#endif
