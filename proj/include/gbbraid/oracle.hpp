#ifndef GBBRAID_ORACLE_HPP
#define GBBRAID_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gbbraid/braid.hpp"
#include "gbbraid/monomial.hpp"

namespace gbbraid {

// Exact arithmetic in Q(zeta_m), represented as Q[x] / Phi_m(x) with
// rational coefficients.  Phi_m is computed by exact division of x^m - 1 by
// the cyclotomic polynomials of the proper divisors.
class CycloField {
 public:
  using Elt = std::vector<mpq_class>;  // degree() coefficients, low to high

  explicit CycloField(int m);

  int m() const { return m_; }
  int degree() const { return degree_; }
  Elt zero() const { return Elt(degree_, mpq_class(0)); }
  Elt one() const;
  // e^{2 pi i q}; q.den must divide m.
  Elt root(const Phase& q) const;
  Elt mul(const Elt& a, const Elt& b) const;
  void add_to(Elt& a, const Elt& b) const;
  void sub_from(Elt& a, const Elt& b) const;
  Elt scaled(const Elt& a, const mpq_class& c) const;
  Elt inverse(const Elt& a) const;  // extended Euclid mod Phi_m
  bool is_zero(const Elt& a) const;
  bool equal(const Elt& a, const Elt& b) const;

  // Row rank by exact Gaussian elimination with normalized pivots; rows are
  // modified in place.
  int rank(std::vector<std::vector<Elt>>& rows) const;

 private:
  int m_, degree_;
  std::vector<mpq_class> phi_;                    // monic Phi_m, low to high
  std::vector<std::vector<mpq_class>> zeta_pow_;  // zeta^k reduced, k in [0, m)
};

// The averaging projector P = (1/|G|) sum_g Gamma(g) on the full span of the
// grade-e tuples, as a dense matrix over Q(zeta_m) with m the lcm of the
// coefficient denominators.
struct AveragingProjector {
  CycloField field;
  int dim;                                      // number of grade-e tuples
  std::vector<std::vector<CycloField::Elt>> p;  // dim x dim, row major
};
AveragingProjector averaging_projector(const TupleSpace& s);

// Invariant dimension by explicit projector rank, with no orbit counting or
// regularity shortcuts.  Requires |X|^n <= 10^4.
int brute_force_dimension(const MonomialYD& m, int n);
int brute_force_dimension(const TupleSpace& s);

// Cross-validates a computed braid representation against the full tuple
// span: for each generator the dense monomial matrix S_i (no transporters,
// no basis compression) must commute with P, and compressing columns through
// P must reproduce the basis matrices entry for entry.  Also re-derives the
// dimension as rank(P).
CheckReport oracle_braid_check(const TupleSpace& s, const BraidRep& rep);

inline constexpr std::uint64_t kOracleMaxTuples = 10'000;

}  // namespace gbbraid

#endif
