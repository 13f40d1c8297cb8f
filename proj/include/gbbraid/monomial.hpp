#ifndef GBBRAID_MONOMIAL_HPP
#define GBBRAID_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gbbraid/cocycle.hpp"
#include "gbbraid/crossed_set.hpp"
#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"
#include "gbbraid/phase.hpp"

namespace gbbraid {

inline constexpr std::uint64_t kDefaultMaxTuples = 10'000'000;

// A monomial Yetter-Drinfeld module over (G, omega): a crossed G-set of basis
// labels together with the phase lambda(g; x) picked up when g carries the
// basis vector at x to the one at g.x.  The coefficient system satisfies
//   lambda(g h; x) = omega(g,h; |x|) + lambda(g; h.x) + lambda(h; x),
// which action_composition_check verifies exhaustively.
class MonomialYD {
 public:
  MonomialYD(const ThreeCocycle& omega, CrossedGSet labels, std::vector<Phase> lambda);

  const FiniteGroup& group() const { return labels_.group(); }
  const ThreeCocycle& omega() const { return *omega_; }
  const CrossedGSet& labels() const { return labels_; }
  int size() const { return labels_.size(); }
  int act(int g, int x) const { return labels_.act(g, x); }
  int grade(int x) const { return labels_.grade(x); }
  Phase lambda(int g, int x) const {
    return lambda_[static_cast<size_t>(g) * labels_.size() + x];
  }

 private:
  const ThreeCocycle* omega_;
  CrossedGSet labels_;
  std::vector<Phase> lambda_;  // |G| x size
};

CheckReport action_composition_check(const MonomialYD& m);

// Tuple coefficient and regularity over an explicit factor list (the factors
// must share one group and equal cocycle values; TupleSpace validates this).
Phase tuple_lambda_factors(const std::vector<const MonomialYD*>& factors, int g,
                           const std::vector<int>& digits);
bool is_regular_factors(const std::vector<const MonomialYD*>& factors,
                        const std::vector<int>& digits);

// Orbit data for the grade-e tuples of a tuple space.  Indices below are
// positions into the ascending list of grade-e tuple ids; the basis consists
// of the regular orbit representatives in that order (i.e. lexicographic in
// the tuple digits).
struct OrbitTable {
  std::vector<int> orbit_of;
  std::vector<int> rep_index;     // orbit -> graded index of its minimal member
  std::vector<int> orbit_size;
  std::vector<int> transporter;   // graded index -> first g with g.t = rep
  std::vector<char> regular;      // orbit flag
  std::vector<int> basis;         // graded indices of regular representatives
  std::vector<int> basis_pos;     // graded index -> basis position or -1
  int num_orbits() const { return static_cast<int>(rep_index.size()); }
};

// The tensor power (or mixed tensor product) of monomial modules over one
// (G, omega).  Tuples are encoded as mixed-radix integers with the first
// factor most significant, so ascending id = lexicographic digit order.
//
// The diagonal action twists by the running grade:
//   lambda_tuple(g; x_1..x_n) = sum_i lambda_i(g; x_i)
//                             + sum_{j>=2} omega_g(|x_1|...|x_{j-1}|, |x_j|).
// A grade-e tuple is regular iff lambda_tuple(g; t) = 0 for every g fixing t;
// regularity is constant on orbits, and the invariant subspace dimension is
// the number of regular orbits.
class TupleSpace {
 public:
  TupleSpace(std::vector<const MonomialYD*> factors,
             std::uint64_t max_tuples = kDefaultMaxTuples);

  int n() const { return static_cast<int>(factors_.size()); }
  const MonomialYD& factor(int i) const { return *factors_[i]; }
  const std::vector<const MonomialYD*>& factors() const { return factors_; }
  const FiniteGroup& group() const { return factors_[0]->group(); }
  const ThreeCocycle& omega() const { return factors_[0]->omega(); }

  std::uint64_t total_tuples() const { return total_; }
  int graded_count() const { return static_cast<int>(graded_.size()); }
  std::uint64_t graded_id(int gi) const { return graded_[gi]; }
  int graded_index_of(std::uint64_t id) const;  // -1 if not grade-e

  void decode(std::uint64_t id, std::vector<int>& digits) const;
  std::uint64_t encode(const std::vector<int>& digits) const;
  int grade_of(const std::vector<int>& digits) const;
  std::uint64_t act_on_id(int g, std::uint64_t id) const;
  Phase tuple_lambda(int g, const std::vector<int>& digits) const;

  const OrbitTable& orbit_table() const;
  int dimension() const { return static_cast<int>(orbit_table().basis.size()); }
  std::vector<std::vector<int>> basis_tuples() const;

  // Direct regularity test of one grade-e tuple (no orbit table needed).
  bool is_regular_digits(const std::vector<int>& digits) const;
  // Re-tests every member of every orbit against the orbit's flag.
  CheckReport verify_regularity_orbit_invariance() const;

 private:
  void build_orbits() const;
  const std::vector<std::uint64_t>& stab_masks(int i) const;

  std::vector<const MonomialYD*> factors_;
  std::vector<std::uint64_t> radix_;   // radix_[i] = product of sizes after i
  std::uint64_t total_ = 1;
  std::vector<std::uint64_t> graded_;
  // Per factor: stabilizer bitmask of each label, words-per-label packed.
  mutable std::map<const MonomialYD*, std::vector<std::uint64_t>> stab_cache_;
  mutable OrbitTable orbits_;
  mutable bool orbits_built_ = false;
};

TupleSpace tuple_space(const MonomialYD& m, int n,
                       std::uint64_t max_tuples = kDefaultMaxTuples);
std::vector<std::vector<int>> enumerate_graded_tuples(
    const MonomialYD& m, int n, std::uint64_t max_tuples = kDefaultMaxTuples);
Phase tuple_lambda(const MonomialYD& m, int g, const std::vector<int>& t);
bool is_regular(const MonomialYD& m, const std::vector<int>& t);
int dimension(const MonomialYD& m, int n,
              std::uint64_t max_tuples = kDefaultMaxTuples);

}  // namespace gbbraid

#endif
