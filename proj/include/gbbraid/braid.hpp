#ifndef GBBRAID_BRAID_HPP
#define GBBRAID_BRAID_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gbbraid/monomial.hpp"

namespace gbbraid {

// A monomial matrix: exactly one nonzero entry per row and column, each a
// root of unity.  Column j carries entry e^{2 pi i phases[j]} in row perm[j].
struct MonomialMatrix {
  int dim = 0;
  std::vector<int> perm;
  std::vector<Phase> phases;

  static MonomialMatrix identity_matrix(int d);
  bool is_identity() const;
  bool is_permutation() const;  // all phases zero
  MonomialMatrix operator*(const MonomialMatrix& rhs) const;  // apply rhs first
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix&) const = default;
  // Stable byte key for closure hashing.
  std::string key() const;
};

// sigma'_i replaces (x_i, x_{i+1}) by (|x_i| . x_{i+1}, x_i); positions are
// 1-based with 1 <= i <= n-1.  The factor at slot i+1 moves to slot i, so in
// a mixed product the result lives in the space with those factors swapped.
std::vector<int> sigma_tuple(const std::vector<const MonomialYD*>& factors, int i,
                             const std::vector<int>& t);

// The scalar picked up by sigma_i before transporting back to the basis:
//   -omega(P_{i-1}, |x_{i+1}|, |x_i|) + lambda_{i+1}(|x_i|; x_{i+1})
//   +omega(P_{i-1}, |x_i|, |x_{i+1}|),
// with P_{i-1} = |x_1| ... |x_{i-1}| (empty product for i = 1).
Phase braid_coefficient(const std::vector<const MonomialYD*>& factors, int i,
                        const std::vector<int>& t);

std::vector<int> sigma_tuple(const MonomialYD& m, int i, const std::vector<int>& t);
Phase braid_coefficient(const MonomialYD& m, int i, const std::vector<int>& t);

// beta_{i,x} for a basis representative x: the full coefficient including the
// transporter that returns sigma'_i(x) to its orbit representative.  Returns
// the phase and the graded index of the target representative.
std::pair<Phase, int> beta(const TupleSpace& s, int i, const std::vector<int>& rep_tuple);

// Same, with sigma'_i(x) looked up in `to` (the space with factors i, i+1
// swapped); the transporter and representative are taken from `to`.
std::pair<Phase, int> beta_across(const TupleSpace& from, const TupleSpace& to, int i,
                                  const std::vector<int>& tuple);

// The matrix of sigma_i from the invariant basis of `from` to that of `to`
// (`to` must be `from` with factors i, i+1 swapped; pass the same space for a
// homogeneous power).  Column j: sigma_i maps basis vector j of `from` to
// a phase times basis vector row of `to`.
MonomialMatrix elementary_move(const TupleSpace& from, const TupleSpace& to, int i);

struct BraidRep {
  int n = 0;
  int dim = 0;
  std::vector<std::vector<int>> basis;       // regular representatives, lex order
  std::vector<MonomialMatrix> generators;    // sigma_1 .. sigma_{n-1}
};

BraidRep braid_matrices(const MonomialYD& m, int n,
                        std::uint64_t max_tuples = kDefaultMaxTuples);

// Checks sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1} and
// commutation of distant generators; the failure witness names the word.
CheckReport verify_braid_relations(const BraidRep& rep);

// For every basis representative and generator, re-derives beta with every
// group element carrying sigma'_i(x) to the target representative (not just
// the stored minimal transporter); all must give the same phase.
CheckReport beta_transporter_independence(const TupleSpace& s);

// Order of the group generated by the matrices, by breadth-first closure.
struct ImageOrderResult {
  bool exceeded = false;
  std::uint64_t order = 0;  // exact order, or the cap when exceeded
};
ImageOrderResult image_order(const std::vector<MonomialMatrix>& generators,
                             std::uint64_t cap = 1'000'000);

// Pure-braid generators A_{i,j} (1 <= i < j <= n) on the invariant basis of
// the mixed product Ms[0] x ... x Ms[n-1]; every A_{i,j} is an endomorphism
// of that space even though individual sigma moves pass through the swapped
// orderings.
struct PureBraidRep {
  int n = 0;
  int dim = 0;
  std::vector<std::vector<int>> basis;
  std::vector<std::pair<int, int>> pairs;
  std::vector<MonomialMatrix> matrices;
};
PureBraidRep pure_braid_matrices(const std::vector<const MonomialYD*>& ms,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 std::uint64_t max_tuples = kDefaultMaxTuples);

}  // namespace gbbraid

#endif
