#include "gbbraid/braid.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <unordered_set>

#include "gbbraid/errors.hpp"

namespace gbbraid {

MonomialMatrix MonomialMatrix::identity_matrix(int d) {
  MonomialMatrix m;
  m.dim = d;
  m.perm.resize(d);
  for (int j = 0; j < d; ++j) m.perm[j] = j;
  m.phases.assign(d, Phase::zero());
  return m;
}

bool MonomialMatrix::is_identity() const {
  for (int j = 0; j < dim; ++j)
    if (perm[j] != j || !phases[j].is_zero()) return false;
  return true;
}

bool MonomialMatrix::is_permutation() const {
  for (const Phase& q : phases)
    if (!q.is_zero()) return false;
  return true;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (dim != rhs.dim) throw InternalError("monomial matrix dimension mismatch");
  MonomialMatrix out;
  out.dim = dim;
  out.perm.resize(dim);
  out.phases.resize(dim);
  for (int j = 0; j < dim; ++j) {
    out.perm[j] = perm[rhs.perm[j]];
    out.phases[j] = rhs.phases[j] + phases[rhs.perm[j]];
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix out;
  out.dim = dim;
  out.perm.resize(dim);
  out.phases.resize(dim);
  for (int j = 0; j < dim; ++j) {
    out.perm[perm[j]] = j;
    out.phases[perm[j]] = -phases[j];
  }
  return out;
}

std::string MonomialMatrix::key() const {
  std::string k;
  k.reserve(static_cast<size_t>(dim) * 20);
  for (int j = 0; j < dim; ++j) {
    std::int64_t trio[3] = {perm[j], phases[j].num, phases[j].den};
    k.append(reinterpret_cast<const char*>(trio), sizeof trio);
  }
  return k;
}

namespace {

void check_position(const std::vector<const MonomialYD*>& factors, int i) {
  int n = static_cast<int>(factors.size());
  if (i < 1 || i > n - 1)
    throw IndexOutOfRange("braid generator index " + std::to_string(i) +
                          " outside 1..n-1 for n = " + std::to_string(n));
}

}  // namespace

std::vector<int> sigma_tuple(const std::vector<const MonomialYD*>& factors, int i,
                             const std::vector<int>& t) {
  check_position(factors, i);
  std::vector<int> out = t;
  int gi = factors[i - 1]->grade(t[i - 1]);
  out[i - 1] = factors[i]->act(gi, t[i]);
  out[i] = t[i - 1];
  return out;
}

Phase braid_coefficient(const std::vector<const MonomialYD*>& factors, int i,
                        const std::vector<int>& t) {
  check_position(factors, i);
  const FiniteGroup& g = factors[0]->group();
  const ThreeCocycle& omega = factors[0]->omega();
  int prefix = FiniteGroup::identity();
  for (int k = 0; k + 1 < i; ++k) prefix = g.mult(prefix, factors[k]->grade(t[k]));
  int gi = factors[i - 1]->grade(t[i - 1]);
  int gi1 = factors[i]->grade(t[i]);
  return -omega.value(prefix, gi1, gi) + factors[i]->lambda(gi, t[i]) +
         omega.value(prefix, gi, gi1);
}

std::vector<int> sigma_tuple(const MonomialYD& m, int i, const std::vector<int>& t) {
  std::vector<const MonomialYD*> factors(t.size(), &m);
  return sigma_tuple(factors, i, t);
}

Phase braid_coefficient(const MonomialYD& m, int i, const std::vector<int>& t) {
  std::vector<const MonomialYD*> factors(t.size(), &m);
  return braid_coefficient(factors, i, t);
}

std::pair<Phase, int> beta(const TupleSpace& s, int i, const std::vector<int>& rep_tuple) {
  return beta_across(s, s, i, rep_tuple);
}

std::pair<Phase, int> beta_across(const TupleSpace& from, const TupleSpace& to, int i,
                                  const std::vector<int>& tuple) {
  Phase coeff = braid_coefficient(from.factors(), i, tuple);
  std::vector<int> moved = sigma_tuple(from.factors(), i, tuple);
  int gi = to.graded_index_of(to.encode(moved));
  if (gi < 0) throw InternalError("sigma moved a tuple out of the grade-e set");
  const OrbitTable& ot = to.orbit_table();
  int orbit = ot.orbit_of[gi];
  if (!ot.regular[orbit])
    throw TargetNotRegular("sigma maps a regular orbit into an irregular one");
  int g = ot.transporter[gi];
  Phase q = coeff + to.tuple_lambda(g, moved);
  return {q, ot.rep_index[orbit]};
}

MonomialMatrix elementary_move(const TupleSpace& from, const TupleSpace& to, int i) {
  if (from.n() != to.n()) throw InternalError("tuple spaces of different length");
  check_position(from.factors(), i);
  for (int k = 0; k < from.n(); ++k) {
    const MonomialYD* expect =
        (k == i - 1) ? &from.factor(i) : (k == i) ? &from.factor(i - 1) : &from.factor(k);
    if (&to.factor(k) != expect)
      throw MixedAmbientData("target space is not the source with factors i,i+1 swapped");
  }
  const OrbitTable& ot_from = from.orbit_table();
  int d = static_cast<int>(ot_from.basis.size());
  if (to.dimension() != d)
    throw InternalError("swapped tuple space has a different invariant dimension");
  MonomialMatrix m;
  m.dim = d;
  m.perm.resize(d);
  m.phases.resize(d);
  std::vector<int> digits(from.n());
  const OrbitTable& ot_to = to.orbit_table();
  for (int j = 0; j < d; ++j) {
    from.decode(from.graded_id(ot_from.basis[j]), digits);
    auto [q, rep_gi] = beta_across(from, to, i, digits);
    int row = ot_to.basis_pos[rep_gi];
    if (row < 0) throw InternalError("target representative is not a basis element");
    m.perm[j] = row;
    m.phases[j] = q;
  }
  return m;
}

BraidRep braid_matrices(const MonomialYD& m, int n, std::uint64_t max_tuples) {
  if (n < 1) throw ValidationError("braid rep needs n >= 1");
  TupleSpace s = tuple_space(m, n, max_tuples);
  BraidRep rep;
  rep.n = n;
  rep.dim = s.dimension();
  rep.basis = s.basis_tuples();
  for (int i = 1; i <= n - 1; ++i) rep.generators.push_back(elementary_move(s, s, i));
  return rep;
}

CheckReport verify_braid_relations(const BraidRep& rep) {
  const auto& g = rep.generators;
  for (size_t i = 0; i + 1 < g.size(); ++i) {
    MonomialMatrix lhs = g[i] * g[i + 1] * g[i];
    MonomialMatrix rhs = g[i + 1] * g[i] * g[i + 1];
    if (!(lhs == rhs))
      return CheckReport::fail("braid relation fails: s" + std::to_string(i + 1) + " s" +
                               std::to_string(i + 2) + " s" + std::to_string(i + 1) +
                               " != s" + std::to_string(i + 2) + " s" +
                               std::to_string(i + 1) + " s" + std::to_string(i + 2));
  }
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 2; j < g.size(); ++j) {
      MonomialMatrix lhs = g[i] * g[j];
      MonomialMatrix rhs = g[j] * g[i];
      if (!(lhs == rhs))
        return CheckReport::fail("distant generators fail to commute: s" +
                                 std::to_string(i + 1) + " s" + std::to_string(j + 1));
    }
  return CheckReport::pass();
}

CheckReport beta_transporter_independence(const TupleSpace& s) {
  const OrbitTable& ot = s.orbit_table();
  const FiniteGroup& g = s.group();
  std::vector<int> digits(s.n());
  for (int j = 0; j < static_cast<int>(ot.basis.size()); ++j) {
    s.decode(s.graded_id(ot.basis[j]), digits);
    for (int i = 1; i <= s.n() - 1; ++i) {
      Phase coeff = braid_coefficient(s.factors(), i, digits);
      std::vector<int> moved = sigma_tuple(s.factors(), i, digits);
      std::uint64_t moved_id = s.encode(moved);
      int gi = s.graded_index_of(moved_id);
      int rep_gi = ot.rep_index[ot.orbit_of[gi]];
      std::uint64_t rep_id = s.graded_id(rep_gi);
      Phase expected = coeff + s.tuple_lambda(ot.transporter[gi], moved);
      for (int gg = 0; gg < g.order(); ++gg) {
        if (s.act_on_id(gg, moved_id) != rep_id) continue;
        Phase q = coeff + s.tuple_lambda(gg, moved);
        if (q != expected)
          return CheckReport::fail(
              "transporter choice changes beta at basis tuple " + std::to_string(j) +
              ", generator " + std::to_string(i) + ", carrier g = " + std::to_string(gg));
      }
    }
  }
  return CheckReport::pass();
}

ImageOrderResult image_order(const std::vector<MonomialMatrix>& generators,
                             std::uint64_t cap) {
  if (generators.empty()) return {false, 1};
  const int d = generators[0].dim;
  for (const auto& g : generators)
    if (g.dim != d) throw InternalError("generators of mixed dimension");
  std::unordered_set<std::string> seen;
  std::queue<MonomialMatrix> frontier;
  MonomialMatrix id = MonomialMatrix::identity_matrix(d);
  seen.insert(id.key());
  frontier.push(std::move(id));
  while (!frontier.empty()) {
    MonomialMatrix cur = std::move(frontier.front());
    frontier.pop();
    for (const auto& g : generators) {
      MonomialMatrix next = g * cur;
      if (seen.insert(next.key()).second) {
        if (seen.size() > cap) return {true, cap};
        frontier.push(std::move(next));
      }
    }
  }
  return {false, seen.size()};
}

namespace {

// Tuple spaces for the factor orderings visited while evaluating pure-braid
// words, built on demand and cached per ordering.
class OrderingFamily {
 public:
  OrderingFamily(std::vector<const MonomialYD*> ms, std::uint64_t max_tuples)
      : ms_(std::move(ms)), max_tuples_(max_tuples) {}

  const TupleSpace& space(const std::vector<int>& ordering) {
    auto it = cache_.find(ordering);
    if (it != cache_.end()) return *it->second;
    std::vector<const MonomialYD*> factors(ms_.size());
    for (size_t k = 0; k < ms_.size(); ++k) factors[k] = ms_[ordering[k]];
    auto space = std::make_unique<TupleSpace>(std::move(factors), max_tuples_);
    return *cache_.emplace(ordering, std::move(space)).first->second;
  }

 private:
  std::vector<const MonomialYD*> ms_;
  std::uint64_t max_tuples_;
  std::map<std::vector<int>, std::unique_ptr<TupleSpace>> cache_;
};

}  // namespace

PureBraidRep pure_braid_matrices(const std::vector<const MonomialYD*>& ms,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 std::uint64_t max_tuples) {
  const int n = static_cast<int>(ms.size());
  if (n < 2) throw ValidationError("pure braid matrices need n >= 2 factors");
  for (const auto* m : ms) {
    if (&m->group() != &ms[0]->group())
      throw MixedAmbientData("pure braid factors live over different groups");
    if (!m->omega().same_values(ms[0]->omega()))
      throw MixedAmbientData("pure braid factors carry different 3-cocycles");
  }
  OrderingFamily family(ms, max_tuples);
  std::vector<int> base(n);
  for (int k = 0; k < n; ++k) base[k] = k;
  const TupleSpace& base_space = family.space(base);

  PureBraidRep rep;
  rep.n = n;
  rep.dim = base_space.dimension();
  rep.basis = base_space.basis_tuples();
  rep.pairs = pairs;
  for (auto [i, j] : pairs) {
    if (i < 1 || j <= i || j > n)
      throw IndexOutOfRange("pure braid pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") needs 1 <= i < j <= n");
    // A_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^{-1} ... s_{j-1}^{-1}),
    // evaluated rightmost letter first.
    std::vector<std::pair<int, bool>> word;  // (k, inverted)
    for (int k = i + 1; k <= j - 1; ++k) word.emplace_back(k, true);
    std::reverse(word.begin(), word.end());
    word.emplace_back(i, false);
    word.emplace_back(i, false);
    for (int k = i + 1; k <= j - 1; ++k) word.emplace_back(k, false);
    std::reverse(word.begin(), word.end());

    std::vector<int> ordering = base;
    MonomialMatrix acc = MonomialMatrix::identity_matrix(rep.dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      auto [k, inverted] = *it;
      std::vector<int> swapped = ordering;
      std::swap(swapped[k - 1], swapped[k]);
      const TupleSpace& cur = family.space(ordering);
      const TupleSpace& nxt = family.space(swapped);
      MonomialMatrix step = inverted ? elementary_move(nxt, cur, k).inverse()
                                     : elementary_move(cur, nxt, k);
      acc = step * acc;
      ordering = std::move(swapped);
    }
    if (ordering != base)
      throw InternalError("pure braid word did not return to the base ordering");
    rep.matrices.push_back(std::move(acc));
  }
  return rep;
}

}  // namespace gbbraid
