#include "gbbraid/monomial.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gbbraid/threading.hpp"

namespace gbbraid {

MonomialYD::MonomialYD(const ThreeCocycle& omega, CrossedGSet labels,
                       std::vector<Phase> lambda)
    : omega_(&omega), labels_(std::move(labels)), lambda_(std::move(lambda)) {
  if (&labels_.group() != &omega.group())
    throw MixedAmbientData("module labels and 3-cocycle live over different groups");
  if (labels_.size() < 1) throw ValidationError("module needs at least one label");
  if (lambda_.size() != static_cast<size_t>(group().order()) * labels_.size())
    throw ValidationError("lambda table has wrong size");
  for (int x = 0; x < size(); ++x)
    if (!this->lambda(FiniteGroup::identity(), x).is_zero())
      throw ValidationError("lambda(e; x) != 1 at x = " + std::to_string(x));
}

CheckReport action_composition_check(const MonomialYD& m) {
  const FiniteGroup& g = m.group();
  for (int g1 = 0; g1 < g.order(); ++g1)
    for (int g2 = 0; g2 < g.order(); ++g2)
      for (int x = 0; x < m.size(); ++x) {
        Phase lhs = m.lambda(g.mult(g1, g2), x);
        Phase rhs = omega_pair(m.omega(), g1, g2, m.grade(x)) +
                    m.lambda(g1, m.act(g2, x)) + m.lambda(g2, x);
        if (lhs != rhs)
          return CheckReport::fail(
              "composition law fails at (g1,g2,x) = (" + std::to_string(g1) + "," +
              std::to_string(g2) + "," + std::to_string(x) + "): lambda(g1 g2; x) = " +
              lhs.str() + " but twisted product gives " + rhs.str());
      }
  return CheckReport::pass();
}

TupleSpace::TupleSpace(std::vector<const MonomialYD*> factors, std::uint64_t max_tuples)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("tuple space needs at least one factor");
  const FiniteGroup* g = &factors_[0]->group();
  for (const auto* f : factors_) {
    if (&f->group() != g)
      throw MixedAmbientData("tuple factors live over different groups");
    if (!f->omega().same_values(factors_[0]->omega()))
      throw MixedAmbientData("tuple factors carry different 3-cocycles");
  }
  radix_.assign(factors_.size(), 1);
  unsigned __int128 total = 1;
  for (int i = n() - 1; i >= 0; --i) {
    if (i + 1 < n()) radix_[i] = radix_[i + 1] * factors_[i + 1]->size();
    total *= static_cast<unsigned>(factors_[i]->size());
    if (total > max_tuples)
      throw SizeLimitExceeded(
          total > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(total),
          max_tuples);
  }
  total_ = static_cast<std::uint64_t>(total);

  std::vector<int> digits(n());
  for (std::uint64_t id = 0; id < total_; ++id) {
    decode(id, digits);
    if (grade_of(digits) == FiniteGroup::identity()) graded_.push_back(id);
  }
}

int TupleSpace::graded_index_of(std::uint64_t id) const {
  auto it = std::lower_bound(graded_.begin(), graded_.end(), id);
  if (it == graded_.end() || *it != id) return -1;
  return static_cast<int>(it - graded_.begin());
}

void TupleSpace::decode(std::uint64_t id, std::vector<int>& digits) const {
  digits.resize(n());
  for (int i = 0; i < n(); ++i) {
    digits[i] = static_cast<int>(id / radix_[i]);
    id %= radix_[i];
  }
}

std::uint64_t TupleSpace::encode(const std::vector<int>& digits) const {
  std::uint64_t id = 0;
  for (int i = 0; i < n(); ++i) id += radix_[i] * static_cast<std::uint64_t>(digits[i]);
  return id;
}

int TupleSpace::grade_of(const std::vector<int>& digits) const {
  int p = FiniteGroup::identity();
  for (int i = 0; i < n(); ++i) p = group().mult(p, factors_[i]->grade(digits[i]));
  return p;
}

std::uint64_t TupleSpace::act_on_id(int g, std::uint64_t id) const {
  std::uint64_t out = 0;
  for (int i = 0; i < n(); ++i) {
    int d = static_cast<int>(id / radix_[i]);
    id %= radix_[i];
    out += radix_[i] * static_cast<std::uint64_t>(factors_[i]->act(g, d));
  }
  return out;
}

Phase tuple_lambda_factors(const std::vector<const MonomialYD*>& factors, int g,
                           const std::vector<int>& digits) {
  const FiniteGroup& gr = factors[0]->group();
  if (digits.size() != factors.size())
    throw ValidationError("tuple length differs from the factor count");
  if (g < 0 || g >= gr.order()) throw IndexOutOfRange("group element out of range");
  for (size_t j = 0; j < factors.size(); ++j)
    if (digits[j] < 0 || digits[j] >= factors[j]->size())
      throw IndexOutOfRange("tuple entry out of range");
  const ThreeCocycle& omega = factors[0]->omega();
  Phase q = Phase::zero();
  int prefix = FiniteGroup::identity();  // |x_1| ... |x_{j-1}|
  for (size_t j = 0; j < factors.size(); ++j) {
    q += factors[j]->lambda(g, digits[j]);
    if (j > 0) q += omega_action(omega, g, prefix, factors[j]->grade(digits[j]));
    prefix = gr.mult(prefix, factors[j]->grade(digits[j]));
  }
  return q;
}

bool is_regular_factors(const std::vector<const MonomialYD*>& factors,
                        const std::vector<int>& digits) {
  const FiniteGroup& gr = factors[0]->group();
  if (digits.size() != factors.size())
    throw ValidationError("tuple length differs from the factor count");
  for (size_t j = 0; j < factors.size(); ++j)
    if (digits[j] < 0 || digits[j] >= factors[j]->size())
      throw IndexOutOfRange("tuple entry out of range");
  int grade = FiniteGroup::identity();
  for (size_t i = 0; i < factors.size(); ++i)
    grade = gr.mult(grade, factors[i]->grade(digits[i]));
  if (grade != FiniteGroup::identity())
    throw ValidationError("regularity is defined for grade-e tuples only");
  for (int g = 1; g < gr.order(); ++g) {
    bool fixes = true;
    for (size_t i = 0; i < factors.size() && fixes; ++i)
      fixes = factors[i]->act(g, digits[i]) == digits[i];
    if (fixes && !tuple_lambda_factors(factors, g, digits).is_zero()) return false;
  }
  return true;
}

Phase TupleSpace::tuple_lambda(int g, const std::vector<int>& digits) const {
  return tuple_lambda_factors(factors_, g, digits);
}

const std::vector<std::uint64_t>& TupleSpace::stab_masks(int i) const {
  auto it = stab_cache_.find(factors_[i]);
  if (it != stab_cache_.end()) return it->second;
  const MonomialYD& m = *factors_[i];
  const int words = (group().order() + 63) / 64;
  std::vector<std::uint64_t> masks(static_cast<size_t>(m.size()) * words, 0);
  for (int x = 0; x < m.size(); ++x)
    for (int g = 0; g < group().order(); ++g)
      if (m.act(g, x) == x)
        masks[static_cast<size_t>(x) * words + (g >> 6)] |= std::uint64_t{1}
                                                            << (g & 63);
  return stab_cache_.emplace(factors_[i], std::move(masks)).first->second;
}

void TupleSpace::build_orbits() const {
  if (orbits_built_) return;
  const int count = graded_count();
  OrbitTable& t = orbits_;
  auto act = [&](int g, int gi) {
    int out = graded_index_of(act_on_id(g, graded_[gi]));
    if (out < 0) throw InternalError("group action left the grade-e tuple set");
    return out;
  };
  OrbitPartition p = orbit_partition(group(), count, act);
  t.orbit_of = std::move(p.orbit_of);
  t.transporter = std::move(p.transporter);
  t.rep_index = std::move(p.rep);
  t.orbit_size.resize(p.members.size());
  for (size_t o = 0; o < p.members.size(); ++o)
    t.orbit_size[o] = static_cast<int>(p.members[o].size());

  // Regularity is decided on the representative; the orbit-invariance of the
  // answer is re-checked by verify_regularity_orbit_invariance.
  const int words = (group().order() + 63) / 64;
  for (int i = 0; i < n(); ++i) stab_masks(i);  // warm the cache before threading
  t.regular.assign(t.num_orbits(), 0);
  parallel_chunks(t.num_orbits(), [&](std::uint64_t lo, std::uint64_t hi, int) {
    std::vector<int> digits(n());
    std::vector<std::uint64_t> mask(words);
    for (std::uint64_t o = lo; o < hi; ++o) {
      decode(graded_[t.rep_index[o]], digits);
      for (int w = 0; w < words; ++w) mask[w] = ~std::uint64_t{0};
      for (int i = 0; i < n(); ++i) {
        const auto& ms = stab_masks(i);
        for (int w = 0; w < words; ++w)
          mask[w] &= ms[static_cast<size_t>(digits[i]) * words + w];
      }
      bool regular = true;
      for (int w = 0; w < words && regular; ++w) {
        std::uint64_t bits = mask[w];
        while (bits) {
          int g = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (g == FiniteGroup::identity()) continue;
          if (g >= group().order()) break;
          if (!tuple_lambda(g, digits).is_zero()) {
            regular = false;
            break;
          }
        }
      }
      t.regular[o] = regular ? 1 : 0;
    }
  });

  t.basis_pos.assign(count, -1);
  for (int o = 0; o < t.num_orbits(); ++o)
    if (t.regular[o]) {
      t.basis_pos[t.rep_index[o]] = static_cast<int>(t.basis.size());
      t.basis.push_back(t.rep_index[o]);
    }
  orbits_built_ = true;
}

const OrbitTable& TupleSpace::orbit_table() const {
  build_orbits();
  return orbits_;
}

std::vector<std::vector<int>> TupleSpace::basis_tuples() const {
  const OrbitTable& t = orbit_table();
  std::vector<std::vector<int>> out(t.basis.size());
  for (size_t i = 0; i < t.basis.size(); ++i) decode(graded_[t.basis[i]], out[i]);
  return out;
}

bool TupleSpace::is_regular_digits(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != n())
    throw ValidationError("tuple has wrong length");
  for (int i = 0; i < n(); ++i)
    if (digits[i] < 0 || digits[i] >= factors_[i]->size())
      throw IndexOutOfRange("tuple entry out of range");
  return is_regular_factors(factors_, digits);
}

CheckReport TupleSpace::verify_regularity_orbit_invariance() const {
  const OrbitTable& t = orbit_table();
  std::vector<int> digits(n());
  for (int gi = 0; gi < graded_count(); ++gi) {
    decode(graded_[gi], digits);
    if (is_regular_digits(digits) != static_cast<bool>(t.regular[t.orbit_of[gi]]))
      return CheckReport::fail("regularity differs from the orbit flag at tuple id " +
                               std::to_string(graded_[gi]));
  }
  return CheckReport::pass();
}

TupleSpace tuple_space(const MonomialYD& m, int n, std::uint64_t max_tuples) {
  if (n < 1) throw ValidationError("tuple length must be >= 1");
  return TupleSpace(std::vector<const MonomialYD*>(n, &m), max_tuples);
}

std::vector<std::vector<int>> enumerate_graded_tuples(const MonomialYD& m, int n,
                                                      std::uint64_t max_tuples) {
  TupleSpace s = tuple_space(m, n, max_tuples);
  std::vector<std::vector<int>> out(s.graded_count());
  for (int gi = 0; gi < s.graded_count(); ++gi) s.decode(s.graded_id(gi), out[gi]);
  return out;
}

Phase tuple_lambda(const MonomialYD& m, int g, const std::vector<int>& t) {
  if (t.empty()) throw ValidationError("tuple is empty");
  std::vector<const MonomialYD*> factors(t.size(), &m);
  return tuple_lambda_factors(factors, g, t);
}

bool is_regular(const MonomialYD& m, const std::vector<int>& t) {
  if (t.empty()) throw ValidationError("tuple is empty");
  std::vector<const MonomialYD*> factors(t.size(), &m);
  return is_regular_factors(factors, t);
}

int dimension(const MonomialYD& m, int n, std::uint64_t max_tuples) {
  return tuple_space(m, n, max_tuples).dimension();
}

}  // namespace gbbraid
