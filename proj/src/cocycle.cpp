#include "gbbraid/cocycle.hpp"

#include <numeric>
#include <optional>

#include "gbbraid/errors.hpp"
#include "gbbraid/threading.hpp"

namespace gbbraid {

ThreeCocycle ThreeCocycle::trivial(const FiniteGroup& g) {
  return ThreeCocycle(Kind::Trivial, g);
}

Phase ThreeCocycle::value(int a, int b, int c) const {
  switch (kind_) {
    case Kind::Trivial:
      return Phase::zero();
    case Kind::Cyclic: {
      int s = b + c;
      return Phase::of(static_cast<std::int64_t>(p_) * a * (s - s % m_),
                       static_cast<std::int64_t>(m_) * m_);
    }
    case Kind::Table: {
      int n = group_->order();
      return table_[(static_cast<size_t>(a) * n + b) * n + c];
    }
  }
  return Phase::zero();
}

bool ThreeCocycle::is_trivial_values() const {
  switch (kind_) {
    case Kind::Trivial:
      return true;
    case Kind::Cyclic:
      return p_ == 0;
    case Kind::Table:
      for (const Phase& q : table_)
        if (!q.is_zero()) return false;
      return true;
  }
  return true;
}

std::int64_t ThreeCocycle::denominator_lcm() const {
  switch (kind_) {
    case Kind::Trivial:
      return 1;
    case Kind::Cyclic:
      // floor((b+c)/m) is 0 or 1, so every value is a multiple of p/m.
      return m_;
    case Kind::Table: {
      std::int64_t l = 1;
      for (const Phase& q : table_) l = std::lcm(l, q.den);
      return l;
    }
  }
  return 1;
}

bool ThreeCocycle::same_values(const ThreeCocycle& o) const {
  if (group_ != o.group_) return false;
  if (kind_ == o.kind_ && kind_ != Kind::Table && m_ == o.m_ && p_ == o.p_) return true;
  int n = group_->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (value(a, b, c) != o.value(a, b, c)) return false;
  return true;
}

ThreeCocycle cyclic_cocycle(const FiniteGroup& zm, int p) {
  const int m = zm.order();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (zm.mult(a, b) != (a + b) % m)
        throw ValidationError(
            "cyclic_cocycle requires the canonical cyclic group (index = exponent)");
  p = ((p % m) + m) % m;
  if (p == 0) return ThreeCocycle::trivial(zm);
  ThreeCocycle w(ThreeCocycle::Kind::Cyclic, zm);
  w.m_ = m;
  w.p_ = p;
  return w;
}

ThreeCocycle check_three_cocycle(const FiniteGroup& g, const std::vector<Phase>& values) {
  const int n = g.order();
  if (n > ThreeCocycle::kMaxTableOrder)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(n), ThreeCocycle::kMaxTableOrder);
  if (values.size() != static_cast<size_t>(n) * n * n)
    throw ValidationError("3-cocycle table has wrong size");
  ThreeCocycle w(ThreeCocycle::Kind::Table, g);
  w.table_ = values;

  // Pentagon identity, scanned in lexicographic (a,b,c,d) order.  The a-range
  // is chunked across workers; chunk 0 holds the smallest quadruples, so the
  // first reporting chunk owns the lexicographically first violation.
  std::vector<std::optional<CocycleViolation>> found(worker_threads());
  parallel_chunks(n, [&](std::uint64_t lo, std::uint64_t hi, int chunk) {
    for (int a = static_cast<int>(lo); a < static_cast<int>(hi); ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            Phase lhs = w.value(g.mult(a, b), c, d) + w.value(a, b, g.mult(c, d));
            Phase rhs = w.value(a, b, c) + w.value(a, g.mult(b, c), d) + w.value(b, c, d);
            if (lhs != rhs) {
              if (!found[chunk]) found[chunk] = CocycleViolation(a, b, c, d);
              return;
            }
          }
  });
  for (const auto& v : found)
    if (v) throw *v;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!w.value(a, FiniteGroup::identity(), b).is_zero())
        throw NotNormalized("3-cocycle not normalized at (" + std::to_string(a) +
                            ",e," + std::to_string(b) + ")");
  // With the pentagon identity and middle-slot normalization these hold
  // automatically.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!w.value(0, a, b).is_zero() || !w.value(a, b, 0).is_zero())
        throw InternalError("normalized cocycle has nonzero boundary value");
  return w;
}

TwoCochain TwoCochain::trivial(const Subgroup& h) {
  TwoCochain c(h);
  c.table_.assign(static_cast<size_t>(h.size()) * h.size(), Phase::zero());
  return c;
}

Phase TwoCochain::value(int h1, int h2) const {
  return value_local(h_.local_index(h1), h_.local_index(h2));
}

bool TwoCochain::is_trivial_values() const {
  for (const Phase& q : table_)
    if (!q.is_zero()) return false;
  return true;
}

TwoCochain check_two_cochain(const ThreeCocycle& omega, const Subgroup& h,
                             const std::vector<Phase>& values_local) {
  if (&omega.group() != &h.group())
    throw MixedAmbientData("2-cochain subgroup and 3-cocycle live over different groups");
  const int k = h.size();
  if (values_local.size() != static_cast<size_t>(k) * k)
    throw ValidationError("2-cochain table has wrong size");
  TwoCochain c(h);
  c.table_ = values_local;

  const int e_local = h.local_index(FiniteGroup::identity());
  for (int i = 0; i < k; ++i)
    if (!c.value_local(e_local, i).is_zero() || !c.value_local(i, e_local).is_zero())
      throw NotNormalized(
          "2-cochain not normalized at h = " + std::to_string(h.elem(i)) +
          ": gamma(e,h) and gamma(h,e) must equal 1 (we reject instead of rescaling)");

  const FiniteGroup& g = h.group();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        int a = h.elem(i), b = h.elem(j), cc = h.elem(l);
        Phase delta = c.value_local(j, l) - c.value(g.mult(a, b), cc) +
                      c.value(a, g.mult(b, cc)) - c.value_local(i, j);
        Phase target = omega.value(a, b, cc);
        if (delta != target)
          throw CoboundaryViolation(a, b, cc,
                                    "delta(gamma) = " + delta.str() + " but omega = " +
                                        target.str());
      }
  return c;
}

Phase omega_pair(const ThreeCocycle& omega, int g, int gp, int h) {
  const FiniteGroup& gr = omega.group();
  return omega.value(g, gr.conj(gp, h), gp) -
         omega.value(gr.conj(gr.mult(g, gp), h), g, gp) - omega.value(g, gp, h);
}

Phase omega_action(const ThreeCocycle& omega, int g, int f, int h) {
  const FiniteGroup& gr = omega.group();
  return omega.value(g, f, h) - omega.value(gr.conj(g, f), g, h) +
         omega.value(gr.conj(g, f), gr.conj(g, h), g);
}

Phase epsilon(const TwoCochain& gamma, int h1, int h2) {
  const FiniteGroup& g = gamma.subgroup().group();
  return gamma.value(h1, h2) - gamma.value(g.conj(h1, h2), h1);
}

}  // namespace gbbraid
