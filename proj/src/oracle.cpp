#include "gbbraid/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbbraid/errors.hpp"

namespace gbbraid {

namespace {

// Integer polynomials, low-to-high coefficients.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_xm_minus_1(int m) {
  ZPoly p(m + 1, mpz_class(0));
  p[0] = -1;
  p[m] = 1;
  return p;
}

// Exact division (remainder must vanish).
ZPoly zpoly_div(const ZPoly& num, const ZPoly& den) {
  ZPoly rem = num;
  int dn = static_cast<int>(rem.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  ZPoly quot(dn - dd + 1, mpz_class(0));
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = rem[k + dd] / den[dd];
    quot[k] = c;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return quot;
}

ZPoly cyclotomic_poly(int m, std::vector<ZPoly>& cache) {
  if (!cache[m].empty()) return cache[m];
  ZPoly p = zpoly_xm_minus_1(m);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = zpoly_div(p, cyclotomic_poly(d, cache));
  cache[m] = p;
  return p;
}

constexpr int kMaxFieldConductor = 1000;

}  // namespace

CycloField::CycloField(int m) : m_(m) {
  if (m < 1) throw ValidationError("cyclotomic field conductor must be >= 1");
  if (m > kMaxFieldConductor)
    throw SizeLimitExceeded(static_cast<std::uint64_t>(m), kMaxFieldConductor);
  std::vector<ZPoly> cache(m + 1);
  ZPoly phi = cyclotomic_poly(m, cache);
  degree_ = static_cast<int>(phi.size()) - 1;
  phi_.reserve(phi.size());
  for (const auto& c : phi) phi_.emplace_back(c);

  // zeta^k for k in [0, m), reduced mod Phi_m (monic, so x^degree =
  // -(phi[0] + ... + phi[degree-1] x^{degree-1})).
  zeta_pow_.assign(m_, std::vector<mpq_class>(degree_, mpq_class(0)));
  std::vector<mpq_class> cur(degree_, mpq_class(0));
  cur[0] = 1;
  for (int k = 0; k < m_; ++k) {
    zeta_pow_[k] = cur;
    // multiply by x
    mpq_class top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j) cur[j] -= top * mpq_class(phi[j]);
  }
}

CycloField::Elt CycloField::one() const {
  Elt e = zero();
  e[0] = 1;
  return e;
}

CycloField::Elt CycloField::root(const Phase& q) const {
  if (m_ % q.den != 0)
    throw InternalError("phase denominator " + std::to_string(q.den) +
                        " does not divide the field conductor " + std::to_string(m_));
  int k = static_cast<int>((q.num * (m_ / q.den)) % m_);
  return zeta_pow_[k];
}

CycloField::Elt CycloField::mul(const Elt& a, const Elt& b) const {
  // Schoolbook product, folding x^{degree+j} back via zeta powers: since
  // degree+j < 2*degree <= 2m and zeta^m = 1, reuse the power table.
  std::vector<mpq_class> prod(2 * degree_ - 1, mpq_class(0));
  for (int i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree_; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  Elt out(degree_, mpq_class(0));
  for (int k = 0; k < degree_; ++k) out[k] = prod[k];
  for (int k = degree_; k < 2 * degree_ - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& fold = zeta_pow_[k % m_];
    for (int j = 0; j < degree_; ++j) out[j] += prod[k] * fold[j];
  }
  return out;
}

void CycloField::add_to(Elt& a, const Elt& b) const {
  for (int j = 0; j < degree_; ++j) a[j] += b[j];
}

void CycloField::sub_from(Elt& a, const Elt& b) const {
  for (int j = 0; j < degree_; ++j) a[j] -= b[j];
}

CycloField::Elt CycloField::scaled(const Elt& a, const mpq_class& c) const {
  Elt out = a;
  for (auto& x : out) x *= c;
  return out;
}

bool CycloField::is_zero(const Elt& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool CycloField::equal(const Elt& a, const Elt& b) const {
  for (int j = 0; j < degree_; ++j)
    if (a[j] != b[j]) return false;
  return true;
}

namespace {

// Rational polynomials, low-to-high; used only for field inversion.
using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qpoly_mod(QPoly a, const QPoly& b, QPoly* quot) {
  int db = qdeg(b);
  if (quot) quot->assign(std::max<int>(qdeg(a) - db + 1, 1), mpq_class(0));
  while (qdeg(a) >= db) {
    int da = qdeg(a);
    mpq_class c = a[da] / b[db];
    if (quot) (*quot)[da - db] = c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
  }
  return a;
}

}  // namespace

CycloField::Elt CycloField::inverse(const Elt& a) const {
  if (is_zero(a)) throw InternalError("division by zero in the cyclotomic field");
  // Extended Euclid on (Phi_m, a): Phi_m is irreducible over Q, so the gcd is
  // a nonzero constant c with  s * a = c (mod Phi_m)  and  a^{-1} = s / c.
  QPoly r0 = phi_, r1(a.begin(), a.end());
  QPoly s0(1, mpq_class(0)), s1(1, mpq_class(1));
  while (qdeg(r1) > 0) {
    QPoly q;
    QPoly r2 = qpoly_mod(r0, r1, &q);
    r0 = std::move(r1);
    r1 = std::move(r2);
    // s2 = s0 - q * s1
    QPoly s2(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (qdeg(r1) != 0) throw InternalError("cyclotomic polynomial is not irreducible?");
  Elt out = zero();
  QPoly reduced = qpoly_mod(s1, phi_, nullptr);
  for (int j = 0; j < degree_ && j < static_cast<int>(reduced.size()); ++j)
    out[j] = reduced[j] / r1[0];
  return out;
}

int CycloField::rank(std::vector<std::vector<Elt>>& rows) const {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Elt pinv = inverse(rows[rank][col]);
    for (int c = col; c < ncols; ++c) rows[rank][c] = mul(pinv, rows[rank][c]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      Elt factor = rows[r][col];
      for (int c = col; c < ncols; ++c) {
        Elt t = mul(factor, rows[rank][c]);
        sub_from(rows[r][c], t);
      }
    }
    ++rank;
  }
  return rank;
}

AveragingProjector averaging_projector(const TupleSpace& s) {
  if (s.total_tuples() > kOracleMaxTuples)
    throw SizeLimitExceeded(s.total_tuples(), kOracleMaxTuples);
  const FiniteGroup& g = s.group();
  const int d = s.graded_count();

  // Gamma(g) e_t = lambda(g; t) e_{g.t}; collect the phases first to size the
  // field by the lcm of their denominators.
  std::vector<std::vector<Phase>> phases(g.order(), std::vector<Phase>(d));
  std::vector<std::vector<int>> targets(g.order(), std::vector<int>(d));
  // The conductor must cover every phase fed to root() downstream: tuple
  // coefficients here, raw braid coefficients and basis-matrix phases in
  // oracle_braid_check.  All of those are integer combinations of cocycle
  // values and single-label lambdas, so the lcm of those denominators
  // suffices (a sum's denominator divides the lcm of its parts', but a
  // single lambda's need not divide a cancelling sum's).
  std::int64_t m = s.omega().denominator_lcm();
  for (const MonomialYD* fac : s.factors())
    for (int gg = 0; gg < g.order(); ++gg)
      for (int x = 0; x < fac->size(); ++x) m = std::lcm(m, fac->lambda(gg, x).den);
  std::vector<int> digits(s.n());
  for (int gg = 0; gg < g.order(); ++gg)
    for (int t = 0; t < d; ++t) {
      s.decode(s.graded_id(t), digits);
      Phase q = s.tuple_lambda(gg, digits);
      int target = s.graded_index_of(s.act_on_id(gg, s.graded_id(t)));
      if (target < 0) throw InternalError("action left the grade-e span");
      phases[gg][t] = q;
      targets[gg][t] = target;
      m = std::lcm(m, q.den);
    }

  AveragingProjector out{CycloField(static_cast<int>(m)), d, {}};
  const CycloField& f = out.field;
  out.p.assign(d, std::vector<CycloField::Elt>(d, f.zero()));
  mpq_class inv_order(1, g.order());
  inv_order.canonicalize();
  for (int gg = 0; gg < g.order(); ++gg)
    for (int t = 0; t < d; ++t)
      f.add_to(out.p[targets[gg][t]][t], f.scaled(f.root(phases[gg][t]), inv_order));
  return out;
}

int brute_force_dimension(const TupleSpace& s) {
  AveragingProjector proj = averaging_projector(s);
  return proj.field.rank(proj.p);
}

int brute_force_dimension(const MonomialYD& m, int n) {
  if (n < 1) throw ValidationError("tuple length must be >= 1");
  TupleSpace s(std::vector<const MonomialYD*>(n, &m), kOracleMaxTuples);
  return brute_force_dimension(s);
}

CheckReport oracle_braid_check(const TupleSpace& s, const BraidRep& rep) {
  AveragingProjector proj = averaging_projector(s);
  const CycloField& f = proj.field;
  const int d = proj.dim;

  // Dense copy for rank (rank() destroys its input).
  {
    auto rows = proj.p;
    int r = f.rank(rows);
    if (r != rep.dim)
      return CheckReport::fail("projector rank " + std::to_string(r) +
                               " differs from computed dimension " +
                               std::to_string(rep.dim));
  }

  const OrbitTable& ot = s.orbit_table();
  std::vector<int> digits(s.n());
  for (int i = 1; i < rep.n; ++i) {
    // Full-span sigma_i as a monomial matrix: column t -> row sigma'_i(t)
    // with the raw braid coefficient (no transporter).
    std::vector<int> row_of(d);
    std::vector<Phase> coeff(d);
    for (int t = 0; t < d; ++t) {
      s.decode(s.graded_id(t), digits);
      std::vector<int> moved = sigma_tuple(s.factors(), i, digits);
      int target = s.graded_index_of(s.encode(moved));
      if (target < 0) return CheckReport::fail("sigma left the grade-e span");
      row_of[t] = target;
      coeff[t] = braid_coefficient(s.factors(), i, digits);
    }

    // Commutation S_i P = P S_i, exploiting monomiality of S_i:
    //   (S_i P)[r][c] = s_{t} P[t][c]   with t = row_of^{-1}(r)
    //   (P S_i)[r][c] = P[r][row_of(c)] * s_c
    std::vector<int> col_of(d);
    for (int t = 0; t < d; ++t) col_of[row_of[t]] = t;
    for (int r = 0; r < d; ++r) {
      int t = col_of[r];
      CycloField::Elt sr = f.root(coeff[t]);
      for (int c = 0; c < d; ++c) {
        CycloField::Elt lhs = f.mul(sr, proj.p[t][c]);
        CycloField::Elt rhs = f.mul(proj.p[r][row_of[c]], f.root(coeff[c]));
        if (!f.equal(lhs, rhs))
          return CheckReport::fail("sigma_" + std::to_string(i) +
                                   " does not commute with the projector at entry (" +
                                   std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }

    // Compression: S_i (P e_x) must equal zeta^{beta} (P e_y) column by
    // column over the basis representatives.
    const MonomialMatrix& mat = rep.generators[i - 1];
    for (int j = 0; j < rep.dim; ++j) {
      int x = ot.basis[j];
      int y = ot.basis[mat.perm[j]];
      CycloField::Elt phase = f.root(mat.phases[j]);
      for (int r = 0; r < d; ++r) {
        // (S_i P e_x)[r] = s_t P[t][x] with t = col_of[r]
        CycloField::Elt lhs = f.mul(f.root(coeff[col_of[r]]), proj.p[col_of[r]][x]);
        CycloField::Elt rhs = f.mul(phase, proj.p[r][y]);
        if (!f.equal(lhs, rhs))
          return CheckReport::fail(
              "compressed sigma_" + std::to_string(i) + " disagrees with the basis matrix at basis column " +
              std::to_string(j) + ", span row " + std::to_string(r));
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace gbbraid
