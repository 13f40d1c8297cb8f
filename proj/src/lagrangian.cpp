#include "gbbraid/lagrangian.hpp"

#include <utility>

#include "gbbraid/errors.hpp"

namespace gbbraid {

namespace {

CrossedGSet make_labels(const FiniteGroup& g, const CosetData& cosets) {
  const int nh = cosets.subgroup_size();
  const int size = cosets.num_cosets() * nh;
  std::vector<int> action(static_cast<size_t>(g.order()) * size);
  std::vector<int> grade(size);
  for (int rpos = 0; rpos < cosets.num_cosets(); ++rpos)
    for (int hpos = 0; hpos < nh; ++hpos) {
      int x = rpos * nh + hpos;
      int r = cosets.rep(rpos), h = cosets.h_elem(hpos);
      grade[x] = g.conj(r, h);
      for (int gg = 0; gg < g.order(); ++gg) {
        int kappa = cosets.kappa(gg, rpos);
        action[static_cast<size_t>(gg) * size + x] =
            cosets.act(gg, rpos) * nh + cosets.h_local(g.conj(kappa, h));
      }
    }
  return CrossedGSet(g, std::move(action), std::move(grade));
}

std::vector<Phase> make_lambda(const FiniteGroup& g, const ThreeCocycle& omega,
                               const TwoCochain& gamma, const CosetData& cosets) {
  const int nh = cosets.subgroup_size();
  const int size = cosets.num_cosets() * nh;
  std::vector<Phase> lambda(static_cast<size_t>(g.order()) * size);
  for (int gg = 0; gg < g.order(); ++gg)
    for (int rpos = 0; rpos < cosets.num_cosets(); ++rpos)
      for (int hpos = 0; hpos < nh; ++hpos) {
        int r = cosets.rep(rpos), h = cosets.h_elem(hpos);
        int gr = g.mult(gg, r);
        int kappa = cosets.kappa(gg, rpos);
        Phase q = omega_pair(omega, g.inv(gr), g.inv(gg), g.conj(r, h)) +
                  omega_pair(omega, kappa, g.inv(gr), g.conj(gr, h)) +
                  epsilon(gamma, kappa, h);
        lambda[static_cast<size_t>(gg) * size + rpos * nh + hpos] = q;
      }
  return lambda;
}

}  // namespace

LagrangianData::LagrangianData(const FiniteGroup& g, const ThreeCocycle& omega,
                               const Subgroup& h, const TwoCochain& gamma)
    : group_(&g),
      omega_(&omega),
      h_(h),
      gamma_(gamma),
      cosets_(g, h_),
      module_(omega, make_labels(g, cosets_), make_lambda(g, omega, gamma_, cosets_)) {
  if (&h.group() != &g)
    throw MixedAmbientData("boundary subgroup belongs to a different group object");
  if (&omega.group() != &g)
    throw MixedAmbientData("3-cocycle belongs to a different group object");
  if (!gamma.subgroup().same_elements(h))
    throw MixedAmbientData("2-cochain is defined on a different subgroup");
}

LagrangianData lagrangian_new(const FiniteGroup& g, const ThreeCocycle& omega,
                              const Subgroup& h, const TwoCochain& gamma) {
  // Re-validate the coboundary condition at the API boundary; it is cheap
  // and guards against hand-built cochains.
  std::vector<Phase> values(static_cast<size_t>(h.size()) * h.size());
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j) values[i * h.size() + j] = gamma.value_local(i, j);
  check_two_cochain(omega, h, values);
  return LagrangianData(g, omega, h, gamma);
}

Phase lambda_label(const LagrangianData& l, int g, int label) {
  if (g < 0 || g >= l.group().order()) throw IndexOutOfRange("group index out of range");
  if (label < 0 || label >= l.num_labels())
    throw IndexOutOfRange("label index out of range");
  return l.module().lambda(g, label);
}

DecoupledBasis decoupled_basis(const LagrangianData& l) {
  const FiniteGroup& g = l.group();
  const Subgroup& h = l.subgroup();
  if (!h.is_normal()) throw SubgroupNotNormal();
  if (!l.omega().is_trivial_values()) throw NontrivialOmega();

  const CosetData& cosets = l.cosets();
  const int nh = cosets.subgroup_size();
  const int size = l.num_labels();
  std::vector<int> action(static_cast<size_t>(g.order()) * size);
  std::vector<int> grade(size);
  std::vector<Phase> lambda(static_cast<size_t>(g.order()) * size);
  std::vector<int> relabel(size);
  for (int rpos = 0; rpos < cosets.num_cosets(); ++rpos)
    for (int hpos = 0; hpos < nh; ++hpos) {
      int x = rpos * nh + hpos;
      int r = cosets.rep(rpos), hh = cosets.h_elem(hpos);
      grade[x] = hh;
      relabel[x] = rpos * nh + cosets.h_local(g.conj(g.inv(r), hh));
      for (int gg = 0; gg < g.order(); ++gg) {
        action[static_cast<size_t>(gg) * size + x] =
            cosets.act(gg, rpos) * nh + cosets.h_local(g.conj(gg, hh));
        lambda[static_cast<size_t>(gg) * size + x] =
            epsilon(l.gamma(), cosets.kappa(gg, rpos), g.conj(g.inv(r), hh));
      }
    }
  MonomialYD module(l.omega(), CrossedGSet(g, std::move(action), std::move(grade)),
                    std::move(lambda));
  return DecoupledBasis{std::move(module), std::move(relabel)};
}

}  // namespace gbbraid
