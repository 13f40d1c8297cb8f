#ifndef GBBRAID_LAGRANGIAN_HPP
#define GBBRAID_LAGRANGIAN_HPP

#include <vector>

#include "gbbraid/cocycle.hpp"
#include "gbbraid/coset.hpp"
#include "gbbraid/group.hpp"
#include "gbbraid/monomial.hpp"

namespace gbbraid {

// The monomial module attached to a gapped-boundary datum (H <= G, gamma)
// with delta(gamma) = omega|_H.  Basis labels are the pairs (r, h) with r a
// minimal coset representative and h in H, indexed as r_pos * |H| + h_pos.
//
//   grade  |(r,h)|  = r h r^{-1}
//   action g.(r,h)  = (g . r, ^{kappa(g,r)} h)
//   coefficient
//     lambda(g; r,h) = omega((gr)^{-1}, g^{-1}; ^r h)
//                    + omega(kappa(g,r), (gr)^{-1}; ^{gr} h)
//                    + eps(kappa(g,r), h)
// where the omega(.,.;.) are the derived pair 2-cocycles of the 3-cocycle.
class LagrangianData {
 public:
  LagrangianData(const FiniteGroup& g, const ThreeCocycle& omega, const Subgroup& h,
                 const TwoCochain& gamma);

  const FiniteGroup& group() const { return *group_; }
  const ThreeCocycle& omega() const { return *omega_; }
  const Subgroup& subgroup() const { return h_; }
  const TwoCochain& gamma() const { return gamma_; }
  const CosetData& cosets() const { return cosets_; }
  const MonomialYD& module() const { return module_; }

  int num_labels() const { return module_.size(); }
  int label_of(int rpos, int hpos) const { return rpos * cosets_.subgroup_size() + hpos; }
  int rpos_of(int label) const { return label / cosets_.subgroup_size(); }
  int hpos_of(int label) const { return label % cosets_.subgroup_size(); }
  int label_rep(int label) const { return cosets_.rep(rpos_of(label)); }
  int label_h(int label) const { return cosets_.h_elem(hpos_of(label)); }

 private:
  const FiniteGroup* group_;
  const ThreeCocycle* omega_;
  Subgroup h_;
  TwoCochain gamma_;
  CosetData cosets_;
  MonomialYD module_;
};

// Validates ambient consistency, re-checks delta(gamma) = omega|_H, and
// builds the label crossed set and the full coefficient table.
LagrangianData lagrangian_new(const FiniteGroup& g, const ThreeCocycle& omega,
                              const Subgroup& h, const TwoCochain& gamma);

// Coefficient lookup on the eager table.
Phase lambda_label(const LagrangianData& l, int g, int label);

// For H normal and omega with trivial values, the relabelled module with
//   grade  |b_{r,h}|  = h
//   action g.b_{r,h}  = eps(kappa(g,r), ^{r^{-1}} h) b_{g.r, ^g h}.
// `relabel[b_label]` is the original label it corresponds to,
// b_{r,h} -> (r, ^{r^{-1}} h); the map is a grade-preserving G-set bijection.
struct DecoupledBasis {
  MonomialYD module;
  std::vector<int> relabel;
};
DecoupledBasis decoupled_basis(const LagrangianData& l);

}  // namespace gbbraid

#endif
