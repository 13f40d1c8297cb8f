#ifndef GBBRAID_COSET_HPP
#define GBBRAID_COSET_HPP

#include <vector>

#include "gbbraid/errors.hpp"
#include "gbbraid/group.hpp"

namespace gbbraid {

// Left-coset machinery for H <= G.  Every g factors uniquely as
// g = rep(gH) * h; the chosen representative of each coset is its minimal
// element, so rep(H) = e and reps are listed in ascending order.
//
// G acts on the representative set R by g . r = rep(grH), with the cocycle
// kappa(g, r) in H defined by  g * r = (g . r) * kappa(g, r).  It satisfies
// kappa(g1 g2, r) = kappa(g1, g2 . r) * kappa(g2, r).
class CosetData {
 public:
  CosetData(const FiniteGroup& g, const Subgroup& h);

  const FiniteGroup& group() const { return *group_; }
  int subgroup_size() const { return static_cast<int>(h_elems_.size()); }
  int h_elem(int i) const { return h_elems_[i]; }
  const std::vector<int>& h_elements() const { return h_elems_; }
  int h_local(int g) const;  // position in h_elements, or ElementNotInSubgroup

  int num_cosets() const { return static_cast<int>(reps_.size()); }
  int rep(int rpos) const { return reps_[rpos]; }
  const std::vector<int>& reps() const { return reps_; }

  // Factorization g = rep * h.
  int rep_pos_of(int g) const { return rep_pos_[g]; }
  int h_part_of(int g) const { return h_part_[g]; }  // H-local index

  // Action on representative positions and the kappa cocycle (H-local index).
  int act(int g, int rpos) const { return rep_pos_[group_->mult(g, reps_[rpos])]; }
  int kappa_local(int g, int rpos) const { return h_part_[group_->mult(g, reps_[rpos])]; }
  int kappa(int g, int rpos) const { return h_elems_[kappa_local(g, rpos)]; }

 private:
  const FiniteGroup* group_;
  std::vector<int> h_elems_;   // sorted H, e first
  std::vector<int> h_pos_;     // G-index -> H-local or -1
  std::vector<int> reps_;      // ascending minimal coset representatives
  std::vector<int> rep_pos_;   // g -> index of rep(gH) in reps_
  std::vector<int> h_part_;    // g -> H-local index of rep(gH)^{-1} g
};

// Exhaustively re-checks the factorization bijection and the kappa identity
// kappa(g1 g2, r) = kappa(g1, g2 . r) * kappa(g2, r).
CheckReport kappa_identity_check(const CosetData& c);

}  // namespace gbbraid

#endif
