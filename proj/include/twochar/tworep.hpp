#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twochar/cohomology.hpp"

namespace twochar {

// A 2-representation of G in 2-vector spaces: the permutation action on the
// n basis objects and a 2-cocycle with values in (Q/Z)^n.
class TwoRep {
public:
  // Throws ValidationError if c is over another G-set, CocycleError if c is
  // not a cocycle.
  TwoRep(GSetPtr s, Cochain2 c);
  // zero cocycle
  explicit TwoRep(GSetPtr s);

  const GSetPtr &gset() const { return gset_; }
  const GroupPtr &group() const { return gset_->group(); }
  const Cochain2 &cocycle() const { return cocycle_; }
  std::size_t dim() const { return gset_->size(); }

private:
  GSetPtr gset_;
  Cochain2 cocycle_;
};

// rho' = f rho f^-1 and delta b = c' - f.c
struct EquivalenceWitness {
  Perm f;
  Cochain1 b;
};

TwoRep direct_sum(const TwoRep &a, const TwoRep &b);
// Component (i, i') carries c_i + c'_{i'}.
TwoRep tensor(const TwoRep &a, const TwoRep &b);

// Induction along the transversal `reps` of h. r_h must be over
// h.as_group(). Point i*dim(r_h) + s of the result is (r_i, s).
TwoRep induce(const Subgroup &h, const TwoRep &r_h, const CosetReps &reps);
TwoRep induce(const Subgroup &h, const TwoRep &r_h);

inline constexpr std::size_t kDefaultEquivalenceCap = 200000;

// Searches G-set isomorphisms orbit by orbit. Throws ResourceError once
// more than `cap` (orbit, orbit, base image) candidates have been tested.
std::optional<EquivalenceWitness> are_equivalent(const TwoRep &a, const TwoRep &b,
                                                 std::size_t cap = kDefaultEquivalenceCap);

// Checks a witness against both representations.
bool verify_witness(const TwoRep &a, const TwoRep &b, const EquivalenceWitness &w);

struct InducedFactor {
  Subgroup subgroup; // stabilizer of the orbit's base point
  TwoRep point_rep;  // one-point rep of subgroup.as_group()
};

// One factor per orbit, in orbit order.
std::vector<InducedFactor> decompose(const TwoRep &r);

} // namespace twochar
