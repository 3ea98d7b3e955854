#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twochar/cyclo.hpp"
#include "twochar/tworep.hpp"

namespace twochar {

// chi(g,h) = sum over i with g.i = i = h.i of
//   zeta^{ -c_i(g,g^-1) - c_i(1,1) + c_i(h,g^-1) + c_i(g,hg^-1) }.
// Throws DomainError unless gh = hg.
Cyclo two_character(const TwoRep &r, Elem g, Elem h);

// psi_g(h) on the basis {e_i : h.i = i}: e_j -> scalars[k] e_{targets[k]}
// where basis[k] = j.
struct PsiMap {
  std::vector<Point> basis;
  std::vector<Point> targets;
  std::vector<QZ> scalars;
};

PsiMap psi_map(const TwoRep &r, Elem g, Elem h);

// Trace of psi_g(h), computed from the conjugation rho_g (.) rho_{g^-1}
// written as monomial matrices.
Cyclo character_via_psi(const TwoRep &r, Elem g, Elem h);

struct CharacterEntry {
  Elem g, h;
  Cyclo value;
};

// One entry per simultaneous conjugacy class of commuting pairs, ordered as
// simultaneous_pair_classes.
struct CharacterTable {
  std::vector<CharacterEntry> entries;
  bool operator==(const CharacterTable &o) const;
};

CharacterTable character_table(const TwoRep &r);

struct InducedCharacterReport {
  bool holds = true;
  // first failing pair, with both sides of |H| chi_ind(g,h) = sum(...)
  std::optional<Elem> g, h;
  Cyclo lhs, rhs;
};

InducedCharacterReport induced_character_check(const Subgroup &h, const TwoRep &r_h,
                                               const CosetReps &reps);

// Dimension pattern of a 2-matrix.
using DimMatrix = std::vector<std::vector<std::size_t>>;

std::size_t trace_dim(const DimMatrix &f);
DimMatrix dim_sum(const DimMatrix &f, const DimMatrix &g);
// entry ((i,i'),(j,j')) at row i*m + i', column j*m + j'
DimMatrix dim_tensor(const DimMatrix &f, const DimMatrix &g);

struct Collision {
  // orbit types: indices into subgroup_class_reps of the group, with repeats
  std::vector<std::size_t> left, right;
  TwoRep left_rep, right_rep;
};

inline constexpr std::size_t kDefaultCollisionCap = 20000;

// Trivial-cocycle representations of dimension n built from transitive
// G-sets; returns every pair of non-equivalent ones with equal character
// tables. Throws ResourceError past `cap` multisets.
std::vector<Collision> collision_search(const GroupPtr &g, std::size_t n,
                                        std::size_t cap = kDefaultCollisionCap);

// Trivial-cocycle rep on the disjoint union of G/H_k over the listed
// subgroup class indices.
TwoRep orbit_type_rep(const GroupPtr &g, const std::vector<Subgroup> &classes,
                      const std::vector<std::size_t> &types);

} // namespace twochar

namespace twochar {

// The two 8-dimensional trivial-cocycle representations of S3:
// regular + 2 fixed points, and 2 copies of S3/<(0 1)> + S3/<(0 1 2)>.
struct Sigma3Pair {
  TwoRep rho, rho_prime;
};
Sigma3Pair sigma3_collision_pair();

} // namespace twochar
