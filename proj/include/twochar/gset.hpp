#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "twochar/perm_group.hpp"

namespace twochar {

// A finite left G-set {0..size-1}; equivalently a homomorphism G -> Sym(size).
class GSet {
public:
  // action[g][s] = g.s. Validates bijectivity, the identity axiom and
  // compatibility g.(h.s) = (gh).s, naming the first failing triple.
  GSet(GroupPtr group, std::size_t size, const std::vector<std::vector<Point>> &action);

  static GSet trivial(GroupPtr group, std::size_t size);
  // Left multiplication on the element list.
  static GSet regular(GroupPtr group);
  // The permutation action on the group's own degree points.
  static GSet natural(GroupPtr group);
  // G/H with cosets labelled by left_coset_reps order.
  static GSet coset_space(const Subgroup &h);
  static GSet empty(GroupPtr group) { return trivial(std::move(group), 0); }

  const GroupPtr &group() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(Elem g, Point s) const { return action_[std::size_t(g) * size_ + s]; }
  Perm perm(Elem g) const;
  std::vector<std::vector<Point>> table() const;

  bool operator==(const GSet &other) const;

private:
  GSet() = default;
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Point> action_;
};

struct Orbit {
  std::vector<Point> points; // sorted
  Point base;                // least point of the orbit
  Subgroup stabilizer;       // of the base point
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits; // ordered by base point
  std::vector<std::size_t> point_to_orbit;
};

OrbitDecomposition orbits_with_stabilizers(const GSet &s);
std::vector<Point> fixed_points(const GSet &s, Elem g);

struct InducedGSet {
  GSet gset;
  // Induced point p = i*|S_H| + s carries label (rep position i, point s).
  std::vector<std::pair<std::size_t, Point>> labels;
};

// G x_H S_H realized on R x S_H. `s_h` is a G-set over h.as_group() (local
// element i is h.members()[i]). g.(r_j, s) = (r_i, h.s) where g r_j = r_i h.
InducedGSet induced_gset(const Subgroup &h, const GSet &s_h, const CosetReps &reps);

// Disjoint union, left operand's points first.
GSet gset_sum(const GSet &a, const GSet &b);
// Diagonal action on pairs; pair (i, i') is point i*|b| + i'.
GSet gset_product(const GSet &a, const GSet &b);

// The G-set transported along a bijection f: f(s) carries the action of s,
// so the new action is f rho_g f^-1.
GSet transport(const GSet &s, const Perm &f);
// Restriction to a G-stable subset; subset[k] becomes point k.
GSet restrict_to(const GSet &s, const std::vector<Point> &subset);

} // namespace twochar
