#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twochar {

using Point = std::uint32_t;
// Dense index into PermGroup::elements(); index 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 2048;

// A bijection of {0..d-1}. Composition applies the right factor first:
// (p * q)(x) = p(q(x)).
class Perm {
public:
  Perm() = default;
  // Throws ValidationError unless `images` is a bijection of {0..size-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // Parses cycle notation such as "(0 1 2)(3 4)", "(0,1,2)" or "(012)".
  // Inside a cycle, points are separated by commas or whitespace; a cycle
  // written as a bare run of digits takes one point per digit.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  // Disjoint cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  auto operator<=>(const Perm &) const = default;
  bool operator==(const Perm &) const = default;

private:
  std::vector<Point> images_;
};

// A finite group given by full enumeration of its elements as permutations.
// Immutable once built.
class PermGroup {
public:
  // Breadth-first closure from the identity; each dequeued element x is
  // extended by gen * x for every generator in the given order.
  static PermGroup from_generators(const std::vector<Perm> &gens,
                                   std::size_t degree,
                                   std::size_t order_cap = kDefaultOrderCap);

  // Builds a group from an explicit element list whose first entry is the
  // identity. Throws ValidationError if the list is not closed.
  static PermGroup from_elements(std::vector<Perm> elements,
                                 std::vector<Elem> generators = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm> &elements() const { return elements_; }
  const Perm &element(Elem g) const { return elements_[g]; }
  const std::vector<Elem> &generators() const { return generators_; }

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  // s g s^-1
  Elem conjugate(Elem s, Elem g) const { return mul(mul(s, g), inv(s)); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  std::size_t element_order(Elem g) const;

  std::optional<Elem> find(const Perm &p) const;
  // Conjugacy classes in order of least member; each class sorted.
  std::vector<std::vector<Elem>> conjugacy_classes() const;

  // Name in the named-group grammar ("symmetric:3", "cyclic:2*klein4"),
  // empty for groups built from explicit generators.
  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Same degree and same enumerated element list.
  bool same_as(const PermGroup &other) const;

private:
  void build_tables();

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Elem> generators_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::pair<std::vector<Point>, Elem>> lookup_; // sorted by images
  std::string name_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

// Parses "cyclic:n", "symmetric:n", "dihedral:n", "klein4", and products
// "A*B" (acting on the disjoint union of the factors' points).
PermGroup named_group(std::string_view spec,
                      std::size_t order_cap = kDefaultOrderCap);

class Subgroup {
public:
  // Throws ValidationError unless `members` is a subgroup of `ambient`.
  Subgroup(GroupPtr ambient, std::vector<Elem> members);

  static Subgroup whole(GroupPtr ambient);
  static Subgroup trivial(GroupPtr ambient);
  static Subgroup generated_by(GroupPtr ambient, const std::vector<Elem> &gens);

  const GroupPtr &ambient() const { return ambient_; }
  const std::vector<Elem> &members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem g) const { return mask_[g] != 0; }
  // Position of an ambient element inside members(), if contained.
  std::optional<Elem> local_index(Elem g) const;

  // The subgroup as a standalone PermGroup. Local element i is the ambient
  // element members()[i].
  PermGroup as_group() const;

  // s H s^-1
  Subgroup conjugate_by(Elem s) const;
  bool operator==(const Subgroup &other) const { return members_ == other.members_; }

private:
  GroupPtr ambient_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

// Left coset representatives r_1 = 1, r_2, ... of H in G.
struct CosetReps {
  std::vector<Elem> reps;
  std::vector<std::size_t> coset_of; // element index -> position in reps
  std::size_t index() const { return reps.size(); }
};

// Representatives chosen greedily by least uncovered element index.
CosetReps left_coset_reps(const PermGroup &g, const Subgroup &h);
// Validates that `reps` is a left transversal of `h` and fills coset_of.
CosetReps coset_reps_from_list(const PermGroup &g, const Subgroup &h,
                               const std::vector<Elem> &reps);

using ElemPair = std::pair<Elem, Elem>;

std::vector<ElemPair> commuting_pairs(const PermGroup &g);

struct PairClass {
  ElemPair representative; // least pair in lexicographic order
  std::vector<ElemPair> members;
};

// Orbits of s.(g,h) = (sgs^-1, shs^-1) on commuting pairs, ordered by
// representative.
std::vector<PairClass> simultaneous_pair_classes(const PermGroup &g);

// Every subgroup of g, ordered by (order, member list). Throws
// ResourceError if more than `cap` subgroups turn up.
std::vector<Subgroup> all_subgroups(const GroupPtr &g, std::size_t cap = 4096);
// One subgroup per conjugacy class (the first in all_subgroups order).
std::vector<Subgroup> subgroup_class_reps(const GroupPtr &g,
                                          std::size_t cap = 4096);
bool are_conjugate(const Subgroup &a, const Subgroup &b);

} // namespace twochar
