#include "twochar/gset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twochar/error.hpp"

namespace twochar {

GSet::GSet(GroupPtr group, std::size_t size,
           const std::vector<std::vector<Point>> &action)
    : group_(std::move(group)), size_(size) {
  const auto &g = *group_;
  if (action.size() != g.order())
    throw ValidationError("action table has " + std::to_string(action.size()) +
                          " rows for a group of order " + std::to_string(g.order()));
  action_.resize(g.order() * size_);
  for (Elem x = 0; x < g.order(); ++x) {
    if (action[x].size() != size_)
      throw ValidationError("action row " + std::to_string(x) + " has length " +
                            std::to_string(action[x].size()) + ", expected " +
                            std::to_string(size_));
    std::vector<char> hit(size_, 0);
    for (std::size_t s = 0; s < size_; ++s) {
      Point t = action[x][s];
      if (t >= size_ || hit[t])
        throw ValidationError("action of element " + std::to_string(x) +
                              " is not a bijection of the points");
      hit[t] = 1;
      action_[std::size_t(x) * size_ + s] = t;
    }
  }
  for (std::size_t s = 0; s < size_; ++s)
    if (act(PermGroup::identity(), static_cast<Point>(s)) != s)
      throw ValidationError("identity axiom fails at point " + std::to_string(s));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Point s = 0; s < size_; ++s)
        if (act(a, act(b, s)) != act(g.mul(a, b), s))
          throw ValidationError("compatibility axiom g.(h.s) = (gh).s fails at (g,h,s) = (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(s) + ")");
}

GSet GSet::trivial(GroupPtr group, std::size_t size) {
  GSet out;
  out.size_ = size;
  out.action_.resize(group->order() * size);
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t s = 0; s < size; ++s)
      out.action_[g * size + s] = static_cast<Point>(s);
  out.group_ = std::move(group);
  return out;
}

GSet GSet::regular(GroupPtr group) {
  const auto &g = *group;
  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      table[a][b] = g.mul(a, b);
  return GSet(std::move(group), g.order(), table);
}

GSet GSet::natural(GroupPtr group) {
  const auto &g = *group;
  std::vector<std::vector<Point>> table;
  for (const auto &p : g.elements())
    table.push_back(p.images());
  return GSet(std::move(group), g.degree(), table);
}

GSet GSet::coset_space(const Subgroup &h) {
  const auto &g = *h.ambient();
  auto reps = left_coset_reps(g, h);
  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(reps.index()));
  for (Elem x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < reps.index(); ++j)
      table[x][j] = static_cast<Point>(reps.coset_of[g.mul(x, reps.reps[j])]);
  return GSet(h.ambient(), reps.index(), table);
}

Perm GSet::perm(Elem g) const {
  std::vector<Point> im(action_.begin() + std::ptrdiff_t(g) * std::ptrdiff_t(size_),
                        action_.begin() + std::ptrdiff_t(g + 1) * std::ptrdiff_t(size_));
  return Perm(std::move(im));
}

std::vector<std::vector<Point>> GSet::table() const {
  std::vector<std::vector<Point>> out(group_->order());
  for (Elem g = 0; g < group_->order(); ++g)
    out[g] = perm(g).images();
  return out;
}

bool GSet::operator==(const GSet &other) const {
  return group_->same_as(*other.group_) && size_ == other.size_ &&
         action_ == other.action_;
}

OrbitDecomposition orbits_with_stabilizers(const GSet &s) {
  const auto &g = *s.group();
  OrbitDecomposition out;
  const std::size_t unset = static_cast<std::size_t>(-1);
  out.point_to_orbit.assign(s.size(), unset);
  for (Point base = 0; base < s.size(); ++base) {
    if (out.point_to_orbit[base] != unset)
      continue;
    std::vector<Point> pts;
    std::vector<Elem> stab;
    for (Elem x = 0; x < g.order(); ++x) {
      Point t = s.act(x, base);
      if (t == base)
        stab.push_back(x);
      if (out.point_to_orbit[t] == unset) {
        out.point_to_orbit[t] = out.orbits.size();
        pts.push_back(t);
      }
    }
    std::sort(pts.begin(), pts.end());
    out.orbits.push_back({std::move(pts), base, Subgroup(s.group(), std::move(stab))});
  }
  return out;
}

std::vector<Point> fixed_points(const GSet &s, Elem g) {
  std::vector<Point> out;
  for (Point x = 0; x < s.size(); ++x)
    if (s.act(g, x) == x)
      out.push_back(x);
  return out;
}

InducedGSet induced_gset(const Subgroup &h, const GSet &s_h, const CosetReps &reps) {
  const auto &g = *h.ambient();
  if (s_h.group()->order() != h.order())
    throw ValidationError("H-set is not over a group of order |H|");
  for (Elem i = 0; i < h.order(); ++i)
    if (s_h.group()->element(i) != g.element(h.members()[i]))
      throw ValidationError("H-set group does not match the subgroup's element order");
  auto checked = coset_reps_from_list(g, h, reps.reps);
  const std::size_t m = checked.index(), n = s_h.size();

  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(m * n));
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t j = 0; j < m; ++j) {
      Elem xr = g.mul(x, checked.reps[j]);
      std::size_t i = checked.coset_of[xr];
      Elem hh = g.mul(g.inv(checked.reps[i]), xr); // x r_j = r_i hh
      Elem local = *h.local_index(hh);
      for (Point s = 0; s < n; ++s)
        table[x][j * n + s] = static_cast<Point>(i * n + s_h.act(local, s));
    }
  }
  InducedGSet out{GSet(h.ambient(), m * n, table), {}};
  for (std::size_t i = 0; i < m; ++i)
    for (Point s = 0; s < n; ++s)
      out.labels.emplace_back(i, s);
  return out;
}

namespace {

void require_same_group(const GSet &a, const GSet &b) {
  if (!a.group()->same_as(*b.group()))
    throw ValidationError("G-sets are over different groups");
}

} // namespace

GSet gset_sum(const GSet &a, const GSet &b) {
  require_same_group(a, b);
  const auto &g = *a.group();
  std::vector<std::vector<Point>> table(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    for (Point s = 0; s < a.size(); ++s)
      table[x].push_back(a.act(x, s));
    for (Point s = 0; s < b.size(); ++s)
      table[x].push_back(static_cast<Point>(a.size() + b.act(x, s)));
  }
  return GSet(a.group(), a.size() + b.size(), table);
}

GSet gset_product(const GSet &a, const GSet &b) {
  require_same_group(a, b);
  const auto &g = *a.group();
  const std::size_t nb = b.size();
  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(a.size() * nb));
  for (Elem x = 0; x < g.order(); ++x)
    for (Point i = 0; i < a.size(); ++i)
      for (Point j = 0; j < nb; ++j)
        table[x][i * nb + j] = static_cast<Point>(a.act(x, i) * nb + b.act(x, j));
  return GSet(a.group(), a.size() * nb, table);
}

GSet transport(const GSet &s, const Perm &f) {
  if (f.degree() != s.size())
    throw ValidationError("relabelling has the wrong degree");
  const auto &g = *s.group();
  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(s.size()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Point p = 0; p < s.size(); ++p)
      table[x][f(p)] = f(s.act(x, p));
  return GSet(s.group(), s.size(), table);
}

GSet restrict_to(const GSet &s, const std::vector<Point> &subset) {
  std::vector<std::size_t> pos(s.size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= s.size() || pos[subset[k]] != static_cast<std::size_t>(-1))
      throw ValidationError("restriction subset has repeated or out-of-range points");
    pos[subset[k]] = k;
  }
  const auto &g = *s.group();
  std::vector<std::vector<Point>> table(g.order(), std::vector<Point>(subset.size()));
  for (Elem x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < subset.size(); ++k) {
      std::size_t t = pos[s.act(x, subset[k])];
      if (t == static_cast<std::size_t>(-1))
        throw ValidationError("restriction subset is not G-stable");
      table[x][k] = static_cast<Point>(t);
    }
  return GSet(s.group(), subset.size(), table);
}

} // namespace twochar
