#include "twochar/character.hpp"

#include <string>

#include "twochar/error.hpp"

namespace twochar {

namespace {

void require_commuting(const PermGroup &g, Elem x, Elem y) {
  if (!g.commute(x, y))
    throw DomainError("elements " + std::to_string(x) + " and " + std::to_string(y) +
                      " do not commute");
}

// exponent of the scalar attached to component i
QZ psi_factor(const Cochain2 &c, const PermGroup &g, Elem x, Elem y, Point i) {
  Elem xinv = g.inv(x);
  return -c.at(x, xinv, i) - c.at(0, 0, i) + c.at(y, xinv, i) + c.at(x, g.mul(y, xinv), i);
}

} // namespace

Cyclo two_character(const TwoRep &r, Elem g, Elem h) {
  const PermGroup &grp = *r.group();
  require_commuting(grp, g, h);
  std::vector<QZ> terms;
  for (Point i = 0; i < r.dim(); ++i)
    if (r.gset()->act(g, i) == i && r.gset()->act(h, i) == i)
      terms.push_back(psi_factor(r.cocycle(), grp, g, h, i));
  return Cyclo::make(terms);
}

PsiMap psi_map(const TwoRep &r, Elem g, Elem h) {
  const PermGroup &grp = *r.group();
  require_commuting(grp, g, h);
  PsiMap out;
  out.basis = fixed_points(*r.gset(), h);
  for (Point j : out.basis) {
    Point t = r.gset()->act(g, j);
    out.targets.push_back(t);
    out.scalars.push_back(psi_factor(r.cocycle(), grp, g, h, t));
  }
  return out;
}

Cyclo character_via_psi(const TwoRep &r, Elem g, Elem h) {
  const PermGroup &grp = *r.group();
  require_commuting(grp, g, h);
  const std::size_t n = r.dim();
  using Mat = std::vector<std::vector<int>>;
  auto perm_matrix = [&](Elem x) {
    Mat p(n, std::vector<int>(n, 0));
    for (Point j = 0; j < n; ++j)
      p[r.gset()->act(x, j)][j] = 1;
    return p;
  };
  auto mul = [&](const Mat &a, const Mat &b) {
    Mat c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j)
            c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  const Mat pg = perm_matrix(g), pginv = perm_matrix(grp.inv(g)), ph = perm_matrix(h);

  // Basis of Tr(rho_h): E_jj with (P_h)_jj = 1. The map sends a diagonal
  // matrix A to the scalars times P_g A P_g^-1; its trace collects the
  // E_jj-coefficient of the image of E_jj.
  std::vector<QZ> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (ph[j][j] != 1)
      continue;
    Mat e(n, std::vector<int>(n, 0));
    e[j][j] = 1;
    Mat image = mul(mul(pg, e), pginv);
    for (int k = 0; k < image[j][j]; ++k)
      terms.push_back(psi_factor(r.cocycle(), grp, g, h, static_cast<Point>(j)));
  }
  return Cyclo::make(terms);
}

bool CharacterTable::operator==(const CharacterTable &o) const {
  if (entries.size() != o.entries.size())
    return false;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k].g != o.entries[k].g || entries[k].h != o.entries[k].h ||
        !(entries[k].value == o.entries[k].value))
      return false;
  return true;
}

CharacterTable character_table(const TwoRep &r) {
  CharacterTable t;
  for (const auto &cls : simultaneous_pair_classes(*r.group())) {
    auto [g, h] = cls.representative;
    t.entries.push_back({g, h, two_character(r, g, h)});
  }
  return t;
}

InducedCharacterReport induced_character_check(const Subgroup &h, const TwoRep &r_h,
                                               const CosetReps &reps) {
  const PermGroup &g = *h.ambient();
  TwoRep ind = induce(h, r_h, reps);
  InducedCharacterReport out;
  for (auto [x, y] : commuting_pairs(g)) {
    Cyclo lhs = two_character(ind, x, y) * static_cast<std::int64_t>(h.order());
    Cyclo rhs;
    for (Elem s = 0; s < g.order(); ++s) {
      Elem sinv = g.inv(s);
      auto lx = h.local_index(g.conjugate(sinv, x));
      auto ly = h.local_index(g.conjugate(sinv, y));
      if (lx && ly)
        rhs += two_character(r_h, *lx, *ly);
    }
    if (!(lhs == rhs)) {
      out.holds = false;
      out.g = x;
      out.h = y;
      out.lhs = lhs;
      out.rhs = rhs;
      return out;
    }
  }
  return out;
}

namespace {

void require_square(const DimMatrix &f) {
  for (const auto &row : f)
    if (row.size() != f.size())
      throw ValidationError("dimension matrix is not square");
}

} // namespace

std::size_t trace_dim(const DimMatrix &f) {
  require_square(f);
  std::size_t t = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    t += f[i][i];
  return t;
}

DimMatrix dim_sum(const DimMatrix &f, const DimMatrix &g) {
  require_square(f);
  require_square(g);
  const std::size_t n = f.size(), m = g.size();
  DimMatrix out(n + m, std::vector<std::size_t>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = f[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out[n + i][n + j] = g[i][j];
  return out;
}

DimMatrix dim_tensor(const DimMatrix &f, const DimMatrix &g) {
  require_square(f);
  require_square(g);
  const std::size_t n = f.size(), m = g.size();
  DimMatrix out(n * m, std::vector<std::size_t>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t ii = 0; ii < m; ++ii)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t jj = 0; jj < m; ++jj)
          out[i * m + ii][j * m + jj] = f[i][j] * g[ii][jj];
  return out;
}

TwoRep orbit_type_rep(const GroupPtr &g, const std::vector<Subgroup> &classes,
                      const std::vector<std::size_t> &types) {
  TwoRep out(make_gset(GSet::empty(g)));
  for (auto t : types) {
    if (t >= classes.size())
      throw ValidationError("orbit type index out of range");
    out = direct_sum(out, TwoRep(make_gset(GSet::coset_space(classes[t]))));
  }
  return out;
}

std::vector<Collision> collision_search(const GroupPtr &g, std::size_t n, std::size_t cap) {
  const auto classes = subgroup_class_reps(g);
  std::vector<std::size_t> sizes;
  for (const auto &h : classes)
    sizes.push_back(g->order() / h.order());

  // multisets as nondecreasing type lists
  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> current;
  auto walk = [&](auto &&self, std::size_t first, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (multisets.size() >= cap)
        throw ResourceError("collision search exceeded " + std::to_string(cap) + " multisets");
      multisets.push_back(current);
      return;
    }
    for (std::size_t t = first; t < classes.size(); ++t)
      if (sizes[t] <= remaining) {
        current.push_back(t);
        self(self, t, remaining - sizes[t]);
        current.pop_back();
      }
  };
  walk(walk, 0, n);

  std::vector<TwoRep> reps;
  std::vector<CharacterTable> tables;
  for (const auto &m : multisets) {
    reps.push_back(orbit_type_rep(g, classes, m));
    tables.push_back(character_table(reps.back()));
  }
  std::vector<Collision> out;
  for (std::size_t i = 0; i < multisets.size(); ++i)
    for (std::size_t j = i + 1; j < multisets.size(); ++j)
      if (tables[i] == tables[j] && !are_equivalent(reps[i], reps[j]))
        out.push_back(Collision{multisets[i], multisets[j], reps[i], reps[j]});
  return out;
}

} // namespace twochar

namespace twochar {

Sigma3Pair sigma3_collision_pair() {
  auto g = std::make_shared<const PermGroup>(named_group("symmetric:3"));
  auto transposition = Subgroup::generated_by(g, {*g->find(Perm::from_cycles("(0 1)", 3))});
  auto rotation = Subgroup::generated_by(g, {*g->find(Perm::from_cycles("(0 1 2)", 3))});
  GSet rho = gset_sum(gset_sum(GSet::regular(g), GSet::trivial(g, 1)), GSet::trivial(g, 1));
  GSet two = gset_sum(GSet::coset_space(transposition), GSet::coset_space(transposition));
  GSet rho_prime = gset_sum(two, GSet::coset_space(rotation));
  return {TwoRep(make_gset(std::move(rho))), TwoRep(make_gset(std::move(rho_prime)))};
}

} // namespace twochar
