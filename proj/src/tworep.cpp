#include "twochar/tworep.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "twochar/error.hpp"

namespace twochar {

TwoRep::TwoRep(GSetPtr s, Cochain2 c) : gset_(std::move(s)), cocycle_(std::move(c)) {
  if (!(*cocycle_.gset() == *gset_))
    throw ValidationError("cocycle is defined over a different G-set");
  require_cocycle(cocycle_);
}

TwoRep::TwoRep(GSetPtr s) : gset_(s), cocycle_(std::move(s)) {}

namespace {

void require_same_group(const TwoRep &a, const TwoRep &b) {
  if (!a.group()->same_as(*b.group()))
    throw ValidationError("representations are over different groups");
}

} // namespace

TwoRep direct_sum(const TwoRep &a, const TwoRep &b) {
  require_same_group(a, b);
  auto s = make_gset(gset_sum(*a.gset(), *b.gset()));
  Cochain2 c(s);
  const std::size_t n = a.group()->order(), da = a.dim();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (Point i = 0; i < da; ++i)
        c.at(x, y, i) = a.cocycle().at(x, y, i);
      for (Point i = 0; i < b.dim(); ++i)
        c.at(x, y, static_cast<Point>(da + i)) = b.cocycle().at(x, y, i);
    }
  return TwoRep(std::move(s), std::move(c));
}

TwoRep tensor(const TwoRep &a, const TwoRep &b) {
  require_same_group(a, b);
  auto s = make_gset(gset_product(*a.gset(), *b.gset()));
  Cochain2 c(s);
  const std::size_t n = a.group()->order(), db = b.dim();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Point i = 0; i < a.dim(); ++i)
        for (Point j = 0; j < db; ++j)
          c.at(x, y, static_cast<Point>(i * db + j)) =
              a.cocycle().at(x, y, i) + b.cocycle().at(x, y, j);
  return TwoRep(std::move(s), std::move(c));
}

TwoRep induce(const Subgroup &h, const TwoRep &r_h, const CosetReps &reps) {
  const PermGroup &g = *h.ambient();
  auto induced = induced_gset(h, *r_h.gset(), reps);
  auto checked = coset_reps_from_list(g, h, reps.reps);
  auto s = make_gset(std::move(induced.gset));
  const std::size_t m = checked.index(), n = r_h.dim();

  // (ind c)_{(r_i, s)}(g1, g2) = c_s(h1, h2) with
  //   g1 r_j = r_i h1  and  g2 r_k = r_j h2.
  Cochain2 c(s);
  for (std::size_t i = 0; i < m; ++i) {
    Elem ri = checked.reps[i];
    for (Elem g1 = 0; g1 < g.order(); ++g1) {
      std::size_t j = checked.coset_of[g.mul(g.inv(g1), ri)];
      Elem rj = checked.reps[j];
      Elem h1 = *h.local_index(g.mul(g.inv(ri), g.mul(g1, rj)));
      for (Elem g2 = 0; g2 < g.order(); ++g2) {
        std::size_t k = checked.coset_of[g.mul(g.inv(g2), rj)];
        Elem h2 = *h.local_index(g.mul(g.inv(rj), g.mul(g2, checked.reps[k])));
        for (Point p = 0; p < n; ++p)
          c.at(g1, g2, static_cast<Point>(i * n + p)) = r_h.cocycle().at(h1, h2, p);
      }
    }
  }
  if (auto f = cocycle_failure(c))
    throw std::logic_error("induced cochain is not a cocycle at (" + std::to_string(f->g) + "," +
                           std::to_string(f->h) + "," + std::to_string(f->k) + ")");
  return TwoRep(std::move(s), std::move(c));
}

TwoRep induce(const Subgroup &h, const TwoRep &r_h) {
  return induce(h, r_h, left_coset_reps(*h.ambient(), h));
}

bool verify_witness(const TwoRep &a, const TwoRep &b, const EquivalenceWitness &w) {
  if (!a.group()->same_as(*b.group()) || a.dim() != b.dim() || w.f.degree() != a.dim())
    return false;
  if (!(transport(*a.gset(), w.f) == *b.gset()))
    return false;
  if (!(*w.b.gset() == *b.gset()))
    return false;
  Cochain2 fc = permute_components(a.cocycle(), w.f, b.gset());
  return delta1(w.b) == b.cocycle() - fc;
}

namespace {

struct OrbitData {
  std::vector<Point> points;
  GSetPtr gset;   // the orbit as a G-set on 0..|orbit|-1
  Cochain2 cocycle;
  std::vector<Point> local; // global point -> local index (only for members)
};

std::vector<OrbitData> split_orbits(const TwoRep &r, const OrbitDecomposition &dec) {
  std::vector<OrbitData> out;
  for (const auto &o : dec.orbits) {
    auto s = make_gset(restrict_to(*r.gset(), o.points));
    Cochain2 c = restrict_components(r.cocycle(), o.points, s);
    std::vector<Point> local(r.dim(), 0);
    for (std::size_t k = 0; k < o.points.size(); ++k)
      local[o.points[k]] = static_cast<Point>(k);
    out.push_back(OrbitData{o.points, std::move(s), std::move(c), std::move(local)});
  }
  return out;
}

struct OrbitMatch {
  Perm f;     // local bijection, orbit of a -> orbit of b
  Cochain1 b; // over b's orbit
};

} // namespace

std::optional<EquivalenceWitness> are_equivalent(const TwoRep &a, const TwoRep &b,
                                                 std::size_t cap) {
  require_same_group(a, b);
  if (a.dim() != b.dim())
    return std::nullopt;
  const PermGroup &g = *a.group();
  const auto deca = orbits_with_stabilizers(*a.gset());
  const auto decb = orbits_with_stabilizers(*b.gset());
  const std::size_t na = deca.orbits.size();
  if (na != decb.orbits.size())
    return std::nullopt;
  const auto oa = split_orbits(a, deca), ob = split_orbits(b, decb);

  // Stabilizer of every point of b, for the base-image test.
  std::vector<Subgroup> stab_b;
  for (Point p = 0; p < b.dim(); ++p) {
    std::vector<Elem> members;
    for (Elem x = 0; x < g.order(); ++x)
      if (b.gset()->act(x, p) == p)
        members.push_back(x);
    stab_b.emplace_back(b.group(), std::move(members));
  }

  std::vector<std::optional<CoboundarySolver>> solvers(na);
  std::size_t tested = 0;
  std::vector<std::vector<std::optional<OrbitMatch>>> compat(na);
  for (std::size_t i = 0; i < na; ++i) {
    const Orbit &orb_a = deca.orbits[i];
    compat[i].resize(na);
    for (std::size_t j = 0; j < na; ++j) {
      const Orbit &orb_b = decb.orbits[j];
      if (orb_a.points.size() != orb_b.points.size())
        continue;
      // An equivariant f sends the base point to a point with the same
      // stabilizer, and is then determined on the whole orbit.
      for (Point t : orb_b.points) {
        if (!(stab_b[t] == orb_a.stabilizer))
          continue;
        if (++tested > cap)
          throw ResourceError("equivalence search exceeded " + std::to_string(cap) +
                              " candidates");
        const std::size_t size = orb_a.points.size();
        std::vector<Point> images(size, 0);
        for (Elem x = 0; x < g.order(); ++x)
          images[oa[i].local[a.gset()->act(x, orb_a.base)]] =
              ob[j].local[b.gset()->act(x, t)];
        Perm f(images);
        if (!(transport(*oa[i].gset, f) == *ob[j].gset))
          throw std::logic_error("orbit map is not equivariant");
        if (!solvers[j])
          solvers[j].emplace(ob[j].gset);
        Cochain2 fc = permute_components(oa[i].cocycle, f, ob[j].gset);
        if (auto w = are_cohomologous(fc, ob[j].cocycle, *solvers[j])) {
          compat[i][j] = OrbitMatch{std::move(f), std::move(*w)};
          break;
        }
      }
    }
  }

  // Perfect matching between orbit lists by augmenting paths.
  std::vector<std::ptrdiff_t> match_b(na, -1);
  std::function<bool(std::size_t, std::vector<char> &)> augment =
      [&](std::size_t i, std::vector<char> &seen) {
        for (std::size_t j = 0; j < na; ++j) {
          if (!compat[i][j] || seen[j])
            continue;
          seen[j] = 1;
          if (match_b[j] < 0 || augment(static_cast<std::size_t>(match_b[j]), seen)) {
            match_b[j] = static_cast<std::ptrdiff_t>(i);
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<char> seen(na, 0);
    if (!augment(i, seen))
      return std::nullopt;
  }

  std::vector<Point> images(a.dim(), 0);
  Cochain1 bfull(b.gset());
  for (std::size_t j = 0; j < na; ++j) {
    std::size_t i = static_cast<std::size_t>(match_b[j]);
    const OrbitMatch &m = *compat[i][j];
    for (std::size_t k = 0; k < oa[i].points.size(); ++k)
      images[oa[i].points[k]] = ob[j].points[m.f(static_cast<Point>(k))];
    for (Elem x = 0; x < g.order(); ++x)
      for (std::size_t k = 0; k < ob[j].points.size(); ++k)
        bfull.at(x, ob[j].points[k]) = m.b.at(x, static_cast<Point>(k));
  }
  EquivalenceWitness w{Perm(images), std::move(bfull)};
  if (!verify_witness(a, b, w))
    throw std::logic_error("assembled equivalence witness failed verification");
  return w;
}

std::vector<InducedFactor> decompose(const TwoRep &r) {
  std::vector<InducedFactor> out;
  for (const auto &o : orbits_with_stabilizers(*r.gset()).orbits) {
    auto sub = std::make_shared<const PermGroup>(o.stabilizer.as_group());
    auto point = make_gset(GSet::trivial(sub, 1));
    Cochain2 d(point);
    const auto &mem = o.stabilizer.members();
    for (Elem x = 0; x < mem.size(); ++x)
      for (Elem y = 0; y < mem.size(); ++y)
        d.at(x, y, 0) = r.cocycle().at(mem[x], mem[y], o.base);
    out.push_back(InducedFactor{o.stabilizer, TwoRep(point, std::move(d))});
  }
  return out;
}

} // namespace twochar
