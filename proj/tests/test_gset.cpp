#include <doctest.h>

#include "corpus.hpp"
#include "twochar/error.hpp"

using namespace twochar;

namespace {

std::vector<std::vector<Point>> table_of(const GSet &s) { return s.table(); }

// G-sets are isomorphic iff every subgroup has the same number of fixed
// points in both (table of marks).
bool isomorphic_by_marks(const GSet &a, const GSet &b) {
  if (a.size() != b.size())
    return false;
  for (const auto &h : all_subgroups(a.group())) {
    auto fixed = [&](const GSet &s) {
      std::size_t n = 0;
      for (Point p = 0; p < s.size(); ++p) {
        bool all = true;
        for (Elem x : h.members())
          all &= s.act(x, p) == p;
        n += all;
      }
      return n;
    };
    if (fixed(a) != fixed(b))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("action table validation") {
  auto s3 = corpus::group("symmetric:3");
  CHECK(GSet::trivial(s3, 2).size() == 2);
  auto reg = GSet::regular(s3);
  CHECK(reg.size() == 6);
  auto table = table_of(reg);
  CHECK_NOTHROW(GSet(s3, 6, table));

  auto broken = table;
  broken[1][0] = broken[1][1]; // not a bijection
  CHECK_THROWS_AS(GSet(s3, 6, broken), ValidationError);

  auto not_identity = table;
  std::swap(not_identity[0][0], not_identity[0][1]);
  CHECK_THROWS_AS(GSet(s3, 6, not_identity), ValidationError);

  // a bijection for every element, but not a homomorphism
  auto incompatible = table;
  std::swap(incompatible[1], incompatible[2]);
  try {
    GSet(s3, 6, incompatible);
    FAIL("accepted an incompatible action");
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("(g,h,s)") != std::string::npos);
  }
  auto short_table = table;
  short_table.pop_back();
  CHECK_THROWS_AS(GSet(s3, 6, short_table), ValidationError);
}

TEST_CASE("orbits and stabilizers") {
  for (const auto &g : corpus::groups()) {
    for (const auto &r : corpus::reps(g)) {
      const GSet &s = *r.rep.gset();
      auto dec = orbits_with_stabilizers(s);
      std::vector<int> seen(s.size(), 0);
      for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
        const auto &o = dec.orbits[k];
        CHECK(o.base == o.points.front());
        CHECK(o.points.size() * o.stabilizer.order() == g->order());
        for (Elem x : o.stabilizer.members())
          CHECK(s.act(x, o.base) == o.base);
        for (Point p : o.points) {
          ++seen[p];
          CHECK(dec.point_to_orbit[p] == k);
        }
      }
      for (int c : seen)
        CHECK(c == 1);
    }
  }
}

TEST_CASE("fixed points") {
  auto s3 = corpus::group("symmetric:3");
  auto nat = GSet::natural(s3);
  Elem t = *s3->find(Perm::from_cycles("(0 1)", 3));
  Elem r = *s3->find(Perm::from_cycles("(0 1 2)", 3));
  CHECK(fixed_points(nat, 0).size() == 3);
  CHECK(fixed_points(nat, t) == std::vector<Point>{2});
  CHECK(fixed_points(nat, r).empty());
  CHECK(fixed_points(GSet::regular(s3), t).empty());
}

TEST_CASE("induced G-sets") {
  auto s3 = corpus::group("symmetric:3");
  auto whole = Subgroup::whole(s3);
  auto s3_again = std::make_shared<const PermGroup>(whole.as_group());
  auto nat = GSet::natural(s3_again);
  auto same = induced_gset(whole, nat, left_coset_reps(*s3, whole));
  CHECK(same.gset.table() == GSet::natural(s3).table());

  auto rot = Subgroup::generated_by(s3, {*s3->find(Perm::from_cycles("(0 1 2)", 3))});
  auto rot_g = std::make_shared<const PermGroup>(rot.as_group());
  auto two = induced_gset(rot, GSet::trivial(rot_g, 1), left_coset_reps(*s3, rot));
  CHECK(two.gset.size() == 2);
  CHECK(isomorphic_by_marks(two.gset, GSet::coset_space(rot)));

  auto triv = Subgroup::trivial(s3);
  auto triv_g = std::make_shared<const PermGroup>(triv.as_group());
  auto six = induced_gset(triv, GSet::trivial(triv_g, 1), left_coset_reps(*s3, triv));
  CHECK(isomorphic_by_marks(six.gset, GSet::regular(s3)));
  CHECK(six.labels.size() == 6);
}

TEST_CASE("induction of G-sets matches the table of marks for all subgroups") {
  for (const auto &g : corpus::small_groups()) {
    for (const auto &h : all_subgroups(g)) {
      auto hg = std::make_shared<const PermGroup>(h.as_group());
      for (const auto &k : subgroup_class_reps(hg)) {
        auto ind = induced_gset(h, GSet::coset_space(k), left_coset_reps(*g, h));
        // G x_H H/K = G/K with K viewed inside G
        std::vector<Elem> members;
        for (Elem x : k.members())
          members.push_back(h.members()[x]);
        std::sort(members.begin(), members.end());
        Subgroup kg(g, members);
        CHECK(isomorphic_by_marks(ind.gset, GSet::coset_space(kg)));
      }
    }
  }
}

TEST_CASE("sums, products, transport, restriction") {
  auto d4 = corpus::group("dihedral:4");
  auto a = GSet::natural(d4), b = GSet::regular(d4);
  auto sum = gset_sum(a, b);
  CHECK(sum.size() == 12);
  CHECK(orbits_with_stabilizers(sum).orbits.size() == 2);
  auto prod = gset_product(a, a);
  CHECK(prod.size() == 16);
  for (Elem x = 0; x < d4->order(); ++x)
    for (Point i = 0; i < 4; ++i)
      for (Point j = 0; j < 4; ++j)
        CHECK(prod.act(x, i * 4 + j) == a.act(x, i) * 4 + a.act(x, j));
  // fixed points multiply
  for (Elem x = 0; x < d4->order(); ++x)
    CHECK(fixed_points(prod, x).size() == fixed_points(a, x).size() * fixed_points(a, x).size());

  std::mt19937 rng(11);
  auto f = corpus::random_perm(12, rng);
  auto moved = transport(sum, f);
  for (Elem x = 0; x < d4->order(); ++x)
    for (Point p = 0; p < 12; ++p)
      CHECK(moved.act(x, f(p)) == f(sum.act(x, p)));

  auto back = restrict_to(sum, {4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(back == b);
  CHECK_THROWS_AS(restrict_to(sum, {0, 4}), ValidationError);
  CHECK_THROWS_AS(gset_sum(a, GSet::natural(corpus::group("symmetric:4"))), ValidationError);
  CHECK(gset_sum(a, GSet::empty(d4)) == a);
}
