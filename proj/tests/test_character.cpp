#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "twochar/error.hpp"

using namespace twochar;

namespace {

std::complex<double> evaluate(const Cyclo &c) {
  std::complex<double> z = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t j = 0; j < c.coeffs().size(); ++j)
    z += static_cast<double>(c.coeffs()[j]) *
         std::polar(1.0, 2 * pi * static_cast<double>(j) / static_cast<double>(c.order()));
  return z;
}

QZ random_qz(std::mt19937 &rng) {
  static const std::int64_t dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::int64_t d = dens[rng() % 8];
  return QZ(static_cast<std::int64_t>(rng() % d), d);
}

Cyclo random_cyclo(std::mt19937 &rng) {
  std::vector<QZ> terms;
  for (std::size_t k = rng() % 5; k > 0; --k)
    terms.push_back(random_qz(rng));
  return Cyclo::make(terms);
}

Elem find(const GroupPtr &g, const char *cycles) {
  return *g->find(Perm::from_cycles(cycles, g->degree()));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  for (std::int64_t n = 1; n <= 105; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == oracle::cyclotomic_by_mobius(n));
  }
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(Cyclo::make({QZ(0, 1), QZ(0, 1)}).as_int() == 2);
  CHECK(Cyclo::make({QZ(0, 1), QZ(1, 3), QZ(2, 3)}).is_zero());
  CHECK(Cyclo::make({}).as_int() == 0);
  CHECK(Cyclo::make({QZ(1, 2)}).as_int() == -1);
  CHECK(Cyclo::make({QZ(1, 4), QZ(3, 4)}).is_zero());
  CHECK_FALSE(Cyclo::make({QZ(1, 4)}).as_int().has_value());
  CHECK(Cyclo::make({QZ(1, 3)}).embed(12) == Cyclo::make({QZ(4, 12)}));
  CHECK(Cyclo::make({QZ(1, 3)}).embed(12).order() == 12);
  CHECK_THROWS_AS(Cyclo::make({QZ(1, 3)}).embed(8), ValidationError);
  CHECK(Cyclo::make({QZ(1, 8), QZ(1, 3)}).to_string() == "-1 + z24^3 + z24^4");

  std::mt19937 rng(9);
  for (int t = 0; t < 400; ++t) {
    Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
    CHECK(std::abs(evaluate(a + b) - (evaluate(a) + evaluate(b))) < 1e-9);
    CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK((a - a).is_zero());
    bool numerically_equal = std::abs(evaluate(a) - evaluate(b)) < 1e-9;
    CHECK((a == b) == numerically_equal);
    if (auto v = a.as_int())
      CHECK(std::abs(evaluate(a) - std::complex<double>(static_cast<double>(*v), 0)) < 1e-9);
  }
}

TEST_CASE("two-character examples") {
  auto [rho, rho_prime] = sigma3_collision_pair();
  auto g = rho.group();
  Elem r = find(g, "(0 1 2)"), ri = g->inv(r);
  for (const TwoRep *x : {&rho, &rho_prime}) {
    CHECK(two_character(*x, 0, 0).as_int() == 8);
    for (Elem h = 1; h < 6; ++h)
      CHECK(two_character(*x, 0, h).as_int() == 2);
    CHECK(two_character(*x, r, ri).as_int() == 2);
  }
  CHECK_THROWS_AS(two_character(rho, find(g, "(0 1)"), r), DomainError);
  CHECK_THROWS_AS(psi_map(rho, find(g, "(0 1)"), r), DomainError);
  CHECK_THROWS_AS(character_via_psi(rho, find(g, "(0 1)"), r), DomainError);

  auto k4 = corpus::group("klein4");
  auto pt = make_gset(GSet::trivial(k4, 1));
  TwoRep one(pt);
  for (auto [x, y] : commuting_pairs(*k4))
    CHECK(two_character(one, x, y).as_int() == 1);
  // c((a,b),(a',b')) = b a' / 2 with g = (1,0), h = (0,1)
  Elem gx = k4->generators()[0], gy = k4->generators()[1];
  Cochain2 c(pt);
  auto coords = [&](Elem e) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (k4->mul(a ? gx : 0, b ? gy : 0) == e)
          return std::pair<int, int>{a, b};
    return std::pair<int, int>{0, 0};
  };
  for (Elem u = 0; u < 4; ++u)
    for (Elem v = 0; v < 4; ++v)
      c.at(u, v, 0) = QZ(coords(u).second * coords(v).first, 2);
  TwoRep tw(pt, c);
  CHECK(two_character(tw, gx, gy).as_int() == -1);
  CHECK(two_character(tw, gy, gx).as_int() == -1);
  CHECK(two_character(tw, gx, gx).as_int() == 1);
}

TEST_CASE("natural S3 table is the fixed-point count") {
  auto s3 = corpus::group("symmetric:3");
  TwoRep nat(make_gset(GSet::natural(s3)));
  Elem t = find(s3, "(0 1)"), r = find(s3, "(0 1 2)");
  CHECK(two_character(nat, 0, 0).as_int() == 3);
  CHECK(two_character(nat, 0, t).as_int() == 1);
  CHECK(two_character(nat, t, t).as_int() == 1);
  CHECK(two_character(nat, r, r).as_int() == 0);
  CHECK(two_character(nat, r, s3->inv(r)).as_int() == 0);
  auto table = character_table(nat);
  CHECK(table.entries.size() == 8);

  auto c1 = corpus::group("cyclic:1");
  for (std::size_t n : {0u, 1u, 4u}) {
    auto t1 = character_table(TwoRep(make_gset(GSet::trivial(c1, n))));
    REQUIRE(t1.entries.size() == 1);
    CHECK(t1.entries[0].value.as_int() == static_cast<std::int64_t>(n));
  }
}

TEST_CASE("psi map and its trace") {
  std::mt19937 rng(4);
  for (const auto &g : corpus::small_groups())
    for (const auto &r : corpus::reps(g)) {
      TwoRep shifted = corpus::shift(r.rep, corpus::random_cochain1(r.rep.gset(), rng));
      for (auto [x, y] : commuting_pairs(*g)) {
        auto psi = psi_map(shifted, x, y);
        // targets permute the basis
        auto sorted_targets = psi.targets;
        std::sort(sorted_targets.begin(), sorted_targets.end());
        CHECK(sorted_targets == psi.basis);
        std::vector<QZ> diag;
        for (std::size_t k = 0; k < psi.basis.size(); ++k)
          if (psi.targets[k] == psi.basis[k])
            diag.push_back(psi.scalars[k]);
        Cyclo chi = two_character(shifted, x, y);
        CHECK(Cyclo::make(diag) == chi);
        CHECK(character_via_psi(shifted, x, y) == chi);
        if (shifted.cocycle().is_zero())
          CHECK(chi.as_int() == oracle::common_fixed_points(*shifted.gset(), x, y));
      }
    }
}

TEST_CASE("character properties") {
  std::mt19937 rng(15);
  for (const auto &g : corpus::small_groups()) {
    auto reps = corpus::reps(g);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const TwoRep &a = reps[i].rep;
      CAPTURE(reps[i].label);
      // conjugation invariance
      for (auto [x, y] : commuting_pairs(*g)) {
        Cyclo v = two_character(a, x, y);
        for (Elem s = 0; s < g->order(); ++s)
          CHECK(two_character(a, g->conjugate(s, x), g->conjugate(s, y)) == v);
      }
      // coboundary shifts and relabelling leave the table alone
      auto table = character_table(a);
      TwoRep b = corpus::relabel(a, corpus::random_perm(a.dim(), rng));
      b = corpus::shift(b, corpus::random_cochain1(b.gset(), rng));
      CHECK(character_table(b) == table);
      // sums and products
      const TwoRep &c = reps[(i * 7 + 3) % reps.size()].rep;
      if (a.dim() * c.dim() > 24)
        continue;
      TwoRep s = direct_sum(a, c), t = tensor(a, c);
      for (auto [x, y] : commuting_pairs(*g)) {
        CHECK(two_character(s, x, y) == two_character(a, x, y) + two_character(c, x, y));
        CHECK(two_character(t, x, y) == two_character(a, x, y) * two_character(c, x, y));
      }
    }
  }
}

TEST_CASE("induced character identity") {
  auto s3 = corpus::group("symmetric:3");
  auto rot = Subgroup::generated_by(s3, {find(s3, "(0 1 2)")});
  auto rot_g = std::make_shared<const PermGroup>(rot.as_group());
  TwoRep triv_rot(make_gset(GSet::trivial(rot_g, 1)));
  auto rep = induced_character_check(rot, triv_rot, left_coset_reps(*s3, rot));
  CHECK(rep.holds);
  auto ind = induce(rot, triv_rot);
  Elem r = find(s3, "(0 1 2)");
  CHECK(two_character(ind, r, s3->inv(r)).as_int() == 2);

  auto tr = Subgroup::generated_by(s3, {find(s3, "(0 1)")});
  auto tr_g = std::make_shared<const PermGroup>(tr.as_group());
  TwoRep triv_tr(make_gset(GSet::trivial(tr_g, 1)));
  CHECK(two_character(induce(tr, triv_tr), 0, find(s3, "(0 1)")).as_int() == 1);

  for (const auto &g : corpus::small_groups())
    for (const auto &h : all_subgroups(g)) {
      auto hg = std::make_shared<const PermGroup>(h.as_group());
      auto pt = make_gset(GSet::trivial(hg, 1));
      std::vector<TwoRep> ones{TwoRep(pt)};
      for (const auto &c : h2_compute(pt).representatives)
        ones.emplace_back(pt, c);
      for (const auto &one : ones) {
        auto res = induced_character_check(h, one, left_coset_reps(*g, h));
        CHECK(res.holds);
      }
    }
}

TEST_CASE("dimension bookkeeping") {
  DimMatrix id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(trace_dim(id3) == 3);
  CHECK_THROWS_AS(trace_dim(DimMatrix{{1, 2}}), ValidationError);
  std::mt19937 rng(6);
  auto random_dm = [&](std::size_t n) {
    DimMatrix m(n, std::vector<std::size_t>(n));
    for (auto &row : m)
      for (auto &e : row)
        e = rng() % 4;
    return m;
  };
  for (int t = 0; t < 50; ++t) {
    auto f = random_dm(4), g = random_dm(4);
    CHECK(trace_dim(dim_sum(f, g)) == trace_dim(f) + trace_dim(g));
    auto a = random_dm(3), b = random_dm(3);
    auto ab = dim_tensor(a, b);
    std::size_t diag = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t ii = 0; ii < 3; ++ii)
        diag += a[i][i] * b[ii][ii];
    CHECK(trace_dim(ab) == diag);
    CHECK(trace_dim(ab) == trace_dim(a) * trace_dim(b));
  }
}

TEST_CASE("collision search") {
  auto s3 = corpus::group("symmetric:3");
  auto [rho, rho_prime] = sigma3_collision_pair();
  auto found = collision_search(s3, 8);
  bool contains = false;
  for (const auto &c : found) {
    CHECK(character_table(c.left_rep) == character_table(c.right_rep));
    CHECK_FALSE(are_equivalent(c.left_rep, c.right_rep).has_value());
    contains |= are_equivalent(c.left_rep, rho).has_value() &&
                are_equivalent(c.right_rep, rho_prime).has_value();
    contains |= are_equivalent(c.left_rep, rho_prime).has_value() &&
                are_equivalent(c.right_rep, rho).has_value();
  }
  CHECK(contains);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(collision_search(corpus::group("cyclic:2"), n).empty());
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(collision_search(corpus::group("cyclic:1"), n).empty());
  // small S3 dimensions do not collide yet
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(collision_search(s3, n).empty());
  CHECK_THROWS_AS(collision_search(s3, 12, 5), ResourceError);
}
