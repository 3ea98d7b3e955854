// Independent reference computations used by the unit tests and the
// acceptance binary. Everything here is brute force on purpose.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "twochar/zlinalg.hpp"

namespace oracle {

using namespace twochar;

// ------------------------------------------------------------ integers

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long lo, long hi, std::mt19937 &rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      a(i, j) = dist(rng);
  return a;
}

// Laplace expansion along the first row.
inline BigInt laplace_det(const std::vector<std::vector<BigInt>> &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return m[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0)
      continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j)
          row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> &out,
                    std::vector<std::size_t> &cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Determinantal divisors: D_k = gcd of all k x k minors; the invariant
// factors are D_k / D_{k-1}. Returns the nonzero invariant factors.
inline std::vector<BigInt> invariant_factors_by_minors(const IntMatrix &a) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, rs, cur);
    subsets(a.cols(), k, cs, cur);
    BigInt g = 0;
    for (const auto &r : rs)
      for (const auto &c : cs) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            m[i][j] = a(r[i], c[j]);
        BigInt d = laplace_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0)
      break;
    out.push_back(BigInt(g / prev));
    prev = g;
  }
  return out;
}

// Every x in (Z/k)^cols with A x = v mod k, by enumeration.
inline std::vector<std::vector<long>> all_solutions_mod(const IntMatrix &a,
                                                        const std::vector<BigInt> &v, long k) {
  std::vector<std::vector<long>> out;
  std::vector<long> x(a.cols(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == a.cols()) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt s = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
          s += a(i, c) * x[c];
        s -= v[i];
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
        if (r != 0)
          return;
      }
      out.push_back(x);
      return;
    }
    for (long t = 0; t < k; ++t) {
      x[j] = t;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

// Some b in ((1/m) Z / Z)^cols with A b = d mod Z^rows, by enumeration.
inline std::optional<std::vector<Rational>> preimage_by_search(const IntMatrix &a,
                                                               const std::vector<Rational> &d,
                                                               long m) {
  std::vector<long> x(a.cols(), 0);
  std::optional<std::vector<Rational>> found;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (found)
      return;
    if (j == a.cols()) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
          s += Rational(a(i, c) * x[c], m);
        s -= d[i];
        s.canonicalize();
        if (s.get_den() != 1)
          return;
      }
      std::vector<Rational> b;
      for (long t : x)
        b.emplace_back(t, m);
      for (auto &q : b)
        q.canonicalize();
      found = b;
      return;
    }
    for (long t = 0; t < m; ++t) {
      x[j] = t;
      rec(j + 1);
    }
  };
  rec(0);
  return found;
}

struct SuiteResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Smith form properties on `count` random matrices.
inline SuiteResult snf_property_suite(std::size_t count, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = random_matrix(r, c, -9, 9, rng);
    // sprinkle some rank deficiency
    if (t % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j)
        a(r - 1, j) = a(0, j) * 2;
    auto snf = smith_normal_form(a);
    std::ostringstream tag;
    tag << "matrix " << t << " (" << r << "x" << c << "): ";
    ++res.checked;
    if (!(snf.u * a * snf.v == snf.d))
      res.failures.push_back(tag.str() + "U A V != D");
    BigInt du = abs(snf.u.determinant()), dv = abs(snf.v.determinant());
    if (du != 1 || dv != 1)
      res.failures.push_back(tag.str() + "U or V not unimodular");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && snf.d(i, j) != 0)
          res.failures.push_back(tag.str() + "D not diagonal");
    for (std::size_t i = 0; i + 1 < snf.divisors.size(); ++i) {
      const BigInt &x = snf.divisors[i], &y = snf.divisors[i + 1];
      if (x < 0 || (x == 0 && y != 0) || (x != 0 && y % x != 0))
        res.failures.push_back(tag.str() + "divisor chain broken");
    }
    auto minors = invariant_factors_by_minors(a);
    std::vector<BigInt> nonzero;
    for (const auto &d : snf.divisors)
      if (d != 0)
        nonzero.push_back(d);
    if (nonzero != minors || snf.rank != minors.size())
      res.failures.push_back(tag.str() + "divisors disagree with determinantal divisors");
  }
  return res;
}

// solve_mod and divisible_preimage against enumeration, on instances whose
// search space is at most 2^16.
inline SuiteResult solver_exhaustive_suite(std::size_t count, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_int_distribution<long> modulus(2, 12), small(-4, 4);
  std::size_t t = 0;
  while (res.checked < count) {
    ++t;
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = random_matrix(r, c, -4, 4, rng);
    std::ostringstream tag;
    tag << "instance " << t << ": ";

    long k = modulus(rng);
    long space = 1;
    for (std::size_t j = 0; j < c; ++j)
      space *= k;
    if (space <= 65536) {
      std::vector<BigInt> v(r);
      // half the time pick a right-hand side in the image
      if (t % 2 == 0) {
        std::vector<BigInt> x(c);
        for (auto &e : x)
          e = small(rng);
        v = a * x;
      } else {
        for (auto &e : v)
          e = small(rng);
      }
      auto all = all_solutions_mod(a, v, k);
      auto got = solve_mod(a, v, BigInt(k));
      if (got.has_value() != !all.empty())
        res.failures.push_back(tag.str() + "solve_mod existence disagrees with enumeration");
      if (got) {
        std::vector<long> as_long;
        for (const auto &e : *got) {
          if (e < 0 || e >= k)
            res.failures.push_back(tag.str() + "solve_mod entry not reduced");
          as_long.push_back(e.get_si());
        }
        if (std::find(all.begin(), all.end(), as_long) == all.end())
          res.failures.push_back(tag.str() + "solve_mod returned a non-solution");
      }
    }

    // divisible preimage with denominators dividing l
    long l = 1 + static_cast<long>(t % 3);
    std::vector<Rational> d(r);
    if (t % 2 == 0) {
      std::vector<Rational> b(c);
      for (auto &e : b)
        e = Rational(small(rng), l + 1);
      for (std::size_t i = 0; i < r; ++i) {
        d[i] = 0;
        for (std::size_t j = 0; j < c; ++j)
          d[i] += Rational(a(i, j)) * b[j];
        d[i].canonicalize();
      }
    } else {
      for (auto &e : d) {
        e = Rational(small(rng), l);
        e.canonicalize();
      }
    }
    long lcm_den = 1;
    for (const auto &e : d)
      lcm_den = std::lcm(lcm_den, e.get_den().get_si());
    auto snf = smith_normal_form(a);
    long top = 1;
    for (const auto &e : snf.divisors)
      if (e != 0)
        top = std::lcm(top, e.get_si());
    long m = lcm_den * top;
    long search = 1;
    for (std::size_t j = 0; j < c && search <= 65536; ++j)
      search *= m;
    if (search > 65536)
      continue;
    ++res.checked;
    auto got = divisible_preimage(a, d);
    auto brute = preimage_by_search(a, d, m);
    if (got.has_value() != brute.has_value())
      res.failures.push_back(tag.str() + "divisible_preimage existence disagrees with search");
    if (got) {
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j)
          s += Rational(a(i, j)) * (*got)[j];
        s -= d[i];
        s.canonicalize();
        if (s.get_den() != 1)
          res.failures.push_back(tag.str() + "divisible_preimage returned a non-solution");
      }
      for (const auto &e : *got)
        if (e < 0 || e >= 1)
          res.failures.push_back(tag.str() + "divisible_preimage entry not in [0,1)");
    }
  }
  return res;
}

// ------------------------------------------------------------ cohomology

// |H^2(G; (1/K)Z/Z)| for the trivial one-point module, counted as
// |normalized cocycles mod K| / |coboundaries landing in (1/K)Z/Z|.
// Cocycles are enumerated by backtracking, coboundaries over
// b : G -> (1/(K N))Z/Z with b(1) = 0.
inline std::size_t brute_force_h2_order(const PermGroup &g, long k) {
  const std::size_t n = g.order();
  if (n == 1)
    return 1;
  // c(x,y) for x,y != 1, values 0..k-1 meaning v/k
  std::vector<long> c(n * n, 0);
  auto idx = [&](Elem x, Elem y) { return std::size_t(x) * n + y; };
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      cells.emplace_back(x, y);
  std::vector<char> set(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    set[idx(0, x)] = set[idx(x, 0)] = 1;
  auto value = [&](Elem x, Elem y) { return c[idx(x, y)]; };
  // check all triples whose four cells are assigned
  auto consistent = [&]() {
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y)
        for (Elem z = 1; z < n; ++z) {
          Elem xy = g.mul(x, y), yz = g.mul(y, z);
          if (!set[idx(y, z)] || !set[idx(xy, z)] || !set[idx(x, yz)] || !set[idx(x, y)])
            continue;
          long d = value(y, z) - value(xy, z) + value(x, yz) - value(x, y);
          if (((d % k) + k) % k != 0)
            return false;
        }
    return true;
  };
  std::size_t cocycles = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cells.size()) {
      ++cocycles;
      return;
    }
    auto [x, y] = cells[pos];
    set[idx(x, y)] = 1;
    for (long v = 0; v < k; ++v) {
      c[idx(x, y)] = v;
      if (consistent())
        rec(pos + 1);
    }
    set[idx(x, y)] = 0;
    c[idx(x, y)] = 0;
  };
  rec(0);

  // coboundaries: (db)(x,y) = b(y) - b(xy) + b(x) with values in (1/(kN))Z
  const long fine = k * static_cast<long>(n);
  std::set<std::vector<long>> boundaries;
  std::vector<long> b(n, 0);
  std::function<void(Elem)> walk = [&](Elem x) {
    if (x == n) {
      std::vector<long> db;
      for (Elem u = 1; u < n; ++u)
        for (Elem v = 1; v < n; ++v) {
          long val = ((b[v] - b[g.mul(u, v)] + b[u]) % fine + fine) % fine;
          if (val % static_cast<long>(n) != 0)
            return; // not in (1/k)Z/Z
          db.push_back(val / static_cast<long>(n));
        }
      boundaries.insert(db);
      return;
    }
    for (long v = 0; v < fine; ++v) {
      b[x] = v;
      walk(x + 1);
    }
  };
  walk(1);
  return cocycles / boundaries.size();
}

// ------------------------------------------------------------ cyclotomics

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t> &a,
                                          const std::vector<std::int64_t> &b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// exact division by a monic polynomial
inline std::vector<std::int64_t> poly_div(std::vector<std::int64_t> a,
                                          const std::vector<std::int64_t> &b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    q[i - db] = a[i];
    for (std::size_t j = 0; j <= db; ++j)
      a[i - db + j] -= q[i - db] * b[j];
  }
  return q;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      sign = -sign;
    }
  return n > 1 ? -sign : sign;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
inline std::vector<std::int64_t> cyclotomic_by_mobius(std::int64_t n) {
  std::vector<std::int64_t> num{1}, den{1};
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0)
      continue;
    std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    int mu = mobius(n / d);
    if (mu == 1)
      num = poly_mul(num, f);
    else if (mu == -1)
      den = poly_mul(den, f);
  }
  // den is monic up to sign; normalize
  if (den.back() < 0)
    for (auto &x : den)
      x = -x;
  auto q = poly_div(num, den);
  if (q.back() < 0)
    for (auto &x : q)
      x = -x;
  return q;
}

// ------------------------------------------------------------ 2-reps

// Equivalence by trying every permutation of the points (small n only).
inline bool equivalent_by_all_permutations(const TwoRep &a, const TwoRep &b) {
  if (a.dim() != b.dim())
    return false;
  std::vector<Point> im(a.dim());
  std::iota(im.begin(), im.end(), Point{0});
  CoboundarySolver solver(b.gset());
  do {
    Perm f(im);
    if (!(transport(*a.gset(), f) == *b.gset()))
      continue;
    if (are_cohomologous(permute_components(a.cocycle(), f, b.gset()), b.cocycle(), solver))
      return true;
  } while (std::next_permutation(im.begin(), im.end()));
  return false;
}

// chi(g,h) for a zero cocycle: points fixed by both.
inline std::int64_t common_fixed_points(const GSet &s, Elem g, Elem h) {
  std::int64_t n = 0;
  for (Point i = 0; i < s.size(); ++i)
    n += s.act(g, i) == i && s.act(h, i) == i;
  return n;
}

} // namespace oracle
