#include "twochar/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twochar/error.hpp"

namespace twochar {

QZVector act(Elem g, std::span<const QZ> v, const GSet &s) {
  if (v.size() != s.size())
    throw ValidationError("vector length " + std::to_string(v.size()) +
                          " does not match G-set size " + std::to_string(s.size()));
  QZVector out(v.size());
  // (g.v)_{g.j} = v_j
  for (Point j = 0; j < s.size(); ++j)
    out[s.act(g, j)] = v[j];
  return out;
}

// ------------------------------------------------------------- cochains

Cochain1::Cochain1(GSetPtr s)
    : gset_(std::move(s)), n_(gset_->size()), values_(gset_->group()->order() * n_) {}

Cochain1 Cochain1::operator+(const Cochain1 &o) const {
  if (!(*gset_ == *o.gset_))
    throw ValidationError("adding 1-cochains over different G-sets");
  Cochain1 out(gset_);
  for (std::size_t k = 0; k < values_.size(); ++k)
    out.values_[k] = values_[k] + o.values_[k];
  return out;
}

Cochain1 Cochain1::operator-() const {
  Cochain1 out(gset_);
  for (std::size_t k = 0; k < values_.size(); ++k)
    out.values_[k] = -values_[k];
  return out;
}

bool Cochain1::operator==(const Cochain1 &o) const {
  return *gset_ == *o.gset_ && values_ == o.values_;
}

bool Cochain1::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const QZ &q) { return q.is_zero(); });
}

Cochain2::Cochain2(GSetPtr s)
    : gset_(std::move(s)), order_(gset_->group()->order()), n_(gset_->size()),
      values_(order_ * order_ * n_) {}

Cochain2 Cochain2::operator+(const Cochain2 &o) const {
  if (!(*gset_ == *o.gset_))
    throw ValidationError("adding 2-cochains over different G-sets");
  Cochain2 out(gset_);
  for (std::size_t k = 0; k < values_.size(); ++k)
    out.values_[k] = values_[k] + o.values_[k];
  return out;
}

Cochain2 Cochain2::operator-(const Cochain2 &o) const {
  if (!(*gset_ == *o.gset_))
    throw ValidationError("subtracting 2-cochains over different G-sets");
  Cochain2 out(gset_);
  for (std::size_t k = 0; k < values_.size(); ++k)
    out.values_[k] = values_[k] - o.values_[k];
  return out;
}

Cochain2 Cochain2::operator*(std::int64_t k) const {
  Cochain2 out(gset_);
  for (std::size_t j = 0; j < values_.size(); ++j)
    out.values_[j] = values_[j] * k;
  return out;
}

bool Cochain2::operator==(const Cochain2 &o) const {
  return *gset_ == *o.gset_ && values_ == o.values_;
}

bool Cochain2::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const QZ &q) { return q.is_zero(); });
}

std::int64_t Cochain2::denominator_lcm() const {
  std::int64_t l = 1;
  for (const auto &q : values_)
    l = std::lcm(l, q.den());
  return l;
}

// ----------------------------------------------------------- coboundaries

Cochain2 delta1(const Cochain1 &b) {
  const GSet &s = *b.gset();
  const PermGroup &g = *s.group();
  Cochain2 out(b.gset());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      auto moved = act(x, b.at(y), s);
      Elem xy = g.mul(x, y);
      for (Point i = 0; i < s.size(); ++i)
        out.at(x, y, i) = moved[i] - b.at(xy, i) + b.at(x, i);
    }
  return out;
}

std::optional<CocycleFailure> cocycle_failure(const Cochain2 &c) {
  const GSet &s = *c.gset();
  const PermGroup &g = *s.group();
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x) {
    Elem xinv = g.inv(x);
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem xy = g.mul(x, y), yz = g.mul(y, z);
        for (Point i = 0; i < s.size(); ++i) {
          QZ d = c.at(y, z, s.act(xinv, i)) - c.at(xy, z, i) + c.at(x, yz, i) - c.at(x, y, i);
          if (!d.is_zero())
            return CocycleFailure{x, y, z, i};
        }
      }
  }
  return std::nullopt;
}

void require_cocycle(const Cochain2 &c) {
  if (auto f = cocycle_failure(c))
    throw CocycleError("cocycle condition fails at (g,h,k) = (" + std::to_string(f->g) + "," +
                       std::to_string(f->h) + "," + std::to_string(f->k) + "), component " +
                       std::to_string(f->component));
}

namespace {

// Rows (g,h,i) of delta1 for g in `firsts`, columns (g,i).
IntMatrix coboundary_rows(const GSet &s, const std::vector<Elem> &firsts) {
  const PermGroup &g = *s.group();
  const std::size_t n = g.order(), m = s.size();
  IntMatrix a(firsts.size() * n * m, n * m);
  auto col = [&](Elem x, Point i) { return std::size_t(x) * m + i; };
  for (std::size_t r = 0; r < firsts.size(); ++r) {
    Elem x = firsts[r], xinv = g.inv(x);
    for (Elem y = 0; y < n; ++y)
      for (Point i = 0; i < m; ++i) {
        std::size_t row = (r * n + y) * m + i;
        a(row, col(y, s.act(xinv, i))) += 1;
        a(row, col(g.mul(x, y), i)) -= 1;
        a(row, col(x, i)) += 1;
      }
  }
  return a;
}

// The identity followed by the generators. A cocycle vanishing on (g, h)
// for these g and every h vanishes everywhere: c(1,.) = 0 and
// c(sg, h) = s.c(g, h) + c(s, gh) - c(s, g).
std::vector<Elem> solver_firsts(const PermGroup &g) {
  std::vector<Elem> out{0};
  for (Elem e : g.generators())
    if (e != 0 && std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(e);
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t k = 1; k < out.size(); ++k) {
      Elem y = g.mul(out[k], queue[q]);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  if (queue.size() != g.order()) {
    out.resize(1);
    for (Elem e = 1; e < g.order(); ++e)
      out.push_back(e);
  }
  return out;
}

} // namespace

IntMatrix coboundary_matrix(const GSet &s) {
  std::vector<Elem> all(s.group()->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return coboundary_rows(s, all);
}

CoboundarySolver::CoboundarySolver(GSetPtr s)
    : gset_(std::move(s)), firsts_(solver_firsts(*gset_->group())),
      smith_(coboundary_rows(*gset_, firsts_)) {}

std::optional<Cochain1> CoboundarySolver::preimage(const Cochain2 &target) const {
  if (!(*target.gset() == *gset_))
    throw ValidationError("cochain lives on a different G-set than the solver");
  std::vector<Rational> rhs;
  require_cocycle(target);
  const std::size_t n = gset_->group()->order(), m = gset_->size();
  rhs.reserve(firsts_.size() * n * m);
  for (Elem x : firsts_)
    for (Elem y = 0; y < n; ++y)
      for (Point i = 0; i < m; ++i)
        rhs.push_back(target.at(x, y, i).to_rational());
  auto sol = divisible_preimage(smith_, rhs);
  if (!sol)
    return std::nullopt;
  Cochain1 b(gset_);
  for (Elem x = 0; x < n; ++x)
    for (Point i = 0; i < m; ++i)
      b.at(x, i) = QZ::from_rational((*sol)[std::size_t(x) * m + i]);
  if (!(delta1(b) == target))
    throw std::logic_error("coboundary witness failed verification");
  return b;
}

std::optional<Cochain1> are_cohomologous(const Cochain2 &c1, const Cochain2 &c2,
                                         const CoboundarySolver &solver) {
  if (!(*c1.gset() == *c2.gset()))
    throw ValidationError("cocycles live on different G-sets");
  require_cocycle(c1);
  require_cocycle(c2);
  return solver.preimage(c2 - c1);
}

std::optional<Cochain1> are_cohomologous(const Cochain2 &c1, const Cochain2 &c2) {
  if (!(*c1.gset() == *c2.gset()))
    throw ValidationError("cocycles live on different G-sets");
  require_cocycle(c1);
  require_cocycle(c2);
  if (c1 == c2)
    return Cochain1(c1.gset());
  return CoboundarySolver(c1.gset()).preimage(c2 - c1);
}

std::pair<Cochain2, Cochain1> normalize_cocycle(const Cochain2 &c) {
  require_cocycle(c);
  // For a cocycle c(1,g) = c(1,1) and c(g,1) = g.c(1,1), so the constant
  // 1-cochain -c(1,1) clears both.
  const GSet &s = *c.gset();
  Cochain1 b(c.gset());
  for (Elem x = 0; x < s.group()->order(); ++x)
    for (Point i = 0; i < s.size(); ++i)
      b.at(x, i) = -c.at(0, 0, i);
  Cochain2 out = c + delta1(b);
  for (Elem x = 0; x < s.group()->order(); ++x)
    for (Point i = 0; i < s.size(); ++i)
      if (!out.at(0, x, i).is_zero() || !out.at(x, 0, i).is_zero())
        throw std::logic_error("normalization left a nonzero value at an identity argument");
  return {std::move(out), std::move(b)};
}

// ---------------------------------------------------------------- H^2

std::size_t H2Group::order() const {
  std::size_t o = 1;
  for (auto d : divisors)
    o *= static_cast<std::size_t>(d);
  return o;
}

H2Group h2_compute(const GSetPtr &sp, std::optional<std::int64_t> modulus,
                   std::size_t row_cap) {
  const GSet &s = *sp;
  const PermGroup &g = *s.group();
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const std::int64_t k = modulus.value_or(n);
  if (k < 1)
    throw ValidationError("modulus must be at least 1");
  H2Group out;
  out.modulus = k;
  if (n == 1 || s.size() == 0)
    return out;

  // Normalized cochains: arguments range over non-identity elements only.
  const std::size_t nn = static_cast<std::size_t>(n - 1), m = s.size();
  const std::size_t rows = nn * nn * nn * m;
  if (rows > row_cap)
    throw ResourceError("coboundary system has " + std::to_string(rows) +
                        " rows, above the cap of " + std::to_string(row_cap));
  auto col = [&](Elem a, Elem b, Point i) {
    return static_cast<std::uint32_t>(((std::size_t(a) - 1) * nn + (b - 1)) * m + i);
  };
  std::vector<SparseRow> system;
  system.reserve(rows);
  for (Elem x = 1; x < g.order(); ++x) {
    Elem xinv = g.inv(x);
    for (Elem y = 1; y < g.order(); ++y)
      for (Elem z = 1; z < g.order(); ++z) {
        Elem xy = g.mul(x, y), yz = g.mul(y, z);
        for (Point i = 0; i < m; ++i) {
          SparseRow r;
          r.emplace_back(col(y, z, s.act(xinv, i)), 1);
          if (xy != 0)
            r.emplace_back(col(xy, z, i), -1);
          if (yz != 0)
            r.emplace_back(col(x, yz, i), 1);
          r.emplace_back(col(x, y, i), -1);
          system.push_back(std::move(r));
        }
      }
  }

  // H^2(G; (Q/Z)^S) is the torsion of coker(delta2) on integer cochains. Its
  // exponent divides |G|, so a Smith form over Z/|G|^2 recovers every
  // torsion divisor and tells them apart from the free part.
  const std::int64_t big = n * n;
  auto smith = modular_smith(system, nn * nn * m, big);
  for (std::size_t f = 0; f < smith.divisors.size(); ++f) {
    std::int64_t e = smith.divisors[f];
    if (n % e != 0)
      throw std::logic_error("torsion divisor " + std::to_string(e) + " does not divide |G|");
    std::int64_t ek = std::gcd(e, k);
    if (ek == 1)
      continue;
    // V e_f / e generates Z/e; its (e/ek)-multiple generates the ek-torsion.
    Cochain2 rep(sp);
    const auto &v = smith.v_columns[f];
    for (Elem a = 1; a < g.order(); ++a)
      for (Elem b = 1; b < g.order(); ++b)
        for (Point i = 0; i < m; ++i)
          rep.at(a, b, i) = QZ(v[col(a, b, i)] % ek, ek);
    if (!is_cocycle(rep))
      throw std::logic_error("H^2 representative is not a cocycle");
    out.divisors.push_back(ek);
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

ShapiroReport shapiro_compare(const Subgroup &h, std::size_t row_cap) {
  auto sub = std::make_shared<const PermGroup>(h.as_group());
  auto point = make_gset(GSet::trivial(sub, 1));
  auto cosets = make_gset(GSet::coset_space(h));
  ShapiroReport out;
  out.subgroup_divisors = h2_compute(point, std::nullopt, row_cap).divisors;
  // Same modulus on both sides: |G| also covers the exponent of H^2(H).
  out.induced_divisors = h2_compute(cosets, std::nullopt, row_cap).divisors;
  out.agree = out.subgroup_divisors == out.induced_divisors;
  return out;
}

// --------------------------------------------------- relabel / restrict

Cochain2 permute_components(const Cochain2 &c, const Perm &f, GSetPtr target) {
  const GSet &s = *c.gset();
  if (f.degree() != s.size() || target->size() != s.size())
    throw ValidationError("component permutation has the wrong degree");
  Cochain2 out(std::move(target));
  const std::size_t n = s.group()->order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Point j = 0; j < s.size(); ++j)
        out.at(x, y, f(j)) = c.at(x, y, j);
  return out;
}

Cochain2 restrict_components(const Cochain2 &c, const std::vector<Point> &subset,
                             GSetPtr target) {
  if (target->size() != subset.size())
    throw ValidationError("restriction target has the wrong size");
  Cochain2 out(std::move(target));
  const std::size_t n = c.group_order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (std::size_t k = 0; k < subset.size(); ++k)
        out.at(x, y, static_cast<Point>(k)) = c.at(x, y, subset[k]);
  return out;
}

Cochain1 restrict_components(const Cochain1 &b, const std::vector<Point> &subset,
                             GSetPtr target) {
  if (target->size() != subset.size())
    throw ValidationError("restriction target has the wrong size");
  Cochain1 out(std::move(target));
  const std::size_t n = b.gset()->group()->order();
  for (Elem x = 0; x < n; ++x)
    for (std::size_t k = 0; k < subset.size(); ++k)
      out.at(x, static_cast<Point>(k)) = b.at(x, subset[k]);
  return out;
}

} // namespace twochar
