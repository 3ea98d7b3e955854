#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twochar/gset.hpp"
#include "twochar/qz.hpp"
#include "twochar/zlinalg.hpp"

namespace twochar {

using GSetPtr = std::shared_ptr<const GSet>;
using QZVector = std::vector<QZ>;

template <class... Args> GSetPtr make_gset(Args &&...args) {
  return std::make_shared<const GSet>(std::forward<Args>(args)...);
}

// g.v with (g.v)_i = v_{g^-1 . i}.
QZVector act(Elem g, std::span<const QZ> v, const GSet &s);

// b : G -> (Q/Z)^S, stored element-major.
class Cochain1 {
public:
  explicit Cochain1(GSetPtr s);

  const GSetPtr &gset() const { return gset_; }
  QZ &at(Elem g, Point i) { return values_[std::size_t(g) * n_ + i]; }
  const QZ &at(Elem g, Point i) const { return values_[std::size_t(g) * n_ + i]; }
  std::span<const QZ> at(Elem g) const { return {values_.data() + std::size_t(g) * n_, n_}; }

  Cochain1 operator+(const Cochain1 &o) const;
  Cochain1 operator-() const;
  bool operator==(const Cochain1 &o) const;
  bool is_zero() const;

private:
  GSetPtr gset_;
  std::size_t n_;
  std::vector<QZ> values_;
};

// c : G x G -> (Q/Z)^S, stored (g, h, i) row-major.
class Cochain2 {
public:
  explicit Cochain2(GSetPtr s);

  const GSetPtr &gset() const { return gset_; }
  std::size_t group_order() const { return order_; }
  QZ &at(Elem g, Elem h, Point i) { return values_[(std::size_t(g) * order_ + h) * n_ + i]; }
  const QZ &at(Elem g, Elem h, Point i) const {
    return values_[(std::size_t(g) * order_ + h) * n_ + i];
  }
  std::span<const QZ> at(Elem g, Elem h) const {
    return {values_.data() + (std::size_t(g) * order_ + h) * n_, n_};
  }
  const std::vector<QZ> &values() const { return values_; }

  Cochain2 operator+(const Cochain2 &o) const;
  Cochain2 operator-(const Cochain2 &o) const;
  Cochain2 operator*(std::int64_t k) const;
  bool operator==(const Cochain2 &o) const;
  bool is_zero() const;
  // lcm of all value denominators
  std::int64_t denominator_lcm() const;

private:
  GSetPtr gset_;
  std::size_t order_, n_;
  std::vector<QZ> values_;
};

// (delta b)(g,h) = g.b(h) - b(gh) + b(g)
Cochain2 delta1(const Cochain1 &b);

struct CocycleFailure {
  Elem g, h, k;
  Point component;
};

// nullopt when delta c vanishes; otherwise the least failing (g,h,k,i).
std::optional<CocycleFailure> cocycle_failure(const Cochain2 &c);
inline bool is_cocycle(const Cochain2 &c) { return !cocycle_failure(c).has_value(); }
// Throws CocycleError naming the first failing triple.
void require_cocycle(const Cochain2 &c);

// Exact preimage solver for delta1 over the divisible coefficients
// (Q/Z)^S. Holds the Smith form of the coboundary equations of one G-set
// so that repeated queries reuse it; only the rows (g,h,i) with g the
// identity or a generator are kept, which suffices for cocycle targets.
class CoboundarySolver {
public:
  explicit CoboundarySolver(GSetPtr s);

  const GSetPtr &gset() const { return gset_; }
  // b with delta1(b) = target, verified before return; nullopt if none.
  // Throws CocycleError unless target is a cocycle.
  std::optional<Cochain1> preimage(const Cochain2 &target) const;
  const SmithForm &smith() const { return smith_; }

private:
  GSetPtr gset_;
  std::vector<Elem> firsts_;
  SmithForm smith_;
};

// Integer matrix of delta1: rows (g,h,i), columns (g,i).
IntMatrix coboundary_matrix(const GSet &s);

// b with delta1(b) = c2 - c1, or nullopt. Both inputs must be cocycles on
// equal G-sets.
std::optional<Cochain1> are_cohomologous(const Cochain2 &c1, const Cochain2 &c2);
std::optional<Cochain1> are_cohomologous(const Cochain2 &c1, const Cochain2 &c2,
                                         const CoboundarySolver &solver);

// (c', b) with c' = c + delta1(b) and c'(1,g) = c'(g,1) = 0.
std::pair<Cochain2, Cochain1> normalize_cocycle(const Cochain2 &c);

inline constexpr std::size_t kDefaultCohomologyRowCap = 250000;

struct H2Group {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> divisors;    // nontrivial cyclic factors, d_1 | d_2 | ...
  std::vector<Cochain2> representatives; // one cocycle generating each factor
  std::size_t order() const;
};

// The classes of H^2(G; (Q/Z)^S) represented by (1/K)Z/Z-valued cocycles;
// K defaults to |G|, which gives the whole group. Throws ResourceError when
// the normalized coboundary system has more than `row_cap` rows.
H2Group h2_compute(const GSetPtr &s, std::optional<std::int64_t> modulus = std::nullopt,
                   std::size_t row_cap = kDefaultCohomologyRowCap);

struct ShapiroReport {
  bool agree = false;
  std::vector<std::int64_t> subgroup_divisors; // H^2(H; Q/Z)
  std::vector<std::int64_t> induced_divisors;  // H^2(G; (Q/Z)^{G/H})
};

ShapiroReport shapiro_compare(const Subgroup &h,
                              std::size_t row_cap = kDefaultCohomologyRowCap);

// (f.c)_i = c_{f^-1(i)}, as a cochain over `target` (normally transport of
// c's G-set along f).
Cochain2 permute_components(const Cochain2 &c, const Perm &f, GSetPtr target);
// Components restricted to a G-stable subset; subset[k] becomes point k of
// `target`.
Cochain2 restrict_components(const Cochain2 &c, const std::vector<Point> &subset,
                             GSetPtr target);
Cochain1 restrict_components(const Cochain1 &b, const std::vector<Point> &subset,
                             GSetPtr target);

} // namespace twochar
