#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twochar/qz.hpp"

namespace twochar {

// Integer polynomial, coefficient of x^j at position j.
using IntPoly = std::vector<std::int64_t>;

// Phi_k, computed by dividing x^k - 1 by Phi_d for each proper divisor d.
// Cached per k.
const IntPoly &cyclotomic_polynomial(std::int64_t k);

// An element of Z[zeta_K]. Stored reduced modulo Phi_K, so coeffs has
// length phi(K) and the representation is unique for a fixed K.
class Cyclo {
public:
  Cyclo() : Cyclo(1) {}
  explicit Cyclo(std::int64_t order);

  // sum of exp(2 pi i q) over the terms; K is the lcm of the denominators
  static Cyclo make(const std::vector<QZ> &terms);
  static Cyclo from_int(std::int64_t v, std::int64_t order = 1);
  static Cyclo root(const QZ &q) { return make({q}); }
  // coefficient vector of x^j (any length), reduced mod x^K - 1 and Phi_K
  static Cyclo from_powers(std::int64_t order, const std::vector<std::int64_t> &powers);

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t> &coeffs() const { return coeffs_; }

  // the same value in Z[zeta_k]; k must be a multiple of order()
  Cyclo embed(std::int64_t k) const;
  std::optional<std::int64_t> as_int() const;
  bool is_zero() const;

  Cyclo operator+(const Cyclo &o) const;
  Cyclo operator-(const Cyclo &o) const;
  Cyclo operator*(const Cyclo &o) const;
  Cyclo operator*(std::int64_t k) const;
  Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
  // value equality, comparing inside the lcm order
  bool operator==(const Cyclo &o) const;

  // "3", or "1 + 2*z12^5 - z12^7"
  std::string to_string() const;

private:
  std::int64_t order_;
  std::vector<std::int64_t> coeffs_;
};

} // namespace twochar
