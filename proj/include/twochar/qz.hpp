#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twochar {

// An element of Q/Z, standing for the root of unity exp(2 pi i num/den).
// Always reduced: 0 <= num < den, gcd(num, den) = 1, and 0 is 0/1.
class QZ {
public:
  constexpr QZ() = default;
  QZ(std::int64_t num, std::int64_t den);

  // "p/q" or "p"; any integer p is accepted and reduced mod 1.
  static QZ parse(std::string_view text);
  static QZ from_rational(const mpq_class &q);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  mpq_class to_rational() const { return mpq_class(num_, den_); }
  std::string to_string() const;

  QZ operator+(const QZ &o) const;
  QZ operator-(const QZ &o) const;
  QZ operator-() const { return QZ(-num_, den_); }
  QZ operator*(std::int64_t k) const;
  QZ &operator+=(const QZ &o) { return *this = *this + o; }
  QZ &operator-=(const QZ &o) { return *this = *this - o; }

  bool operator==(const QZ &) const = default;
  auto operator<=>(const QZ &) const = default;

private:
  std::int64_t num_ = 0, den_ = 1;
};

} // namespace twochar
