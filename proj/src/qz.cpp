#include "twochar/qz.hpp"

#include <numeric>

#include "twochar/error.hpp"

namespace twochar {

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den <= 0)
    throw ValidationError("Q/Z denominator must be positive");
  num %= den;
  if (num < 0)
    num += den;
  std::int64_t g = std::gcd(num, den);
  if (num == 0)
    g = den;
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    std::string n(text.substr(0, slash));
    std::int64_t num = std::stoll(n);
    std::int64_t den = 1;
    if (slash != std::string_view::npos)
      den = std::stoll(std::string(text.substr(slash + 1)));
    return QZ(num, den);
  } catch (const std::logic_error &) {
    throw ValidationError("malformed fraction '" + std::string(text) + "'");
  }
}

QZ QZ::from_rational(const mpq_class &q) {
  mpz_class den = q.get_den();
  mpz_class num;
  mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), den.get_mpz_t());
  if (!den.fits_slong_p())
    throw ResourceError("Q/Z denominator exceeds 64 bits");
  return QZ(num.get_si(), den.get_si());
}

std::string QZ::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ QZ::operator+(const QZ &o) const {
  std::int64_t l = std::lcm(den_, o.den_);
  return QZ(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QZ QZ::operator-(const QZ &o) const { return *this + (-o); }

QZ QZ::operator*(std::int64_t k) const {
  __int128 n = static_cast<__int128>(num_) * k;
  n %= den_;
  return QZ(static_cast<std::int64_t>(n), den_);
}

} // namespace twochar
