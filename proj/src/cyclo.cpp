#include "twochar/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "twochar/error.hpp"

namespace twochar {

namespace {

// Exact quotient of a by the monic polynomial b; the remainder must vanish.
IntPoly divide_exact(IntPoly a, const IntPoly &b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t t = a[i];
    q[i - db] = t;
    if (t == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      a[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0)
      throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

// Reduce p in place modulo x^k - 1 and then modulo the monic phi.
std::vector<std::int64_t> reduce(std::vector<std::int64_t> p, std::int64_t k, const IntPoly &phi) {
  std::vector<std::int64_t> folded(static_cast<std::size_t>(k), 0);
  for (std::size_t j = 0; j < p.size(); ++j)
    folded[j % static_cast<std::size_t>(k)] += p[j];
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > d;) {
    std::int64_t t = folded[i];
    if (t == 0)
      continue;
    for (std::size_t j = 0; j <= d; ++j)
      folded[i - d + j] -= t * phi[j];
  }
  folded.resize(d);
  return folded;
}

} // namespace

const IntPoly &cyclotomic_polynomial(std::int64_t k) {
  if (k < 1)
    throw ValidationError("cyclotomic order must be positive");
  static std::map<std::int64_t, IntPoly> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(k); it != cache.end())
    return it->second;
  IntPoly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(k)] = 1;
  for (std::int64_t d = 1; d < k; ++d)
    if (k % d == 0)
      p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return cache.emplace(k, std::move(p)).first->second;
}

Cyclo::Cyclo(std::int64_t order) : order_(order) {
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

Cyclo Cyclo::from_powers(std::int64_t order, const std::vector<std::int64_t> &powers) {
  Cyclo out(order);
  out.coeffs_ = reduce(powers, order, cyclotomic_polynomial(order));
  return out;
}

Cyclo Cyclo::make(const std::vector<QZ> &terms) {
  std::int64_t k = 1;
  for (const auto &q : terms)
    k = std::lcm(k, q.den());
  std::vector<std::int64_t> powers(static_cast<std::size_t>(k), 0);
  for (const auto &q : terms)
    powers[static_cast<std::size_t>(q.num() * (k / q.den()))] += 1;
  return from_powers(k, powers);
}

Cyclo Cyclo::from_int(std::int64_t v, std::int64_t order) {
  Cyclo out(order);
  out.coeffs_[0] = v;
  return out;
}

Cyclo Cyclo::embed(std::int64_t k) const {
  if (k % order_ != 0)
    throw ValidationError("cannot embed Z[zeta_" + std::to_string(order_) + "] into Z[zeta_" +
                          std::to_string(k) + "]");
  if (k == order_)
    return *this;
  const std::int64_t scale = k / order_;
  std::vector<std::int64_t> powers(static_cast<std::size_t>(k), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    powers[j * static_cast<std::size_t>(scale)] = coeffs_[j];
  return from_powers(k, powers);
}

std::optional<std::int64_t> Cyclo::as_int() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0)
      return std::nullopt;
  return coeffs_[0];
}

bool Cyclo::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

Cyclo Cyclo::operator+(const Cyclo &o) const {
  const std::int64_t k = std::lcm(order_, o.order_);
  Cyclo a = embed(k), b = o.embed(k);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
    a.coeffs_[j] += b.coeffs_[j];
  return a;
}

Cyclo Cyclo::operator-(const Cyclo &o) const { return *this + o * -1; }

Cyclo Cyclo::operator*(std::int64_t k) const {
  Cyclo out = *this;
  for (auto &c : out.coeffs_)
    c *= k;
  return out;
}

Cyclo Cyclo::operator*(const Cyclo &o) const {
  const std::int64_t k = std::lcm(order_, o.order_);
  Cyclo a = embed(k), b = o.embed(k);
  std::vector<std::int64_t> prod(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != 0)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return from_powers(k, prod);
}

bool Cyclo::operator==(const Cyclo &o) const {
  if (order_ == o.order_)
    return coeffs_ == o.coeffs_;
  const std::int64_t k = std::lcm(order_, o.order_);
  return embed(k).coeffs_ == o.embed(k).coeffs_;
}

std::string Cyclo::to_string() const {
  if (auto v = as_int())
    return std::to_string(*v);
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    std::int64_t c = coeffs_[j];
    if (c == 0)
      continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::int64_t a = c < 0 ? -c : c;
    if (j == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1)
      out += std::to_string(a) + "*";
    out += "z" + std::to_string(order_);
    if (j != 1)
      out += "^" + std::to_string(j);
  }
  return out;
}

} // namespace twochar
