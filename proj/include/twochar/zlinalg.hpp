#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace twochar {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix &rhs) const;
  std::vector<BigInt> operator*(const std::vector<BigInt> &x) const;
  bool operator==(const IntMatrix &other) const = default;
  BigInt determinant() const; // square only; Bareiss

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

// Smith decomposition U A V = D. U is kept as a log of elementary row
// operations so that tall matrices never materialize it; apply_u replays
// the log on a vector.
class SmithForm {
public:
  explicit SmithForm(const IntMatrix &a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  // d_1 | d_2 | ... of length min(rows, cols); zeros trail.
  const std::vector<BigInt> &divisors() const { return divisors_; }
  const IntMatrix &v() const { return v_; }
  IntMatrix u() const;
  IntMatrix d() const;
  std::vector<BigInt> apply_u(std::vector<BigInt> x) const;

private:
  struct RowOp {
    enum Kind : std::uint8_t { Swap, AddMultiple, Negate } kind;
    std::uint32_t target, source; // AddMultiple: row[target] += factor * row[source]
    BigInt factor;
  };

  std::size_t rows_, cols_, rank_ = 0;
  std::vector<BigInt> divisors_;
  IntMatrix v_;
  std::vector<RowOp> log_;
};

struct SNFResult {
  IntMatrix u, d, v;
  std::vector<BigInt> divisors;
  std::size_t rank = 0;
};

// Pivot rule: least absolute nonzero entry, ties broken row-major.
SNFResult smith_normal_form(const IntMatrix &a);

// x with A x = v (mod k), entries reduced into [0, k); nullopt if none.
std::optional<std::vector<BigInt>> solve_mod(const IntMatrix &a, const std::vector<BigInt> &v,
                                             const BigInt &k);
std::optional<std::vector<BigInt>> solve_mod(const SmithForm &snf, const std::vector<BigInt> &v,
                                             const BigInt &k);

// Rational b with A b = d modulo integer vectors, i.e. a preimage of d under
// A acting on (Q/Z)^cols. Entries of b are reduced into [0, 1).
std::optional<std::vector<Rational>> divisible_preimage(const IntMatrix &a,
                                                        const std::vector<Rational> &d);
std::optional<std::vector<Rational>> divisible_preimage(const SmithForm &snf,
                                                        const std::vector<Rational> &d);

// ---------------------------------------------------------------------------
// Smith form over Z/M for large sparse systems.

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct ModularSmith {
  std::int64_t modulus = 1;
  std::size_t unit_count = 0; // diagonal entries equal to 1
  // Remaining diagonal positions: each entry is a divisor of the modulus
  // other than 1, with 0 standing for the zero class. v_columns[k] is the
  // matching column of V (mod modulus), of length `cols`.
  std::vector<std::int64_t> divisors;
  std::vector<std::vector<std::int64_t>> v_columns;
};

// Smith form of the matrix with the given sparse rows over Z/modulus.
// Duplicate column entries within a row are summed.
ModularSmith modular_smith(const std::vector<SparseRow> &rows, std::size_t cols,
                           std::int64_t modulus);

} // namespace twochar
