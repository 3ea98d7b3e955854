#include "twochar/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twochar/error.hpp"

namespace twochar {

// ------------------------------------------------------------ IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &row : init) {
    if (row.size() != cols_)
      throw ValidationError("ragged matrix initializer");
    for (long x : row)
      data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt &a = (*this)(i, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), rhs(k, j).get_mpz_t());
    }
  return out;
}

std::vector<BigInt> IntMatrix::operator*(const std::vector<BigInt> &x) const {
  if (cols_ != x.size())
    throw ValidationError("matrix-vector dimension mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_addmul(out[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), x[j].get_mpz_t());
  return out;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = (*this)(i, j);
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a[swap][k]) == 0)
        ++swap;
      if (swap == n)
        return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// ------------------------------------------------------------ SmithForm

SmithForm::SmithForm(const IntMatrix &in)
    : rows_(in.rows()), cols_(in.cols()), v_(IntMatrix::identity(in.cols())) {
  std::vector<std::vector<BigInt>> a(rows_, std::vector<BigInt>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      a[i][j] = in(i, j);

  std::size_t t = 0;
  auto add_row = [&](std::size_t target, std::size_t source, const BigInt &f) {
    for (std::size_t j = t; j < cols_; ++j)
      mpz_addmul(a[target][j].get_mpz_t(), f.get_mpz_t(), a[source][j].get_mpz_t());
    log_.push_back({RowOp::AddMultiple, std::uint32_t(target), std::uint32_t(source), f});
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    std::swap(a[i], a[j]);
    log_.push_back({RowOp::Swap, std::uint32_t(i), std::uint32_t(j), BigInt()});
  };
  auto add_col = [&](std::size_t target, std::size_t source, const BigInt &f) {
    for (std::size_t i = t; i < rows_; ++i)
      mpz_addmul(a[i][target].get_mpz_t(), f.get_mpz_t(), a[i][source].get_mpz_t());
    for (std::size_t i = 0; i < cols_; ++i)
      mpz_addmul(v_(i, target).get_mpz_t(), f.get_mpz_t(), v_(i, source).get_mpz_t());
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols_; ++r)
      std::swap(v_(r, i), v_(r, j));
  };

  BigInt q;
  for (; t < std::min(rows_, cols_); ++t) {
    bool found = false;
    while (true) {
      // least absolute nonzero entry of the trailing block, row-major ties
      std::size_t pi = 0, pj = 0;
      found = false;
      for (std::size_t i = t; i < rows_; ++i)
        for (std::size_t j = t; j < cols_; ++j) {
          if (sgn(a[i][j]) == 0)
            continue;
          if (!found || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found)
        break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (sgn(a[i][t]) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          add_row(i, t, -q);
        if (sgn(a[i][t]) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a[t][j]) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          add_col(j, t, -q);
        if (sgn(a[t][j]) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // divisibility chain: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows_ && divides; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (sgn(a[i][j]) != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            add_row(t, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (!found)
      break;
    if (sgn(a[t][t]) < 0) {
      for (std::size_t j = t; j < cols_; ++j)
        a[t][j] = -a[t][j];
      log_.push_back({RowOp::Negate, std::uint32_t(t), 0, BigInt()});
    }
  }
  rank_ = t;
  divisors_.assign(std::min(rows_, cols_), BigInt(0));
  for (std::size_t i = 0; i < rank_; ++i)
    divisors_[i] = a[i][i];
}

std::vector<BigInt> SmithForm::apply_u(std::vector<BigInt> x) const {
  if (x.size() != rows_)
    throw ValidationError("vector length does not match the row count");
  for (const auto &op : log_) {
    switch (op.kind) {
    case RowOp::Swap:
      std::swap(x[op.target], x[op.source]);
      break;
    case RowOp::AddMultiple:
      mpz_addmul(x[op.target].get_mpz_t(), op.factor.get_mpz_t(), x[op.source].get_mpz_t());
      break;
    case RowOp::Negate:
      x[op.target] = -x[op.target];
      break;
    }
  }
  return x;
}

IntMatrix SmithForm::u() const {
  IntMatrix out(rows_, rows_);
  for (std::size_t j = 0; j < rows_; ++j) {
    std::vector<BigInt> e(rows_);
    e[j] = 1;
    auto col = apply_u(std::move(e));
    for (std::size_t i = 0; i < rows_; ++i)
      out(i, j) = col[i];
  }
  return out;
}

IntMatrix SmithForm::d() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    out(i, i) = divisors_[i];
  return out;
}

SNFResult smith_normal_form(const IntMatrix &a) {
  SmithForm snf(a);
  return {snf.u(), snf.d(), snf.v(), snf.divisors(), snf.rank()};
}

// -------------------------------------------------------------- solvers

std::optional<std::vector<BigInt>> solve_mod(const SmithForm &snf, const std::vector<BigInt> &v,
                                             const BigInt &k) {
  if (k < 1)
    throw ValidationError("modulus must be at least 1");
  if (v.size() != snf.rows())
    throw ValidationError("right-hand side length does not match the row count");
  auto w = snf.apply_u(v);
  std::vector<BigInt> y(snf.cols());
  for (std::size_t i = 0; i < snf.rows(); ++i) {
    BigInt wi;
    mpz_fdiv_r(wi.get_mpz_t(), w[i].get_mpz_t(), k.get_mpz_t());
    BigInt d = i < snf.rank() ? snf.divisors()[i] : BigInt(0);
    if (sgn(d) == 0) {
      if (sgn(wi) != 0)
        return std::nullopt;
      continue;
    }
    BigInt g = gcd(d, k);
    if (!mpz_divisible_p(wi.get_mpz_t(), g.get_mpz_t()))
      return std::nullopt;
    BigInt mod = k / g;
    if (mod == 1)
      continue;
    BigInt inv, dg = d / g;
    mpz_fdiv_r(dg.get_mpz_t(), dg.get_mpz_t(), mod.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mod.get_mpz_t());
    BigInt yi = (wi / g) * inv;
    mpz_fdiv_r(y[i].get_mpz_t(), yi.get_mpz_t(), mod.get_mpz_t());
  }
  auto x = snf.v() * y;
  for (auto &xi : x)
    mpz_fdiv_r(xi.get_mpz_t(), xi.get_mpz_t(), k.get_mpz_t());
  return x;
}

std::optional<std::vector<BigInt>> solve_mod(const IntMatrix &a, const std::vector<BigInt> &v,
                                             const BigInt &k) {
  if (v.size() != a.rows())
    throw ValidationError("right-hand side length does not match the row count");
  return solve_mod(SmithForm(a), v, k);
}

std::optional<std::vector<Rational>> divisible_preimage(const SmithForm &snf,
                                                        const std::vector<Rational> &d) {
  if (d.size() != snf.rows())
    throw ValidationError("right-hand side length does not match the row count");
  BigInt den = 1;
  for (const auto &x : d)
    den = lcm(den, BigInt(x.get_den()));
  std::vector<BigInt> scaled(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    scaled[i] = d[i].get_num() * (den / d[i].get_den());
  auto w = snf.apply_u(std::move(scaled));

  // Zero rows of D must already be integral; nonzero divisors impose
  // nothing because b ranges over all rationals.
  for (std::size_t i = snf.rank(); i < snf.rows(); ++i)
    if (!mpz_divisible_p(w[i].get_mpz_t(), den.get_mpz_t()))
      return std::nullopt;

  std::vector<Rational> y(snf.cols());
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    y[i] = Rational(w[i], den * snf.divisors()[i]);
    y[i].canonicalize();
  }
  std::vector<Rational> b(snf.cols());
  const auto &v = snf.v();
  for (std::size_t i = 0; i < snf.cols(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < snf.rank(); ++j)
      if (sgn(v(i, j)) != 0)
        acc += Rational(v(i, j)) * y[j];
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), acc.get_num_mpz_t(), acc.get_den_mpz_t());
    b[i] = acc - Rational(fl);
  }
  return b;
}

std::optional<std::vector<Rational>> divisible_preimage(const IntMatrix &a,
                                                        const std::vector<Rational> &d) {
  if (d.size() != a.rows())
    throw ValidationError("right-hand side length does not match the row count");
  return divisible_preimage(SmithForm(a), d);
}

// ------------------------------------------------------ modular Smith form

namespace {

using i64 = std::int64_t;

i64 mod_norm(i64 a, i64 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

// g = gcd(a, b) = s a + t b for nonnegative a, b not both zero.
i64 ext_gcd(i64 a, i64 b, i64 &s, i64 &t) {
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    i64 q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

i64 inv_mod(i64 a, i64 m) {
  i64 s, t;
  i64 g = ext_gcd(mod_norm(a, m), m, s, t);
  if (g != 1)
    throw std::logic_error("inverting a non-unit");
  return mod_norm(s, m);
}

bool is_unit(i64 a, i64 m) { return std::gcd(a, m) == 1; }

// dst -= f * src over Z/m, both sorted by column.
void sparse_axpy(SparseRow &dst, i64 f, const SparseRow &src, i64 m) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      i64 v = mod_norm(-mul_mod(f, src[j].second, m), m);
      if (v != 0)
        out.emplace_back(src[j].first, v);
      ++j;
    } else {
      i64 v = mod_norm(dst[i].second - mul_mod(f, src[j].second, m), m);
      if (v != 0)
        out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

i64 sparse_get(const SparseRow &row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto &e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : 0;
}

// Reduced echelon form with unit pivots, built row by row. Pivot rows never
// carry entries in other pivot columns.
class UnitEliminator {
public:
  UnitEliminator(std::size_t cols, i64 m)
      : m_(m), pivot_of_col_(cols, -1), work_(cols, 0), touched_mark_(cols, 0) {}

  void insert(const SparseRow &row) {
    load(row);
    reduce();
    auto r = harvest();
    if (r.empty())
      return;
    auto unit = std::find_if(r.begin(), r.end(),
                             [&](const auto &e) { return is_unit(e.second, m_); });
    if (unit == r.end()) {
      deferred_.push_back(std::move(r));
      return;
    }
    std::uint32_t col = unit->first;
    i64 scale = inv_mod(unit->second, m_);
    for (auto &e : r)
      e.second = mul_mod(e.second, scale, m_);
    for (auto &p : pivots_) {
      i64 f = sparse_get(p, col);
      if (f != 0)
        sparse_axpy(p, f, r, m_);
    }
    pivot_of_col_[col] = static_cast<std::int64_t>(pivots_.size());
    pivot_cols_.push_back(col);
    pivots_.push_back(std::move(r));
  }

  // Deferred rows re-reduced against the final pivot set.
  std::vector<SparseRow> take_deferred() {
    std::vector<SparseRow> out;
    for (const auto &row : deferred_) {
      load(row);
      reduce();
      auto r = harvest();
      if (!r.empty())
        out.push_back(std::move(r));
    }
    deferred_.clear();
    return out;
  }

  const std::vector<SparseRow> &pivots() const { return pivots_; }
  const std::vector<std::uint32_t> &pivot_cols() const { return pivot_cols_; }
  bool is_pivot_col(std::uint32_t c) const { return pivot_of_col_[c] >= 0; }

private:
  void touch(std::uint32_t c) {
    if (!touched_mark_[c]) {
      touched_mark_[c] = 1;
      touched_.push_back(c);
    }
  }
  void load(const SparseRow &row) {
    for (const auto &[c, v] : row) {
      touch(c);
      work_[c] = mod_norm(work_[c] + v, m_);
    }
  }
  void reduce() {
    const auto snapshot = touched_;
    for (std::uint32_t c : snapshot) {
      auto p = pivot_of_col_[c];
      if (p < 0 || work_[c] == 0)
        continue;
      i64 f = work_[c];
      for (const auto &[c2, v2] : pivots_[std::size_t(p)]) {
        touch(c2);
        work_[c2] = mod_norm(work_[c2] - mul_mod(f, v2, m_), m_);
      }
    }
  }
  SparseRow harvest() {
    std::sort(touched_.begin(), touched_.end());
    SparseRow r;
    for (std::uint32_t c : touched_) {
      if (work_[c] != 0)
        r.emplace_back(c, work_[c]);
      work_[c] = 0;
      touched_mark_[c] = 0;
    }
    touched_.clear();
    return r;
  }

  i64 m_;
  std::vector<std::int64_t> pivot_of_col_;
  std::vector<std::uint32_t> pivot_cols_;
  std::vector<SparseRow> pivots_;
  std::vector<SparseRow> deferred_;
  std::vector<i64> work_;
  std::vector<char> touched_mark_;
  std::vector<std::uint32_t> touched_;
};

using Dense = std::vector<std::vector<i64>>;

// Row echelon form over Z/m by unimodular 2x2 row operations.
Dense echelon_mod(const std::vector<std::vector<i64>> &input, std::size_t q, i64 m) {
  Dense ech;
  std::vector<std::int64_t> lead_row(q, -1);
  for (auto r : input) {
    for (std::size_t c = 0; c < q; ++c) {
      if (r[c] == 0)
        continue;
      if (lead_row[c] < 0) {
        lead_row[c] = static_cast<std::int64_t>(ech.size());
        ech.push_back(std::move(r));
        break;
      }
      auto &p = ech[std::size_t(lead_row[c])];
      i64 s, t;
      i64 a = p[c], b = r[c];
      i64 h = ext_gcd(a, b, s, t);
      i64 a_h = a / h, b_h = b / h;
      for (std::size_t j = c; j < q; ++j) {
        i64 pj = p[j], rj = r[j];
        p[j] = mod_norm(mul_mod(mod_norm(s, m), pj, m) + mul_mod(mod_norm(t, m), rj, m), m);
        r[j] = mod_norm(mul_mod(mod_norm(-b_h, m), pj, m) + mul_mod(a_h, rj, m), m);
      }
    }
  }
  return ech;
}

struct DenseSmith {
  std::vector<i64> diagonal; // nonzero divisors of m, in chain order
  Dense w;                   // q x q column transform
};

DenseSmith dense_smith_mod(Dense a, std::size_t q, i64 m) {
  const std::size_t nr = a.size();
  Dense w(q, std::vector<i64>(q, 0));
  for (std::size_t i = 0; i < q; ++i)
    w[i][i] = 1 % m;
  DenseSmith out;

  std::size_t t = 0;
  auto row_combo = [&](std::size_t r1, std::size_t r2, i64 a11, i64 a12, i64 a21, i64 a22) {
    // (row r1, row r2) <- [[a11 a12],[a21 a22]] (row r1, row r2)
    for (std::size_t j = t; j < q; ++j) {
      i64 x = a[r1][j], y = a[r2][j];
      a[r1][j] = mod_norm(mul_mod(a11, x, m) + mul_mod(a12, y, m), m);
      a[r2][j] = mod_norm(mul_mod(a21, x, m) + mul_mod(a22, y, m), m);
    }
  };
  auto col_combo = [&](std::size_t c1, std::size_t c2, i64 a11, i64 a12, i64 a21, i64 a22) {
    // (col c1, col c2) <- (a11 c1 + a21 c2, a12 c1 + a22 c2)
    auto apply = [&](Dense &mat, std::size_t from, std::size_t to) {
      for (std::size_t i = from; i < to; ++i) {
        i64 x = mat[i][c1], y = mat[i][c2];
        mat[i][c1] = mod_norm(mul_mod(a11, x, m) + mul_mod(a21, y, m), m);
        mat[i][c2] = mod_norm(mul_mod(a12, x, m) + mul_mod(a22, y, m), m);
      }
    };
    apply(a, t, nr);
    apply(w, 0, q);
  };

  for (; t < std::min(nr, q); ++t) {
    bool found = false;
    i64 g = 0;
    while (true) {
      std::size_t pi = 0, pj = 0;
      found = false;
      i64 best = 0;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < q; ++j) {
          if (a[i][j] == 0)
            continue;
          i64 gg = std::gcd(a[i][j], m);
          if (!found || gg < best) {
            best = gg;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found)
        break;
      std::swap(a[t], a[pi]);
      if (pj != t)
        col_combo(t, pj, 0, 1, 1, 0);

      // a[t][t] = u * g with u a unit; scale the row by u^-1
      g = best;
      i64 mg = m / g;
      i64 u = (a[t][t] / g) % mg;
      if (mg == 1)
        u = 1;
      while (!is_unit(u, m))
        u += mg;
      i64 uinv = inv_mod(u, m);
      for (std::size_t j = t; j < q; ++j)
        a[t][j] = mul_mod(a[t][j], uinv, m);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr && clean; ++i) {
        i64 b = a[i][t];
        if (b == 0)
          continue;
        if (b % g == 0) {
          row_combo(t, i, 1, 0, mod_norm(-(b / g), m), 1);
        } else {
          i64 s, x;
          i64 h = ext_gcd(a[t][t], b, s, x);
          row_combo(t, i, mod_norm(s, m), mod_norm(x, m), mod_norm(-(b / h), m), a[t][t] / h);
          clean = false;
        }
      }
      if (!clean)
        continue;
      for (std::size_t j = t + 1; j < q && clean; ++j) {
        i64 b = a[t][j];
        if (b == 0)
          continue;
        if (b % g == 0) {
          col_combo(t, j, 1, mod_norm(-(b / g), m), 0, 1);
        } else {
          i64 s, x;
          i64 h = ext_gcd(a[t][t], b, s, x);
          // new col t = s*col t + x*col j ; new col j = -(b/h) col t + (a/h) col j
          col_combo(t, j, mod_norm(s, m), mod_norm(-(b / h), m), mod_norm(x, m), a[t][t] / h);
          clean = false;
        }
      }
      if (!clean)
        continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < q; ++j)
          if (a[i][j] % g != 0) {
            row_combo(t, i, 1, 1, 0, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (!found)
      break;
    out.diagonal.push_back(g);
  }
  out.w = std::move(w);
  return out;
}

} // namespace

ModularSmith modular_smith(const std::vector<SparseRow> &rows, std::size_t cols, i64 modulus) {
  if (modulus < 1)
    throw ValidationError("modulus must be at least 1");
  ModularSmith out;
  out.modulus = modulus;
  if (modulus == 1)
    return out;

  UnitEliminator elim(cols, modulus);
  for (const auto &raw : rows) {
    SparseRow row;
    for (const auto &[c, v] : raw) {
      if (c >= cols)
        throw ValidationError("sparse entry column out of range");
      row.emplace_back(c, mod_norm(v, modulus));
    }
    std::sort(row.begin(), row.end());
    elim.insert(row);
  }
  auto deferred = elim.take_deferred();
  out.unit_count = elim.pivots().size();

  std::vector<std::uint32_t> free_cols;
  std::vector<std::int64_t> free_pos(cols, -1);
  for (std::uint32_t c = 0; c < cols; ++c)
    if (!elim.is_pivot_col(c)) {
      free_pos[c] = static_cast<std::int64_t>(free_cols.size());
      free_cols.push_back(c);
    }
  const std::size_t q = free_cols.size();

  Dense rest;
  for (const auto &r : deferred) {
    std::vector<i64> dense(q, 0);
    for (const auto &[c, v] : r)
      dense[std::size_t(free_pos[c])] = v;
    rest.push_back(std::move(dense));
  }
  auto smith = dense_smith_mod(echelon_mod(rest, q, modulus), q, modulus);

  for (std::size_t k = 0; k < smith.diagonal.size(); ++k) {
    i64 d = smith.diagonal[k];
    if (d == 1) {
      ++out.unit_count;
      continue;
    }
    // V column: sum over free columns c' of W[c'][k] (e_c' - sum_p R[p][c'] e_pcol)
    std::vector<i64> vcol(cols, 0);
    for (std::size_t f = 0; f < q; ++f)
      vcol[free_cols[f]] = smith.w[f][k];
    const auto &piv = elim.pivots();
    const auto &pcols = elim.pivot_cols();
    for (std::size_t p = 0; p < piv.size(); ++p) {
      i64 acc = 0;
      for (const auto &[c, v] : piv[p])
        if (c != pcols[p])
          acc = mod_norm(acc + mul_mod(v, smith.w[std::size_t(free_pos[c])][k], modulus), modulus);
      vcol[pcols[p]] = mod_norm(-acc, modulus);
    }
    out.divisors.push_back(d);
    out.v_columns.push_back(std::move(vcol));
  }
  return out;
}

} // namespace twochar
