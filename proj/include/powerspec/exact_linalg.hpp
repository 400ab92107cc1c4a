#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powerspec {

/// Dense matrix of exact rationals. No operation on this type rounds.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return rows_; }

  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// this - lambda * I
  RationalMatrix shifted(const mpq_class& lambda) const {
    RationalMatrix m = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) -= lambda;
    return m;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

using IntegerRows = std::vector<std::vector<mpz_class>>;

/// Rank by fraction-free (Bareiss) elimination with row and column pivoting.
/// Every intermediate division is exact.
inline std::size_t bareiss_rank(IntegerRows m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t c = k; c < cols && pr == rows; ++c)
      for (std::size_t r = k; r < rows; ++r)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k)
      for (auto& row : m) std::swap(row[k], row[pc]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
    ++rank;
  }
  return rank;
}

/// Exact rank of a rational matrix; each row is scaled by the lcm of its
/// denominators first, which preserves rank.
inline std::size_t exact_rank(const RationalMatrix& a) {
  IntegerRows m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return bareiss_rank(std::move(m));
}

inline std::size_t exact_nullity(const RationalMatrix& a) { return a.cols() - exact_rank(a); }

using Int64Rows = std::vector<std::vector<std::int64_t>>;

inline IntegerRows to_mpz(const Int64Rows& a) {
  IntegerRows m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].reserve(a[i].size());
    for (auto v : a[i]) m[i].emplace_back(static_cast<long>(v));
  }
  return m;
}

namespace detail {
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= kMersenne31) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
}  // namespace detail

/// Rank over GF(p). Reduction mod p can only lower rank, so this is a
/// certified lower bound on the rational rank (equivalently, the nullity mod
/// p bounds the rational nullity from above).
inline std::size_t rank_mod_p(const Int64Rows& a, std::uint64_t p = detail::kMersenne61) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<std::uint64_t>(((a[i][j] % sp) + sp) % sp);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr == rows) continue;
    std::swap(m[rank], m[pr]);
    const std::uint64_t inv = detail::powmod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = detail::mulmod(m[r][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = detail::mulmod(f, m[rank][j], p);
        m[r][j] = m[r][j] >= sub ? m[r][j] - sub : m[r][j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

/// Exact nullity of a square integer matrix: a nonsingular reduction mod p
/// certifies nullity zero; otherwise Bareiss decides.
inline std::size_t integer_nullity(const Int64Rows& a) {
  const std::size_t n = a.size();
  if (n == 0) return 0;
  if (rank_mod_p(a) == a[0].size()) return 0;
  return a[0].size() - bareiss_rank(to_mpz(a));
}

/// All eigenvalues of a dense symmetric matrix (row-major, n*n) by cyclic
/// Jacobi rotations, returned in descending order. Iterates until the
/// off-diagonal Frobenius norm is below 1e-12 * n or a sweep applies no
/// rotation.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, int max_sweeps = 100) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi_eigenvalues: size mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  const double threshold = 1e-12 * static_cast<double>(std::max<std::size_t>(n, 1));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
    if (std::sqrt(off) < threshold) break;
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        // Skip rotations that would not change the diagonal in double precision.
        const double g = 100.0 * std::abs(apq);
        if (std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const double theta = (aqq - app) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    if (!rotated) break;
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace powerspec
