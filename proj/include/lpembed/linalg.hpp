#pragma once

// Exact linear algebra over Q by fraction-free elimination: rows are scaled
// to integer vectors, combined with integer multipliers and divided by their
// content after every step.

#include <optional>
#include <span>
#include <vector>

#include "lpembed/error.hpp"
#include "lpembed/rational.hpp"

namespace lpembed {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix id(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  Matrix c(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw MismatchError("matrix shapes do not conform");
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

namespace detail {

using IntRow = std::vector<Integer>;

/// Multiplies a rational row by the lcm of its denominators; returns the
/// multiplier.
inline Integer integralize(std::span<const Rational> row, IntRow& out) {
  Integer l(1);
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  out.resize(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i].get_num() * (l / row[i].get_den());
  return l;
}

/// Divides a and b jointly by the gcd of all their entries.
inline void remove_content(IntRow& a, IntRow& b) {
  Integer g(0);
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (const auto& v : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g <= 1) return;
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  for (auto& v : b) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// target <- pivot_val * target - target[col] * source, applied to both halves.
inline void eliminate(IntRow& target, IntRow& target_aux, const IntRow& source,
                      const IntRow& source_aux, std::size_t col) {
  const Integer f = target[col];
  if (sgn(f) == 0) return;
  const Integer pv = source[col];
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = pv * target[j] - f * source[j];
  for (std::size_t j = 0; j < target_aux.size(); ++j)
    target_aux[j] = pv * target_aux[j] - f * source_aux[j];
  remove_content(target, target_aux);
}

}  // namespace detail

/// Row echelon basis grown one row at a time. Each insertion either extends
/// the basis or, when the row is in the span of the rows inserted before it,
/// yields the linear relation among the inserted rows.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

  struct Insertion {
    bool independent;
    /// When dependent: coefficients c over all rows inserted so far
    /// (including this one, whose coefficient is nonzero) with sum c_j row_j = 0.
    std::vector<Rational> relation;
  };

  Insertion insert(std::span<const Rational> row) {
    if (row.size() != cols_) throw MismatchError("row length does not match column count");
    const std::size_t index = scales_.size();
    detail::IntRow r;
    scales_.push_back(detail::integralize(row, r));
    detail::IntRow aux(index + 1, Integer(0));
    aux[index] = 1;
    for (auto& b : basis_) {
      b.aux.resize(index + 1, Integer(0));
      detail::eliminate(r, aux, b.row, b.aux, b.pivot);
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(r[j]) != 0) {
        pivot = j;
        break;
      }
    if (pivot) {
      basis_.push_back({std::move(r), std::move(aux), *pivot});
      return {true, {}};
    }
    // sum aux_j * (scale_j * row_j) = 0
    std::vector<Rational> relation(index + 1);
    for (std::size_t j = 0; j <= index; ++j) {
      relation[j] = Rational(aux[j] * scales_[j]);
      relation[j].canonicalize();
    }
    return {false, std::move(relation)};
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  struct BasisRow {
    detail::IntRow row;
    detail::IntRow aux;
    std::size_t pivot;
  };
  std::size_t cols_;
  std::vector<BasisRow> basis_;
  std::vector<Integer> scales_;
};

inline std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  IncrementalEchelon ech(a.front().size());
  for (const auto& row : a) ech.insert(row);
  return ech.rank();
}

/// Exact inverse by fraction-free Gauss-Jordan; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw MismatchError("inverse requires a square matrix");
  std::vector<detail::IntRow> rows(n), aux(n);
  std::vector<Integer> scales(n);
  for (std::size_t i = 0; i < n; ++i) {
    scales[i] = detail::integralize(a[i], rows[i]);
    aux[i].assign(n, Integer(0));
    aux[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(rows[piv], rows[col]);
    std::swap(aux[piv], aux[col]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col) detail::eliminate(rows[i], aux[i], rows[col], aux[col], col);
  }
  // rows[i] = p_i e_i, and rows = E * diag(scales) * a, aux = E.
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv[i][j] = Rational(aux[i][j] * scales[j], rows[i][i]);
      inv[i][j].canonicalize();
    }
  return inv;
}

}  // namespace lpembed
