#pragma once

// Scalars and column vectors over the real division algebras R, C and H.
//
// Elements are stored as d real components (d = 1, 2, 4), real part first,
// quaternion order (1, i, j, k). The component type is either Rational
// (exact mode) or double (float mirror). Scalars act on vectors from the
// right, and the inner product is conjugate-linear in its first argument.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpembed/error.hpp"
#include "lpembed/rational.hpp"

namespace lpembed {

enum class Field : std::uint8_t { R = 1, C = 2, H = 4 };

constexpr std::size_t real_dim(Field f) { return static_cast<std::size_t>(f); }

inline std::string field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

inline Field parse_field(std::string_view tag) {
  if (tag == "R") return Field::R;
  if (tag == "C") return Field::C;
  if (tag == "H") return Field::H;
  throw ParseError("unknown field '" + std::string(tag) + "' (expected R, C or H)");
}

namespace detail {

// Hamilton table: basis(a) * basis(b) = sign * basis(index).
struct BasisProduct {
  int sign;
  std::size_t index;
};

inline constexpr std::array<std::array<BasisProduct, 4>, 4> kHamilton{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

}  // namespace detail

inline constexpr detail::BasisProduct basis_product(std::size_t a, std::size_t b) {
  return detail::kHamilton[a][b];
}

template <class T>
class KElement {
 public:
  explicit KElement(Field field = Field::R) : field_(field) {}

  KElement(Field field, std::initializer_list<T> components) : field_(field) {
    if (components.size() != real_dim(field))
      throw MismatchError("component count does not match field " + field_name(field));
    std::size_t i = 0;
    for (const T& c : components) c_[i++] = canonical(c);
  }

  KElement(Field field, std::span<const T> components) : field_(field) {
    if (components.size() != real_dim(field))
      throw MismatchError("component count does not match field " + field_name(field));
    for (std::size_t i = 0; i < components.size(); ++i) c_[i] = canonical(components[i]);
  }

  /// Takes the first real_dim(field) entries of `components`.
  KElement(Field field, const std::array<T, 4>& components) : field_(field), c_(components) {
    for (std::size_t i = real_dim(field); i < 4; ++i) c_[i] = T{};
  }

  static KElement real(Field field, T value) {
    KElement e(field);
    e.c_[0] = canonical(std::move(value));
    return e;
  }

  Field field() const { return field_; }
  std::size_t dim() const { return real_dim(field_); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  std::span<const T> components() const { return {c_.data(), dim()}; }

  bool is_zero() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!lpembed::is_zero(c_[i])) return false;
    return true;
  }

  friend bool operator==(const KElement& a, const KElement& b) {
    if (a.field_ != b.field_) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  Field field_;
  std::array<T, 4> c_{};
};

namespace detail {
template <class T>
void require_same_field(const KElement<T>& a, const KElement<T>& b) {
  if (a.field() != b.field())
    throw MismatchError("field mismatch: " + field_name(a.field()) + " vs " +
                        field_name(b.field()));
}
}  // namespace detail

template <class T>
KElement<T> k_add(const KElement<T>& a, const KElement<T>& b) {
  detail::require_same_field(a, b);
  std::array<T, 4> r{};
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return KElement<T>(a.field(), r);
}

template <class T>
KElement<T> k_sub(const KElement<T>& a, const KElement<T>& b) {
  detail::require_same_field(a, b);
  std::array<T, 4> r{};
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return KElement<T>(a.field(), r);
}

/// Multiplication by a real number.
template <class T>
KElement<T> k_scale(const KElement<T>& a, const T& s) {
  std::array<T, 4> r{};
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] * s;
  return KElement<T>(a.field(), r);
}

template <class T>
KElement<T> k_mul(const KElement<T>& a, const KElement<T>& b) {
  detail::require_same_field(a, b);
  std::array<T, 4> r{};
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (lpembed::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const auto bp = basis_product(i, j);
      if (bp.sign > 0)
        r[bp.index] += a[i] * b[j];
      else
        r[bp.index] -= a[i] * b[j];
    }
  }
  return KElement<T>(a.field(), r);
}

template <class T>
KElement<T> k_conj(const KElement<T>& a) {
  std::array<T, 4> r{};
  r[0] = a[0];
  for (std::size_t i = 1; i < a.dim(); ++i) r[i] = -a[i];
  return KElement<T>(a.field(), r);
}

template <class T>
T k_norm_sq(const KElement<T>& a) {
  T s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return s;
}

template <class T>
KElement<T> operator*(const KElement<T>& a, const KElement<T>& b) { return k_mul(a, b); }
template <class T>
KElement<T> operator+(const KElement<T>& a, const KElement<T>& b) { return k_add(a, b); }
template <class T>
KElement<T> operator-(const KElement<T>& a, const KElement<T>& b) { return k_sub(a, b); }

/// Column vector in K^m.
template <class T>
class KVector {
 public:
  KVector(Field field, std::vector<KElement<T>> entries) : field_(field), entries_(std::move(entries)) {
    if (entries_.empty()) throw MismatchError("vector must have at least one entry");
    for (const auto& e : entries_)
      if (e.field() != field_) throw MismatchError("vector entries must share the field");
  }

  /// Canonical basis vector e_{index} of K^m.
  static KVector unit(Field field, std::size_t m, std::size_t index) {
    std::vector<KElement<T>> entries(m, KElement<T>(field));
    entries.at(index) = KElement<T>::real(field, T(1));
    return KVector(field, std::move(entries));
  }

  /// Builds a vector from its d*m real coordinates (entry-major).
  static KVector from_real_coords(Field field, std::span<const T> coords) {
    const std::size_t d = real_dim(field);
    if (coords.empty() || coords.size() % d != 0)
      throw MismatchError("coordinate count is not a multiple of the field dimension");
    std::vector<KElement<T>> entries;
    for (std::size_t i = 0; i < coords.size(); i += d)
      entries.emplace_back(field, coords.subspan(i, d));
    return KVector(field, std::move(entries));
  }

  Field field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const KElement<T>& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<KElement<T>>& entries() const { return entries_; }

  std::vector<T> real_coords() const {
    std::vector<T> out;
    out.reserve(size() * real_dim(field_));
    for (const auto& e : entries_)
      for (const auto& c : e.components()) out.push_back(c);
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const KVector& a, const KVector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::vector<KElement<T>> entries_;
};

namespace detail {
template <class T>
void require_compatible(const KVector<T>& x, const KVector<T>& y) {
  if (x.field() != y.field()) throw MismatchError("vector field mismatch");
  if (x.size() != y.size()) throw MismatchError("vector dimension mismatch");
}
}  // namespace detail

/// <x, y> = sum_i conj(x_i) y_i.
template <class T>
KElement<T> inner_product(const KVector<T>& x, const KVector<T>& y) {
  detail::require_compatible(x, y);
  KElement<T> acc(x.field());
  for (std::size_t i = 0; i < x.size(); ++i) acc = k_add(acc, k_mul(k_conj(x[i]), y[i]));
  return acc;
}

/// x * alpha (right scalar multiplication).
template <class T>
KVector<T> right_scale(const KVector<T>& x, const KElement<T>& alpha) {
  std::vector<KElement<T>> entries;
  entries.reserve(x.size());
  for (const auto& e : x.entries()) entries.push_back(k_mul(e, alpha));
  return KVector<T>(x.field(), std::move(entries));
}

template <class T>
KVector<T> real_scale(const KVector<T>& x, const T& s) {
  std::vector<KElement<T>> entries;
  entries.reserve(x.size());
  for (const auto& e : x.entries()) entries.push_back(k_scale(e, s));
  return KVector<T>(x.field(), std::move(entries));
}

template <class T>
KVector<T> vec_sub(const KVector<T>& x, const KVector<T>& y) {
  detail::require_compatible(x, y);
  std::vector<KElement<T>> entries;
  entries.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) entries.push_back(k_sub(x[i], y[i]));
  return KVector<T>(x.field(), std::move(entries));
}

inline KElement<double> to_float(const KElement<Rational>& e) {
  std::array<double, 4> c{};
  for (std::size_t i = 0; i < e.dim(); ++i) c[i] = e[i].get_d();
  return KElement<double>(e.field(), c);
}

inline KVector<double> to_float(const KVector<Rational>& x) {
  std::vector<KElement<double>> entries;
  entries.reserve(x.size());
  for (const auto& e : x.entries()) entries.push_back(to_float(e));
  return KVector<double>(x.field(), std::move(entries));
}

/// Inverse stereographic projection Q^{d-1} -> unit sphere of K:
/// s maps to ((1 - |s|^2) + 2s) / (1 + |s|^2), real part first.
inline KElement<Rational> unit_scalar_from_params(Field field, std::span<const Rational> s) {
  const std::size_t d = real_dim(field);
  if (s.size() + 1 != d) throw MismatchError("unit scalar needs d - 1 parameters");
  Rational s2(0);
  for (const auto& v : s) s2 += v * v;
  const Rational denom = 1 + s2;
  std::array<Rational, 4> c{};
  c[0] = (1 - s2) / denom;
  for (std::size_t i = 1; i < d; ++i) c[i] = 2 * s[i - 1] / denom;
  return KElement<Rational>(field, c);
}

/// Exact unit scalars of K from random rational parameters; for R only +1
/// and -1 exist. Deterministic in seed.
inline std::vector<KElement<Rational>> rational_unit_scalars(Field field, std::size_t count,
                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<KElement<Rational>> out;
  out.reserve(count);
  const std::size_t d = real_dim(field);
  std::vector<Rational> params(d - 1);
  for (std::size_t n = 0; n < count; ++n) {
    const bool negate = (rng() & 1u) != 0;
    if (field == Field::R) {
      out.push_back(KElement<Rational>::real(field, negate ? Rational(-1) : Rational(1)));
      continue;
    }
    for (auto& v : params) {
      v = Rational(num(rng), den(rng));
      v.canonicalize();
    }
    auto alpha = unit_scalar_from_params(field, params);
    // the projection never reaches -1; a random sign covers the whole sphere
    out.push_back(negate ? k_scale(alpha, Rational(-1)) : alpha);
  }
  return out;
}

}  // namespace lpembed
