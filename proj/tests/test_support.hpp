#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lpembed/lpembed.hpp"

namespace lpembed::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 7) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline KElement<Rational> random_element(Field field, std::mt19937_64& rng) {
  std::array<Rational, 4> c{};
  for (std::size_t i = 0; i < real_dim(field); ++i) c[i] = random_rational(rng);
  return KElement<Rational>(field, c);
}

inline KVector<Rational> random_vector(Field field, std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    std::vector<KElement<Rational>> entries;
    for (std::size_t i = 0; i < m; ++i) entries.push_back(random_element(field, rng));
    KVector<Rational> v(field, std::move(entries));
    if (!v.is_zero()) return v;
  }
}

inline std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> x(n);
  for (auto& v : x) v = random_rational(rng);
  return x;
}

inline KVector<Rational> rvec(std::initializer_list<int> entries) {
  std::vector<KElement<Rational>> es;
  for (int v : entries) es.push_back(KElement<Rational>::real(Field::R, v));
  return KVector<Rational>(Field::R, std::move(es));
}

inline KVector<Rational> rvec_q(std::initializer_list<Rational> entries) {
  std::vector<KElement<Rational>> es;
  for (const auto& v : entries) es.push_back(KElement<Rational>::real(Field::R, v));
  return KVector<Rational>(Field::R, std::move(es));
}

inline WeightedFrame rational_p4() {
  return std::get<WeightedFrame>(catalog(Field::R, 2, 4, CatalogKind::Real2RationalP4));
}

inline WeightedFrame orthonormal(Field field, std::size_t m) {
  return std::get<WeightedFrame>(catalog(field, m, 2, CatalogKind::OrthonormalP2));
}

/// Reducible R^2, p = 4 instance: the rational catalog frame rotated by the
/// Pythagorean rotation (3/5, 4/5), pushed through D = diag(1, 2/3) and
/// augmented by (0, 1). The weights solve the frame identity exactly
/// (computed independently by coefficient matching).
inline WeightedFrame reducible_p4() {
  return WeightedFrame(Field::R, 2, 4,
                       {rvec_q({Rational(3, 5), Rational(8, 15)}), rvec_q({Rational(-4, 5), Rational(2, 5)}),
                        rvec_q({Rational(-1, 5), Rational(14, 15)}), rvec_q({Rational(7, 5), Rational(2, 15)}),
                        rvec_q({Rational(0), Rational(1)})},
                       {Rational(37, 20), Rational(23, 20), Rational(27, 40), Rational(3, 40), Rational(25, 81)});
}

/// Concatenates two frames for the same (K, m, p) with every weight halved.
inline WeightedFrame union_halved(const WeightedFrame& a, const WeightedFrame& b) {
  std::vector<KVector<Rational>> vs = a.vectors();
  vs.insert(vs.end(), b.vectors().begin(), b.vectors().end());
  std::vector<Rational> ws;
  for (const auto& w : a.weights()) ws.push_back(w / 2);
  for (const auto& w : b.weights()) ws.push_back(w / 2);
  return WeightedFrame(a.field(), a.m(), a.p(), std::move(vs), std::move(ws));
}

/// Each vector repeated `copies` times with its weight divided evenly.
inline WeightedFrame repeat_each(const WeightedFrame& f, int copies) {
  std::vector<KVector<Rational>> vs;
  std::vector<Rational> ws;
  for (std::size_t k = 0; k < f.size(); ++k)
    for (int c = 0; c < copies; ++c) {
      vs.push_back(f.vectors()[k]);
      ws.push_back(f.weights()[k] / copies);
    }
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), std::move(ws));
}

/// Splits vector k into two gauge-rotated copies carrying 1/3 and 2/3 of its weight.
inline WeightedFrame split_vector(const WeightedFrame& f, std::size_t k, const KElement<Rational>& alpha) {
  std::vector<KVector<Rational>> vs = f.vectors();
  std::vector<Rational> ws = f.weights();
  const Rational w = ws[k];
  ws[k] = w / 3;
  vs.push_back(right_scale(f.vectors()[k], alpha));
  ws.push_back(2 * w / 3);
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), std::move(ws));
}

inline WeightedFrame random_unitary_image(const WeightedFrame& f, std::mt19937_64& rng, int reflections = 2) {
  WeightedFrame out = f;
  for (int r = 0; r < reflections; ++r)
    out = apply_unitary(out, KReflection{random_normal(f.field(), f.m(), 3, rng)});
  return out;
}

/// Redundant verified frame number `seed`: the union of two unitary images of
/// a base frame, plus one gauge-rotated duplicated vector.
inline WeightedFrame redundant_frame(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  static const std::vector<std::pair<Field, std::size_t>> p2_configs = {
      {Field::R, 2}, {Field::R, 3}, {Field::C, 2}, {Field::C, 3}, {Field::H, 2}, {Field::H, 3}};
  WeightedFrame base = rational_p4();
  if (seed % 3 != 0) {
    const auto [field, m] = p2_configs[seed % p2_configs.size()];
    base = orthonormal(field, m);
  }
  const WeightedFrame a = random_unitary_image(base, rng);
  const WeightedFrame b = random_unitary_image(base, rng);
  WeightedFrame u = union_halved(a, b);
  const auto alpha = rational_unit_scalars(u.field(), 1, seed)[0];
  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
  return split_vector(u, pick(rng), alpha);
}

// --- independent oracles ----------------------------------------------------

/// Determinant by plain Gaussian elimination over Q (no fraction-free tricks).
inline Rational naive_det(Matrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::size_t naive_rank(Matrix a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Pointwise |<u, x>|^p computed from K arithmetic only.
inline Rational pointwise_frame_value(const KVector<Rational>& u, const std::vector<Rational>& x, unsigned p) {
  const auto xv = KVector<Rational>::from_real_coords(u.field(), x);
  return pow(k_norm_sq(inner_product(u, xv)), p / 2);
}

}  // namespace lpembed::testing

namespace lpembed {

// readable failure messages in gtest
inline void PrintTo(const RealForm& f, std::ostream* os) { *os << to_string(f); }

}  // namespace lpembed
