#pragma once

// Weighted frames: vectors u_k in K^m with positive weights w_k such that
//
//   sum_k w_k |<u_k, x>|^p = <x, x>^{p/2}   for all x,
//
// i.e. the frame of an isometric embedding l_2^m -> l_p^n after rescaling
// u_k by w_k^{1/p}. Exact frames carry Rational entries; FloatFrame is the
// binary64 mirror used by the scaling reduction and the equiangular catalog.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpembed/error.hpp"
#include "lpembed/forms.hpp"
#include "lpembed/kscalar.hpp"
#include "lpembed/linalg.hpp"
#include "lpembed/phi.hpp"

namespace lpembed {

template <class T>
class BasicFrame {
 public:
  BasicFrame(Field field, std::size_t m, unsigned p, std::vector<KVector<T>> vectors,
             std::vector<T> weights)
      : field_(field), m_(m), p_(p), vectors_(std::move(vectors)), weights_(std::move(weights)) {
    require_even(p_);
    if (m_ == 0) throw Error("frame dimension m must be at least 1");
    if (vectors_.empty()) throw Error("frame must contain at least one vector");
    if (vectors_.size() != weights_.size()) throw Error("frame needs one weight per vector");
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const auto& u = vectors_[k];
      if (u.field() != field_ || u.size() != m_)
        throw MismatchError("frame vector " + std::to_string(k) + " is not in " +
                            field_name(field_) + "^" + std::to_string(m_));
      if (u.is_zero()) throw Error("frame vector " + std::to_string(k) + " is zero");
      if (!(weights_[k] > 0)) throw Error("frame weight " + std::to_string(k) + " is not positive");
      weights_[k] = canonical(std::move(weights_[k]));
    }
  }

  Field field() const { return field_; }
  std::size_t m() const { return m_; }
  unsigned p() const { return p_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<KVector<T>>& vectors() const { return vectors_; }
  const std::vector<T>& weights() const { return weights_; }

  friend bool operator==(const BasicFrame& a, const BasicFrame& b) {
    return a.field_ == b.field_ && a.m_ == b.m_ && a.p_ == b.p_ && a.vectors_ == b.vectors_ &&
           a.weights_ == b.weights_;
  }

 private:
  Field field_;
  std::size_t m_;
  unsigned p_;
  std::vector<KVector<T>> vectors_;
  std::vector<T> weights_;
};

using WeightedFrame = BasicFrame<Rational>;
using FloatFrame = BasicFrame<double>;
using AnyFrame = std::variant<WeightedFrame, FloatFrame>;

inline FloatFrame to_float(const WeightedFrame& f) {
  std::vector<KVector<double>> vs;
  std::vector<double> ws;
  for (const auto& u : f.vectors()) vs.push_back(to_float(u));
  for (const auto& w : f.weights()) ws.push_back(w.get_d());
  return FloatFrame(f.field(), f.m(), f.p(), std::move(vs), std::move(ws));
}

/// The unweighted forms |<u_k, x>|^p.
template <class T>
std::vector<BasicForm<T>> frame_forms(const BasicFrame<T>& f) {
  std::vector<BasicForm<T>> out;
  out.reserve(f.size());
  for (const auto& u : f.vectors()) out.push_back(frame_form(u, f.p()));
  return out;
}

/// sum_k w_k |<u_k, x>|^p - <x, x>^{p/2}.
template <class T>
BasicForm<T> frame_residual(const BasicFrame<T>& f) {
  BasicForm<T> r = -norm_power_form<T>(f.field(), f.m(), f.p());
  for (std::size_t k = 0; k < f.size(); ++k)
    r = r + scale(frame_form(f.vectors()[k], f.p()), f.weights()[k]);
  return r;
}

struct Verdict {
  bool pass;
  RealForm residual;
};

/// Exact zero test of the frame identity.
inline Verdict verify(const WeightedFrame& f) {
  RealForm r = frame_residual(f);
  const bool pass = r.is_zero();
  return {pass, std::move(r)};
}

struct FloatVerdict {
  bool pass;
  FloatForm residual;
  double max_residual;
};

inline FloatVerdict verify(const FloatFrame& f, double tolerance) {
  FloatForm r = frame_residual(f);
  const double mx = max_abs_coefficient(r);
  return {mx <= tolerance, std::move(r), mx};
}

// ---------------------------------------------------------------------------
// Linear dependence among the frame forms

struct DependenceCertificate {
  /// sum_k omega_k w_k |<u_k, x>|^p = 0, max_k omega_k = 1.
  std::vector<Rational> omega;
  std::size_t pivot;
};

/// First relation (in insertion order) among the weighted frame forms, or
/// nullopt when they are linearly independent.
inline std::optional<DependenceCertificate> dependence(const WeightedFrame& f) {
  std::vector<RealForm> weighted;
  weighted.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    weighted.push_back(scale(frame_form(f.vectors()[k], f.p()), f.weights()[k]));
  const Matrix rows = coefficient_matrix(weighted);
  IncrementalEchelon ech(rows.front().size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto ins = ech.insert(rows[k]);
    if (ins.independent) continue;
    std::vector<Rational> omega(f.size(), Rational(0));
    std::copy(ins.relation.begin(), ins.relation.end(), omega.begin());
    auto max_it = std::max_element(omega.begin(), omega.end());
    if (sgn(*max_it) <= 0) {
      for (auto& w : omega) w = -w;
      max_it = std::max_element(omega.begin(), omega.end());
    }
    const Rational top = *max_it;
    for (auto& w : omega) w /= top;
    const auto pivot = static_cast<std::size_t>(max_it - omega.begin());
    return DependenceCertificate{std::move(omega), pivot};
  }
  return std::nullopt;
}

/// Subtracts the certificate relation from the frame identity: indices with
/// omega_k = 1 drop out and the rest get weight w_k (1 - omega_k).
inline WeightedFrame reduce_once(const WeightedFrame& f, const DependenceCertificate& cert) {
  if (cert.omega.size() != f.size()) throw Error("certificate length does not match frame size");
  const auto top = *std::max_element(cert.omega.begin(), cert.omega.end());
  if (top != 1 || cert.pivot >= f.size() || cert.omega[cert.pivot] != 1)
    throw Error("certificate is not normalized to max omega = 1");
  RealForm rel(real_dim(f.field()) * f.m(), f.p());
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!is_zero(cert.omega[k]))
      rel = rel + scale(frame_form(f.vectors()[k], f.p()), Rational(cert.omega[k] * f.weights()[k]));
  if (!rel.is_zero()) throw Error("certificate does not annihilate the frame forms");

  std::vector<KVector<Rational>> vs;
  std::vector<Rational> ws;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (cert.omega[k] == 1) continue;
    vs.push_back(f.vectors()[k]);
    ws.push_back(f.weights()[k] * (1 - cert.omega[k]));
  }
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), std::move(ws));
}

using ReductionObserver = std::function<void(const WeightedFrame& before,
                                             const DependenceCertificate& cert,
                                             const WeightedFrame& after)>;

/// Repeats dependence/reduce_once until the frame forms are independent.
inline WeightedFrame reduce_to_independent(const WeightedFrame& f,
                                           const ReductionObserver& observe = {}) {
  WeightedFrame cur = f;
  const std::size_t max_steps = f.size();
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto cert = dependence(cur);
    if (!cert) {
      // independent forms inside Phi_K(m, p)
      if (cur.size() > dim_phi(cur.field(), cur.m(), cur.p()))
        throw std::logic_error("independent frame larger than dim Phi");
      return cur;
    }
    WeightedFrame next = reduce_once(cur, *cert);
    if (observe) observe(cur, *cert, next);
    cur = std::move(next);
  }
  throw std::logic_error("reduction did not terminate within n steps");
}

// ---------------------------------------------------------------------------
// Scaling coefficients a_k(lambda)

struct ScalingForms {
  std::size_t m;
  unsigned p;
  /// a_k as forms of degree p/2 in lambda_1..lambda_m.
  std::vector<RealForm> coefficients;
};

/// (sum_i lambda_i |xi_i|^2)^{p/2} in the m + N variables (lambda, x).
inline RealForm scaled_norm_form(Field field, std::size_t m, unsigned p) {
  require_even(p);
  const std::size_t d = real_dim(field);
  const std::size_t total = m + d * m;
  RealForm base(total, 3);
  Exponent e(total, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      e[i] = 1;
      e[m + i * d + c] = 2;
      base.add_term(e, Rational(1));
      e[i] = 0;
      e[m + i * d + c] = 0;
    }
  return pow(base, p / 2);
}

/// sum_k a_k(lambda) |<u_k, x>|^p - (sum_i lambda_i |xi_i|^2)^{p/2}.
inline RealForm expansion_residual(const WeightedFrame& f, const ScalingForms& s) {
  const std::size_t n = real_dim(f.field()) * f.m();
  const std::size_t total = f.m() + n;
  RealForm r = -scaled_norm_form(f.field(), f.m(), f.p());
  for (std::size_t k = 0; k < f.size(); ++k)
    r = r + embed(s.coefficients[k], 0, total) * embed(frame_form(f.vectors()[k], f.p()), f.m(), total);
  return r;
}

/// a_k(lambda) = <<(sum_i lambda_i |xi_i|^2)^{p/2}, theta_k>> with theta the
/// dual basis of the frame forms. Requires a verified frame with independent
/// forms whose span contains the whole scaled-norm family.
inline ScalingForms scaling_coefficients(const WeightedFrame& f) {
  if (!verify(f).pass) throw Error("scaling coefficients need a verified frame");
  if (dependence(f)) throw Error("frame forms are dependent; run reduce_to_independent first");
  const DualBasis dual = dual_basis(frame_forms(f));
  const std::size_t m = f.m();
  const std::size_t n = real_dim(f.field()) * m;
  const MomentTable& table = moment_table(n);
  const RealForm family = scaled_norm_form(f.field(), m, f.p());

  ScalingForms out{m, f.p(), {}};
  Exponent lam(m), x(n), sum(n);
  for (const auto& theta : dual.duals) {
    RealForm a(m, f.p() / 2);
    for (const auto& [e, c] : family.terms()) {
      std::copy(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m), lam.begin());
      std::copy(e.begin() + static_cast<std::ptrdiff_t>(m), e.end(), x.begin());
      Rational inner(0);
      for (const auto& [et, ct] : theta.terms()) {
        for (std::size_t i = 0; i < n; ++i) sum[i] = static_cast<std::uint16_t>(x[i] + et[i]);
        inner += ct * table.moment(sum);
      }
      a.add_term(lam, c * inner);
    }
    out.coefficients.push_back(std::move(a));
  }
  if (!expansion_residual(f, out).is_zero())
    throw Error("frame forms do not span (sum lambda_i |xi_i|^2)^{p/2}; no scaling expansion exists");
  return out;
}

struct ScalingSearch {
  /// Simplex grid points per axis; 0 selects 33 for m = 2, 9 for m = 3, 5 otherwise.
  std::size_t grid = 0;
  /// Bisection iterations allowed.
  unsigned budget = 200;
  double tolerance = 1e-9;
};

struct ScalingSearchState {
  std::vector<double> lambda;
  double min_coefficient;
  std::vector<double> segment_start;
  std::vector<double> segment_end;
};

struct ScalingReduction {
  FloatFrame frame;
  std::vector<double> mu;
  std::vector<std::size_t> dropped;
  /// Max |coefficient| of the reduced frame's float residual.
  double residual;
  unsigned bisection_steps;
  ScalingSearchState state;
  /// Present when every mu_i is the square of a rational.
  std::optional<WeightedFrame> exact_frame;
  std::optional<bool> exact_verified;
};

inline std::size_t default_grid(std::size_t m) {
  if (m == 2) return 33;
  if (m == 3) return 9;
  return 5;
}

namespace detail {

// Interior lattice points of the simplex sum lambda = m with g points per axis.
inline std::vector<std::vector<double>> simplex_grid(std::size_t m, std::size_t g) {
  std::vector<std::vector<double>> pts;
  const double denom = static_cast<double>(g - 1) + 0.5 * static_cast<double>(m);
  std::vector<std::size_t> j(m, 0);
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == m) {
      j[var] = left;
      std::vector<double> lam(m);
      for (std::size_t i = 0; i < m; ++i)
        lam[i] = static_cast<double>(m) * (static_cast<double>(j[i]) + 0.5) / denom;
      pts.push_back(std::move(lam));
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      j[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, g - 1);
  return pts;
}

}  // namespace detail

/// Looks for lambda in the open cone with min_k a_k(lambda) < 0, bisects from
/// (1, ..., 1) to the first zero mu of min_k a_k, and rescales by
/// D = diag(sqrt(mu)): vectors D^{-1} u_k with weights a_k(mu), dropping the
/// coefficients that vanish. nullopt when no negative value is found.
inline std::optional<ScalingReduction> scaling_reduce(const WeightedFrame& f, const ScalingForms& s,
                                                      const ScalingSearch& search = {}) {
  if (!(search.tolerance > 0)) throw Error("tolerance must be positive");
  const std::size_t m = f.m();
  if (m < 2) return std::nullopt;
  const std::size_t g = search.grid == 0 ? default_grid(m) : search.grid;
  if (g < 1) throw Error("grid must have at least one point per axis");

  std::vector<FloatForm> coeffs;
  for (const auto& a : s.coefficients) coeffs.push_back(to_float(a));
  auto coefficient_values = [&](const std::vector<double>& lam) {
    std::vector<double> v;
    v.reserve(coeffs.size());
    for (const auto& a : coeffs) v.push_back(evaluate(a, std::span<const double>(lam)));
    return v;
  };
  auto a_hat = [&](const std::vector<double>& lam) {
    const auto v = coefficient_values(lam);
    return *std::min_element(v.begin(), v.end());
  };

  // grid search, then a local pattern search around the best node
  std::vector<double> best;
  double best_val = std::numeric_limits<double>::infinity();
  for (auto& lam : detail::simplex_grid(m, g)) {
    const double v = a_hat(lam);
    if (v < best_val) {
      best_val = v;
      best = std::move(lam);
    }
  }
  if (best_val >= 0) {
    double step = static_cast<double>(m) / (static_cast<double>(g) + 0.5 * static_cast<double>(m)) / 2;
    for (int round = 0; round < 16 && best_val >= 0; ++round, step /= 2) {
      bool improved = true;
      while (improved && best_val >= 0) {
        improved = false;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            if (i == j || best[j] - step <= 0) continue;
            auto trial = best;
            trial[i] += step;
            trial[j] -= step;
            const double v = a_hat(trial);
            if (v < best_val) {
              best_val = v;
              best = std::move(trial);
              improved = true;
            }
          }
      }
    }
  }
  if (best_val >= 0) return std::nullopt;

  const std::vector<double> ones(m, 1.0);
  auto point = [&](double t) {
    std::vector<double> lam(m);
    for (std::size_t i = 0; i < m; ++i) lam[i] = 1.0 + t * (best[i] - 1.0);
    return lam;
  };
  double lo = 0.0, hi = 1.0;
  double lo_val = a_hat(ones);
  unsigned steps = 0;
  while (steps < search.budget) {
    ++steps;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = a_hat(point(mid));
    if (v < 0) {
      hi = mid;
    } else {
      lo = mid;
      lo_val = v;
      if (v == 0) break;
    }
  }
  ScalingSearchState state{point(lo), lo_val, ones, best};
  if (lo_val > search.tolerance)
    throw BudgetExhausted("bisection budget of " + std::to_string(search.budget) +
                          " iterations exhausted; min coefficient still " + std::to_string(lo_val));

  const std::vector<double> mu = point(lo);
  const auto a_mu = coefficient_values(mu);
  std::vector<std::size_t> dropped;
  std::vector<KVector<double>> vs;
  std::vector<double> ws;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (a_mu[k] <= search.tolerance) {
      dropped.push_back(k);
      continue;
    }
    std::vector<KElement<double>> entries;
    const auto uf = to_float(f.vectors()[k]);
    for (std::size_t i = 0; i < m; ++i) entries.push_back(k_scale(uf[i], 1.0 / std::sqrt(mu[i])));
    vs.emplace_back(f.field(), std::move(entries));
    ws.push_back(a_mu[k]);
  }
  FloatFrame reduced(f.field(), m, f.p(), std::move(vs), std::move(ws));
  const double residual = verify(reduced, search.tolerance).max_residual;

  ScalingReduction out{std::move(reduced), mu, dropped, residual, steps, std::move(state), {}, {}};

  std::vector<Rational> roots;
  for (double v : mu) {
    auto r = rational_root(exact_from_double(v), 2);
    if (!r) break;
    roots.push_back(*r);
  }
  if (roots.size() == m) {
    std::vector<Rational> mu_exact;
    for (const auto& r : roots) mu_exact.push_back(r * r);
    std::vector<KVector<Rational>> evs;
    std::vector<Rational> ews;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (std::find(dropped.begin(), dropped.end(), k) != dropped.end()) continue;
      std::vector<KElement<Rational>> entries;
      for (std::size_t i = 0; i < m; ++i)
        entries.push_back(k_scale(f.vectors()[k][i], Rational(1 / roots[i])));
      evs.emplace_back(f.field(), std::move(entries));
      ews.push_back(evaluate(s.coefficients[k], std::span<const Rational>(mu_exact)));
    }
    if (std::all_of(ews.begin(), ews.end(), [](const Rational& w) { return w > 0; })) {
      WeightedFrame exact(f.field(), m, f.p(), std::move(evs), std::move(ews));
      out.exact_verified = verify(exact).pass;
      out.exact_frame = std::move(exact);
    }
  }
  return out;
}

inline std::optional<ScalingReduction> scaling_reduce(const WeightedFrame& f,
                                                      const ScalingSearch& search = {}) {
  if (!(search.tolerance > 0)) throw Error("tolerance must be positive");
  return scaling_reduce(f, scaling_coefficients(f), search);
}

// ---------------------------------------------------------------------------
// Unitary changes of coordinates

/// Reflection x -> x - v * (2 <v, x> / <v, v>), a K-unitary involution.
/// An empty normal is the identity.
struct KReflection {
  std::optional<KVector<Rational>> normal;

  KVector<Rational> apply(const KVector<Rational>& x) const {
    if (!normal) return x;
    const auto& v = *normal;
    const Rational vv = inner_product(v, v)[0];
    const KElement<Rational> s = k_scale(inner_product(v, x), Rational(2 / vv));
    return vec_sub(x, right_scale(v, s));
  }
};

inline WeightedFrame apply_unitary(const WeightedFrame& f, const KReflection& g) {
  std::vector<KVector<Rational>> vs;
  for (const auto& u : f.vectors()) vs.push_back(g.apply(u));
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), f.weights());
}

/// Right-multiplies each u_k by its own scalar.
inline WeightedFrame apply_gauge(const WeightedFrame& f, const std::vector<KElement<Rational>>& alpha) {
  if (alpha.size() != f.size()) throw MismatchError("one gauge scalar per frame vector");
  std::vector<KVector<Rational>> vs;
  for (std::size_t k = 0; k < f.size(); ++k) vs.push_back(right_scale(f.vectors()[k], alpha[k]));
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), f.weights());
}

/// Random rational reflection normal with integer coordinates in [-bound, bound].
inline KVector<Rational> random_normal(Field field, std::size_t m, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Rational> coords(real_dim(field) * m);
  do {
    for (auto& c : coords) c = dist(rng);
  } while (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_zero(c); }));
  return KVector<Rational>::from_real_coords(field, coords);
}

struct GenericRotation {
  WeightedFrame frame;
  /// Unit vector g e_1 with <u_k, e> != 0 for every k.
  KVector<Rational> e;
  KReflection g;
};

/// Finds an exact unitary g with <u_k, g e_1> != 0 for all k and returns the
/// frame (g^{-1} u_k). g is a rational reflection, so g^{-1} = g and
/// e = g e_1 has unit norm exactly.
inline GenericRotation generic_rotation(const WeightedFrame& f, std::uint64_t seed = 0) {
  auto generic = [&](const KVector<Rational>& e) {
    return std::none_of(f.vectors().begin(), f.vectors().end(),
                        [&](const auto& u) { return inner_product(u, e).is_zero(); });
  };
  const auto e1 = KVector<Rational>::unit(f.field(), f.m(), 0);
  if (generic(e1)) return {f, e1, KReflection{}};
  std::mt19937_64 rng(seed);
  int bound = 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    KReflection g{random_normal(f.field(), f.m(), bound, rng)};
    auto e = g.apply(e1);
    if (generic(e)) return {apply_unitary(f, g), std::move(e), std::move(g)};
    bound *= 2;
  }
  throw Error("no generic direction found");
}

// ---------------------------------------------------------------------------
// Catalog and unweighted export

enum class CatalogKind { OrthonormalP2, Real2Equiangular, Real2RationalP4 };

inline CatalogKind parse_catalog_kind(std::string_view s) {
  if (s == "orthonormal-p2") return CatalogKind::OrthonormalP2;
  if (s == "real2-equiangular") return CatalogKind::Real2Equiangular;
  if (s == "real2-rational-p4") return CatalogKind::Real2RationalP4;
  throw ParseError("unknown catalog kind '" + std::string(s) + "'");
}

inline AnyFrame catalog(Field field, std::size_t m, unsigned p, CatalogKind kind) {
  switch (kind) {
    case CatalogKind::OrthonormalP2: {
      if (p != 2 || m == 0) throw Error("orthonormal-p2 needs p = 2 and m >= 1");
      std::vector<KVector<Rational>> vs;
      for (std::size_t i = 0; i < m; ++i) vs.push_back(KVector<Rational>::unit(field, m, i));
      return WeightedFrame(field, m, 2, std::move(vs), std::vector<Rational>(m, Rational(1)));
    }
    case CatalogKind::Real2Equiangular: {
      if (field != Field::R || m != 2) throw Error("real2-equiangular needs K = R and m = 2");
      require_even(p);
      const unsigned count = p / 2 + 1;
      const double weight = std::ldexp(1.0, static_cast<int>(p)) /
                            (count * binomial(p, p / 2).get_d());
      std::vector<KVector<double>> vs;
      for (unsigned k = 0; k < count; ++k) {
        const double angle = k * std::numbers::pi / count;
        vs.push_back(KVector<double>(Field::R, {KElement<double>::real(Field::R, std::cos(angle)),
                                                KElement<double>::real(Field::R, std::sin(angle))}));
      }
      return FloatFrame(Field::R, 2, p, std::move(vs), std::vector<double>(count, weight));
    }
    case CatalogKind::Real2RationalP4: {
      if (field != Field::R || m != 2 || p != 4)
        throw Error("real2-rational-p4 needs K = R, m = 2, p = 4");
      auto vec = [](int a, int b) {
        return KVector<Rational>(Field::R, {KElement<Rational>::real(Field::R, a),
                                            KElement<Rational>::real(Field::R, b)});
      };
      return WeightedFrame(Field::R, 2, 4, {vec(1, 0), vec(0, 1), vec(1, 1), vec(1, -1)},
                           {Rational(2, 3), Rational(2, 3), Rational(1, 6), Rational(1, 6)});
    }
  }
  throw Error("unsupported catalog kind");
}

/// u_k <- u_k w_k^{1/p}, weights 1; every weight must be a p-th power in Q.
inline WeightedFrame to_unweighted_exact(const WeightedFrame& f) {
  std::vector<KVector<Rational>> vs;
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto root = rational_root(f.weights()[k], f.p());
    if (!root)
      throw Error("weight " + to_string(f.weights()[k]) + " is not a " + std::to_string(f.p()) +
                  "-th power of a rational");
    vs.push_back(real_scale(f.vectors()[k], *root));
  }
  return WeightedFrame(f.field(), f.m(), f.p(), std::move(vs), std::vector<Rational>(f.size(), Rational(1)));
}

inline FloatFrame to_unweighted_float(const FloatFrame& f) {
  std::vector<KVector<double>> vs;
  for (std::size_t k = 0; k < f.size(); ++k)
    vs.push_back(real_scale(f.vectors()[k], std::pow(f.weights()[k], 1.0 / f.p())));
  return FloatFrame(f.field(), f.m(), f.p(), std::move(vs), std::vector<double>(f.size(), 1.0));
}

inline FloatFrame to_unweighted_float(const WeightedFrame& f) { return to_unweighted_float(to_float(f)); }

}  // namespace lpembed
