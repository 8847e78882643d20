#pragma once

// The space Phi_K(m, p) of real degree-p forms on K^m that are invariant
// under x -> x*alpha for unit scalars alpha, built by exact averaging over
// the unit group {+-1}, S^1 or S^3.

#include <map>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include "lpembed/error.hpp"
#include "lpembed/forms.hpp"
#include "lpembed/kscalar.hpp"
#include "lpembed/linalg.hpp"

namespace lpembed {

namespace detail {

// Coordinates of (x*alpha) as bilinear forms in (x, alpha): N + d variables.
inline std::vector<RealForm> right_action_coordinates(Field field, std::size_t m) {
  const std::size_t d = real_dim(field);
  const std::size_t n = d * m;
  std::vector<RealForm> y(n, RealForm(n + d, 2));
  Exponent e(n + d, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const auto bp = basis_product(a, b);
        e[i * d + a] = 1;
        e[n + b] = 1;
        y[i * d + bp.index].add_term(e, Rational(bp.sign));
        e[i * d + a] = 0;
        e[n + b] = 0;
      }
  return y;
}

}  // namespace detail

/// Pi(phi)(x) = int phi(x*alpha) d alpha over the unit group of K.
inline RealForm unit_group_average(const RealForm& phi, Field field, std::size_t m) {
  const std::size_t d = real_dim(field);
  const std::size_t n = d * m;
  if (phi.num_vars() != n) throw MismatchError("form has the wrong number of variables for K^m");
  const auto y = detail::right_action_coordinates(field, m);

  // powers[v][k] = y_v^k, filled on demand
  std::vector<std::vector<RealForm>> powers(n);
  auto power = [&](std::size_t v, unsigned k) -> const RealForm& {
    auto& list = powers[v];
    if (list.empty()) list.push_back(RealForm::constant(n + d, Rational(1)));
    while (list.size() <= k) list.push_back(list.back() * y[v]);
    return list[k];
  };

  RealForm out(n, phi.degree());
  for (const auto& [e, c] : phi.terms()) {
    RealForm prod = RealForm::constant(n + d, c);
    for (std::size_t v = 0; v < n; ++v)
      if (e[v] != 0) prod = prod * power(v, e[v]);
    out = out + integrate_trailing(prod, d);
  }
  return out;
}

inline Matrix gram_matrix(std::span<const RealForm> forms) {
  const std::size_t k = forms.size();
  Matrix g(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      g[i][j] = form_inner(forms[i], forms[j]);
      if (j != i) g[j][i] = g[i][j];
    }
  return g;
}

/// Coefficient rows of `forms` over the union of their monomials.
inline Matrix coefficient_matrix(std::span<const RealForm> forms) {
  std::map<Exponent, std::size_t, GrlexOrder> columns;
  for (const auto& f : forms)
    for (const auto& [e, c] : f.terms()) columns.try_emplace(e, 0);
  std::size_t next = 0;
  for (auto& [e, idx] : columns) idx = next++;
  Matrix rows(forms.size(), std::vector<Rational>(columns.size(), Rational(0)));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& [e, c] : forms[i].terms()) rows[i][columns.at(e)] = c;
  return rows;
}

struct PhiBasis {
  Field field;
  std::size_t m;
  unsigned p;
  std::vector<RealForm> basis;
  Matrix gram;
  Matrix gram_inverse;

  std::size_t dim() const { return basis.size(); }
};

/// Averages every degree-p monomial and keeps the earliest (grlex) ones that
/// are linearly independent.
inline PhiBasis build_phi_basis(Field field, std::size_t m, unsigned p) {
  require_even(p);
  if (m == 0) throw Error("m must be at least 1");
  const std::size_t n = real_dim(field) * m;
  const auto monomials = monomials_of_degree(n, p);
  std::map<Exponent, std::size_t, GrlexOrder> column;
  for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);

  PhiBasis out{field, m, p, {}, {}, {}};
  IncrementalEchelon ech(monomials.size());
  std::vector<Rational> row(monomials.size());
  for (const auto& mono : monomials) {
    RealForm avg = unit_group_average(RealForm::monomial(mono, Rational(1)), field, m);
    if (avg.is_zero()) continue;
    std::fill(row.begin(), row.end(), Rational(0));
    for (const auto& [e, c] : avg.terms()) row[column.at(e)] = c;
    if (ech.insert(row).independent) out.basis.push_back(std::move(avg));
  }
  out.gram = gram_matrix(out.basis);
  auto inv = inverse(out.gram);
  if (!inv) throw Error("Gram matrix of the invariant basis is singular");
  out.gram_inverse = std::move(*inv);
  return out;
}

/// Memoized build_phi_basis; safe to call from several threads.
inline const PhiBasis& phi_basis(Field field, std::size_t m, unsigned p) {
  static std::mutex mutex;
  static std::map<std::tuple<Field, std::size_t, unsigned>, PhiBasis> cache;
  const auto key = std::make_tuple(field, m, p);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  PhiBasis built = build_phi_basis(field, m, p);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

inline std::size_t dim_phi(Field field, std::size_t m, unsigned p) {
  return phi_basis(field, m, p).dim();
}

/// dim Phi_K(m, p) - 1, the bound on the least n admitting an isometric
/// embedding l_2^m -> l_p^n. Only meaningful for m >= 2.
inline std::size_t upper_bound(Field field, std::size_t m, unsigned p) {
  if (m < 2)
    throw Error("upper bound requires m >= 2; for m = 1 the minimal n is 1");
  return dim_phi(field, m, p) - 1;
}

struct DualBasis {
  std::vector<RealForm> sources;
  std::vector<RealForm> duals;
};

/// theta_k = sum_j (G^-1)_{kj} b_j, so that <<b_j, theta_k>> = delta_jk.
inline DualBasis dual_basis(std::vector<RealForm> forms) {
  if (forms.empty()) throw Error("dual basis of an empty system");
  for (const auto& f : forms)
    if (f.num_vars() != forms.front().num_vars() || f.degree() != forms.front().degree())
      throw MismatchError("dual basis requires forms of equal arity and degree");
  const auto g = gram_matrix(forms);
  const auto inv = inverse(g);
  if (!inv) throw Error("singular Gram matrix: the forms are linearly dependent");
  DualBasis out{std::move(forms), {}};
  const std::size_t k = out.sources.size();
  out.duals.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    RealForm theta(out.sources.front().num_vars(), out.sources.front().degree());
    for (std::size_t j = 0; j < k; ++j) theta = theta + scale(out.sources[j], (*inv)[i][j]);
    out.duals.push_back(std::move(theta));
  }
  return out;
}

}  // namespace lpembed
