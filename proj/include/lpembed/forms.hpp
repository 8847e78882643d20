#pragma once

// Homogeneous real polynomials in the N = d*m real coordinates of K^m and
// their integrals over the unit sphere S^{N-1} (normalized measure).
//
// Coordinate (i, c), entry i of the vector and real component c of that
// entry, is variable i*d + c.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpembed/error.hpp"
#include "lpembed/kscalar.hpp"
#include "lpembed/rational.hpp"

namespace lpembed {

using Exponent = std::vector<std::uint16_t>;

inline unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded-lexicographic order: lower degree first, then lexicographically
/// larger exponent first (x1^4 precedes x1^3 x2).
struct GrlexOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

/// All exponent vectors of the given degree in n variables, in grlex order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      cur[var] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

template <class T>
class BasicForm {
 public:
  using Terms = std::map<Exponent, T, GrlexOrder>;

  BasicForm(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {}

  static BasicForm constant(std::size_t num_vars, const T& c) {
    BasicForm f(num_vars, 0);
    f.add_term(Exponent(num_vars, 0), c);
    return f;
  }

  static BasicForm monomial(const Exponent& e, const T& c) {
    BasicForm f(e.size(), total_degree(e));
    f.add_term(e, c);
    return f;
  }

  static BasicForm variable(std::size_t num_vars, std::size_t index) {
    Exponent e(num_vars, 0);
    e.at(index) = 1;
    return monomial(e, T(1));
  }

  std::size_t num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T{} : it->second;
  }

  /// Accumulates c * x^e; zero results are erased.
  void add_term(const Exponent& e, const T& c) {
    if (e.size() != num_vars_) throw MismatchError("exponent length does not match variable count");
    if (total_degree(e) != degree_) throw MismatchError("term degree does not match form degree");
    if (lpembed::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, canonical(c));
    if (!inserted) {
      it->second += c;
      if (lpembed::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_;
  unsigned degree_;
  Terms terms_;
};

using RealForm = BasicForm<Rational>;
using FloatForm = BasicForm<double>;

template <class T>
BasicForm<T> operator+(const BasicForm<T>& a, const BasicForm<T>& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
    throw MismatchError("cannot add forms of different arity or degree");
  BasicForm<T> r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

template <class T>
BasicForm<T> scale(const BasicForm<T>& a, const T& s) {
  BasicForm<T> r(a.num_vars(), a.degree());
  if (lpembed::is_zero(s)) return r;
  for (const auto& [e, c] : a.terms()) r.add_term(e, c * s);
  return r;
}

template <class T>
BasicForm<T> operator-(const BasicForm<T>& a) {
  return scale(a, T(-1));
}

template <class T>
BasicForm<T> operator-(const BasicForm<T>& a, const BasicForm<T>& b) {
  return a + (-b);
}

template <class T>
BasicForm<T> operator*(const BasicForm<T>& a, const BasicForm<T>& b) {
  if (a.num_vars() != b.num_vars()) throw MismatchError("cannot multiply forms of different arity");
  BasicForm<T> r(a.num_vars(), a.degree() + b.degree());
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

template <class T>
BasicForm<T> pow(const BasicForm<T>& base, unsigned k) {
  BasicForm<T> r = BasicForm<T>::constant(base.num_vars(), T(1));
  for (unsigned i = 0; i < k; ++i) r = r * base;
  return r;
}

template <class T>
T evaluate(const BasicForm<T>& f, std::span<const T> point) {
  if (point.size() != f.num_vars()) throw MismatchError("evaluation point has wrong length");
  T sum{};
  for (const auto& [e, c] : f.terms()) {
    T term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

inline FloatForm to_float(const RealForm& f) {
  FloatForm r(f.num_vars(), f.degree());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c.get_d());
  return r;
}

/// Largest absolute coefficient (0 for the zero form).
template <class T>
double max_abs_coefficient(const BasicForm<T>& f) {
  double m = 0.0;
  for (const auto& [e, c] : f.terms()) m = std::max(m, std::abs(to_double(c)));
  return m;
}

/// Re-indexes f into a form in `total` variables with its variables placed
/// starting at `offset`.
template <class T>
BasicForm<T> embed(const BasicForm<T>& f, std::size_t offset, std::size_t total) {
  if (offset + f.num_vars() > total) throw MismatchError("embedding does not fit");
  BasicForm<T> r(total, f.degree());
  Exponent e(total, 0);
  for (const auto& [ef, c] : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    std::copy(ef.begin(), ef.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(e, c);
  }
  return r;
}

/// Canonical text: "[(e1,...,eN): num/den, ...]" in grlex order.
inline std::string to_string(const RealForm& f) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << ", ";
    first = false;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "): " << to_string(c);
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Sphere moments

/// int_{S^{N-1}} x^beta dsigma for the normalized measure:
/// zero if any beta_i is odd, else prod (2b_i - 1)!! / (N (N+2) ... (N+2a-2))
/// with beta = 2b and a = |b|.
inline Rational sphere_moment_formula(const Exponent& beta, std::size_t n) {
  if (n == 0) throw MismatchError("sphere dimension must be positive");
  if (beta.size() != n) throw MismatchError("exponent length does not match sphere dimension");
  Integer num(1);
  unsigned a = 0;
  for (auto b2 : beta) {
    if (b2 % 2 != 0) return Rational(0);
    const unsigned b = b2 / 2u;
    a += b;
    for (unsigned k = 1; k < 2 * b; k += 2) num *= k;
  }
  Integer den(1);
  for (unsigned j = 0; j < a; ++j) den *= static_cast<unsigned long>(n + 2 * j);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Memoized moments for one sphere dimension. Concurrent lookups are safe;
/// fills are idempotent.
class MomentTable {
 public:
  explicit MomentTable(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return n_; }

  Rational moment(const Exponent& beta) const {
    for (auto b : beta)
      if (b % 2 != 0) return Rational(0);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(beta); it != cache_.end()) return it->second;
    }
    Rational value = sphere_moment_formula(beta, n_);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(beta, std::move(value)).first->second;
  }

  std::size_t cached() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  std::size_t n_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Exponent, Rational> cache_;
};

/// Process-wide table for S^{n-1}.
inline const MomentTable& moment_table(std::size_t n) {
  static std::mutex registry_mutex;
  static std::map<std::size_t, std::unique_ptr<MomentTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_unique<MomentTable>(n);
  return *slot;
}

inline Rational sphere_moment(const Exponent& beta, std::size_t n) {
  if (beta.size() != n) throw MismatchError("exponent length does not match sphere dimension");
  return moment_table(n).moment(beta);
}

/// <<f, g>> = int_S f g dsigma.
inline Rational form_inner(const RealForm& f, const RealForm& g) {
  if (f.num_vars() != g.num_vars()) throw MismatchError("forms have different variable counts");
  if ((f.degree() + g.degree()) % 2 != 0) return Rational(0);
  const MomentTable& table = moment_table(f.num_vars());
  Rational sum(0);
  Exponent e(f.num_vars());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      bool odd = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>(ef[i] + eg[i]);
        odd = odd || (e[i] % 2 != 0);
      }
      if (odd) continue;
      sum += cf * cg * table.moment(e);
    }
  }
  return sum;
}

/// Integrates the last `trailing` variables of f over S^{trailing-1}; the
/// result is a form in the leading variables. Every term must have the same
/// degree in the trailing block.
inline RealForm integrate_trailing(const RealForm& f, std::size_t trailing) {
  if (trailing == 0 || trailing > f.num_vars()) throw MismatchError("bad trailing block size");
  const std::size_t lead = f.num_vars() - trailing;
  const MomentTable& table = moment_table(trailing);
  std::map<Exponent, Rational, GrlexOrder> acc;
  std::optional<unsigned> tail_degree;
  Exponent head(lead), tail(trailing);
  for (const auto& [e, c] : f.terms()) {
    std::copy(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(lead), head.begin());
    std::copy(e.begin() + static_cast<std::ptrdiff_t>(lead), e.end(), tail.begin());
    const unsigned td = total_degree(tail);
    if (tail_degree && *tail_degree != td)
      throw MismatchError("form is not homogeneous in the integrated block");
    tail_degree = td;
    Rational mom = table.moment(tail);
    if (is_zero(mom)) continue;
    acc[head] += c * mom;
  }
  RealForm r(lead, f.degree() - tail_degree.value_or(0));
  for (const auto& [e, c] : acc) r.add_term(e, c);
  return r;
}

// ---------------------------------------------------------------------------
// Frame building blocks

/// Real coordinates of <u, x> as linear forms in the N coordinates of x.
template <class T>
std::vector<BasicForm<T>> inner_product_components(const KVector<T>& u) {
  const std::size_t d = real_dim(u.field());
  const std::size_t n = d * u.size();
  std::vector<BasicForm<T>> comps(d, BasicForm<T>(n, 1));
  Exponent e(n, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const KElement<T> cu = k_conj(u[i]);
    for (std::size_t a = 0; a < d; ++a) {
      if (lpembed::is_zero(cu[a])) continue;
      for (std::size_t b = 0; b < d; ++b) {
        const auto bp = basis_product(a, b);
        e[i * d + b] = 1;
        comps[bp.index].add_term(e, bp.sign > 0 ? cu[a] : T(-cu[a]));
        e[i * d + b] = 0;
      }
    }
  }
  return comps;
}

/// |<u, x>|^2 as a degree-2 form in the real coordinates of x.
template <class T>
BasicForm<T> abs_inner_sq_form(const KVector<T>& u) {
  if (u.is_zero()) throw Error("frame vectors must be nonzero");
  const auto comps = inner_product_components(u);
  BasicForm<T> r(comps.front().num_vars(), 2);
  for (const auto& c : comps) r = r + c * c;
  return r;
}

inline void require_even(unsigned p) {
  if (p == 0 || p % 2 != 0) throw Error("p must be a positive even integer, got " + std::to_string(p));
}

/// |<u, x>|^p.
template <class T>
BasicForm<T> frame_form(const KVector<T>& u, unsigned p) {
  require_even(p);
  return pow(abs_inner_sq_form(u), p / 2);
}

/// <x, x>^{p/2}.
template <class T = Rational>
BasicForm<T> norm_power_form(Field field, std::size_t m, unsigned p) {
  require_even(p);
  const std::size_t n = real_dim(field) * m;
  BasicForm<T> sq(n, 2);
  Exponent e(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    e[v] = 2;
    sq.add_term(e, T(1));
    e[v] = 0;
  }
  return pow(sq, p / 2);
}

}  // namespace lpembed
