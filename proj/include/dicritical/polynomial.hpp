#pragma once

#include <dicritical/numeric.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dicritical {

// --------------------------------------------------------------------------
// Univariate polynomials over Q, dense, lowest degree first.

inline Rational rational_pow(const Rational& base, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);  // already canonical: powers of coprime integers stay coprime
}

class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// a + b t
  static UPoly linear(const Rational& a, const Rational& b) { return UPoly(std::vector<Rational>{a, b}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
  }
  friend UPoly operator*(UPoly a, const Rational& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Quotient and remainder by a nonzero divisor.
  static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.is_zero()) throw InvariantError("univariate division by zero");
    if (a.degree() < b.degree()) return {UPoly(), std::move(a)};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational inv = 1 / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      const Rational f = a.lead() * inv;
      q[shift] = f;
      for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i + shift] -= f * b.c_[i];
      a.c_.pop_back();
      a.trim();
    }
    return {UPoly(std::move(q)), std::move(a)};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / lead());
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(std::move(a), b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  Rational evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// --------------------------------------------------------------------------
// Sparse multivariate polynomials over Q in a fixed number of variables.

using Exponent = std::vector<std::uint32_t>;

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t var) {
    Exponent e(nvars, 0);
    e.at(var) = 1;
    Polynomial p(nvars);
    p.add_term(e, 1);
    return p;
  }
  static Polynomial monomial(const Exponent& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }
  bool is_zero() const noexcept { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && is_zero_exponent(t_.begin()->first));
  }
  Rational constant_term() const {
    auto it = t_.find(Exponent(n_, 0));
    return it == t_.end() ? Rational(0) : it->second;
  }
  /// Coefficient of the lexicographically largest exponent.
  const Rational& leading_coefficient() const {
    if (t_.empty()) throw InvariantError("leading coefficient of the zero polynomial");
    return t_.rbegin()->second;
  }
  const Exponent& leading_exponent() const {
    if (t_.empty()) throw InvariantError("leading exponent of the zero polynomial");
    return t_.rbegin()->first;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != n_) throw InputError("exponent length does not match the number of variables");
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  Polynomial pow(unsigned long e) const {
    Polynomial result = constant(n_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1UL) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : t_) {
      std::uint32_t s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[var]);
    return d;
  }
  /// Largest power of x_var dividing this polynomial (0 for the zero polynomial).
  std::uint32_t order_in(std::size_t var) const {
    if (t_.empty()) return 0;
    std::uint32_t d = UINT32_MAX;
    for (const auto& [e, c] : t_) d = std::min(d, e[var]);
    return d;
  }
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Componentwise minimum of all exponents.
  Exponent monomial_content() const {
    Exponent out(n_, 0);
    if (t_.empty()) return out;
    out = t_.begin()->first;
    for (const auto& [e, c] : t_)
      for (std::size_t i = 0; i < n_; ++i) out[i] = std::min(out[i], e[i]);
    return out;
  }
  Polynomial divide_monomial(const Exponent& m) const {
    Polynomial out(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      for (std::size_t i = 0; i < n_; ++i) {
        if (f[i] < m[i]) throw InvariantError("monomial division is not exact");
        f[i] -= m[i];
      }
      out.t_.emplace_hint(out.t_.end(), std::move(f), c);
    }
    return out;
  }

  /// x_var := value.
  Polynomial evaluate(std::size_t var, const Rational& value) const {
    Polynomial out(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      f[var] = 0;
      Rational v = rational_pow(value, e[var]);
      out.add_term(f, c * v);
    }
    return out;
  }

  /// Coefficients in x_var: result[k] is the coefficient of x_var^k (free of x_var).
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(n_));
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      f[var] = 0;
      out[e[var]].add_term(f, c);
    }
    return out;
  }

  /// x_var := image, all other variables unchanged.
  Polynomial substitute(std::size_t var, const Polynomial& image) const {
    check(image);
    auto coeffs = coefficients_in(var);
    Polynomial out(n_);
    Polynomial power = constant(n_, 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k) power *= image;
      if (!coeffs[k].is_zero()) out += coeffs[k] * power;
    }
    return out;
  }

  /// Apply a linear map on exponents: the exponent e is sent to transform(e).
  template <class F>
  Polynomial map_exponents(F&& transform) const {
    Polynomial out(n_);
    for (const auto& [e, c] : t_) out.add_term(transform(e), c);
    return out;
  }

  /// Substitute univariate polynomials for every variable.
  UPoly evaluate_along(const std::vector<UPoly>& images) const {
    if (images.size() != n_) throw InputError("one image per variable required");
    std::vector<std::vector<UPoly>> powers(n_);
    auto power = [&](std::size_t v, std::uint32_t k) -> const UPoly& {
      auto& cache = powers[v];
      if (cache.empty()) cache.emplace_back(Rational(1));
      while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
      return cache[k];
    };
    UPoly out;
    for (const auto& [e, c] : t_) {
      UPoly term(c);
      for (std::size_t v = 0; v < n_; ++v)
        if (e[v]) term = term * power(v, e[v]);
      out = out + term;
    }
    return out;
  }

  Rational evaluate_all(const std::vector<Rational>& point) const {
    if (point.size() != n_) throw InputError("one value per variable required");
    Rational out = 0;
    for (const auto& [e, c] : t_) {
      Rational term = c;
      for (std::size_t v = 0; v < n_; ++v)
        if (e[v]) term *= rational_pow(point[v], e[v]);
      out += term;
    }
    return out;
  }

  /// Human-readable form, lowest total degree first: "1 + 3/2 y*z - x^2".
  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::vector<std::pair<std::uint32_t, const Terms::value_type*>> order;
    for (const auto& term : t_) {
      std::uint32_t deg = 0;
      for (auto x : term.first) deg += x;
      order.emplace_back(deg, &term);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second->first > b.second->first;
    });
    std::string out;
    for (const auto& [deg, term] : order) {
      const auto& [e, c] = *term;
      std::string mono;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!e[v]) continue;
        if (!mono.empty()) mono += "*";
        mono += v < names.size() ? names[v] : "x" + std::to_string(v);
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      Rational mag = abs(c);
      std::string text;
      if (mono.empty()) text = dicritical::to_string(mag);
      else if (mag == 1) text = mono;
      else text = dicritical::to_string(mag) + (mag.get_den() == 1 ? "*" : " ") + mono;
      if (out.empty()) out = (c < 0 ? "-" : "") + text;
      else out += (c < 0 ? " - " : " + ") + text;
    }
    return out;
  }

 private:
  static bool is_zero_exponent(const Exponent& e) {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
  }
  void check(const Polynomial& o) const {
    if (o.n_ != n_) throw InputError("polynomials over different variable sets");
  }

  std::size_t n_;
  Terms t_;
};

}  // namespace dicritical
