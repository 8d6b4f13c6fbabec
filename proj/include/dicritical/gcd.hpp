#pragma once

// Multivariate gcd over Q. The common case (coprime inputs) is settled by a
// specialization certificate; the general case falls back to a recursive
// primitive pseudo-remainder sequence.

#include <dicritical/polynomial.hpp>
#include <dicritical/random.hpp>

#include <optional>
#include <vector>

namespace dicritical {

/// Scales so the lexicographically leading coefficient is 1.
inline Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_coefficient());
}

/// Exact division a / b; throws when b does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvariantError("division by the zero polynomial");
  const std::size_t n = a.nvars();
  Polynomial q(n), r = a;
  const Exponent& lb = b.leading_exponent();
  const Rational inv = Rational(1) / b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lb[i]) throw InvariantError("polynomial division is not exact");
      e[i] = lr[i] - lb[i];
    }
    Polynomial t = Polynomial::monomial(e, r.leading_coefficient() * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace detail {

inline std::optional<std::size_t> first_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return std::nullopt;
}

/// The univariate image of p in x_var after fixing all other variables.
inline UPoly specialize(const Polynomial& p, std::size_t var, const std::vector<Rational>& point) {
  std::vector<UPoly> images;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    images.push_back(v == var ? UPoly::linear(0, 1) : UPoly(point[v]));
  return p.evaluate_along(images);
}

}  // namespace detail

/// True only when a and b are certainly coprime. For each variable x, fixing
/// the others at a point where deg_x a is preserved bounds deg_x gcd by the
/// degree of the univariate gcd; if that is 0 for every x the gcd is constant.
inline bool coprime_certificate(const Polynomial& a, const Polynomial& b, std::uint64_t seed = 0x5eedULL,
                                int attempts = 3) {
  if (a.is_zero() || b.is_zero()) return a.is_constant() || b.is_constant();
  if (a.is_constant() || b.is_constant()) return true;
  Rng rng(seed);
  for (std::size_t var = 0; var < a.nvars(); ++var) {
    if (!a.depends_on(var) || !b.depends_on(var)) continue;
    bool certified = false;
    for (int t = 0; t < attempts && !certified; ++t) {
      std::vector<Rational> point(a.nvars());
      for (auto& x : point) x = Rational(rng.nonzero_integer(97));
      UPoly ua = detail::specialize(a, var, point);
      UPoly ub = detail::specialize(b, var, point);
      if (ua.degree() != static_cast<long>(a.degree_in(var))) continue;
      certified = UPoly::gcd(ua, ub).degree() == 0;
    }
    if (!certified) return false;
  }
  return true;
}

inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

/// gcd of the coefficients of p viewed as a polynomial in x_var.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : polynomial_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Pseudo-remainder of a by b in x_var.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const auto db = b.degree_in(var);
  const Polynomial lb = b.coefficients_in(var).back();
  const Polynomial x = Polynomial::variable(a.nvars(), var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const auto dr = r.degree_in(var);
    const Polynomial lr = r.coefficients_in(var).back();
    r = r * lb - lr * x.pow(dr - db) * b;
  }
  return r;
}

inline Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return make_monic(divide_exact(p, content_in(p, var)));
}

}  // namespace detail

/// Monic gcd (leading coefficient 1); gcd(0, 0) = 0.
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.nvars(), 1);
  // Common monomial factors are cheap to split off and frequent after blow-ups.
  Exponent ma = a.monomial_content(), mb = b.monomial_content(), m(a.nvars());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ma[i], mb[i]);
  Polynomial mono = Polynomial::monomial(m, 1);
  Polynomial ra = a.divide_monomial(m), rb = b.divide_monomial(m);
  if (coprime_certificate(ra, rb)) return mono;

  const std::size_t var = *detail::first_variable(ra, rb);
  if (!ra.depends_on(var)) return mono * polynomial_gcd(ra, detail::content_in(rb, var));
  if (!rb.depends_on(var)) return mono * polynomial_gcd(detail::content_in(ra, var), rb);
  Polynomial ca = detail::content_in(ra, var), cb = detail::content_in(rb, var);
  Polynomial c = polynomial_gcd(ca, cb);
  Polynomial p = make_monic(divide_exact(ra, ca)), q = make_monic(divide_exact(rb, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero() && q.depends_on(var)) {
    Polynomial r = detail::pseudo_remainder(p, q, var);
    p = std::move(q);
    q = r.is_zero() ? r : detail::primitive_part(r, var);
  }
  // q == 0: p is the primitive gcd; otherwise q is free of var and the
  // primitive parts are coprime in var.
  Polynomial g = q.is_zero() ? p : Polynomial::constant(a.nvars(), 1);
  return make_monic(mono * c * g);
}

}  // namespace dicritical
