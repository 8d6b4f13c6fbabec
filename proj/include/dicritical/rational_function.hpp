#pragma once

#include <dicritical/gcd.hpp>
#include <dicritical/polynomial.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dicritical {

/// Reduced quotient num/den over Q. The denominator is scaled so that its
/// constant term is 1 (or, when it has none, its leading coefficient), which
/// makes the representation canonical.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars = 0)
      : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

  /// Trusted constructor: the caller guarantees gcd(num, den) = 1.
  static RationalFunction coprime(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  static RationalFunction constant(std::size_t nvars, const Rational& c) {
    return RationalFunction(Polynomial::constant(nvars, c));
  }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InvariantError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// (h - a)/(h - b). For reduced h = p/q this is (p - a q)/(p - b q), which
  /// stays reduced: a common factor would divide (a - b) q and hence p.
  RationalFunction mobius(const Rational& a, const Rational& b) const {
    if (a == b) throw InputError("Moebius constants must differ");
    Polynomial n = num_ - den_ * a;
    Polynomial d = num_ - den_ * b;
    if (d.is_zero()) throw InvariantError("Moebius constant b equals the constant function");
    return coprime(std::move(n), std::move(d));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw InvariantError("rational function with zero denominator");
    if (num_.nvars() != den_.nvars()) throw InputError("numerator and denominator over different variables");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(num_.nvars(), 1);
      return;
    }
    Polynomial g = polynomial_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    normalize();
  }
  void normalize() {
    if (den_.is_zero()) throw InvariantError("rational function with zero denominator");
    Rational lc = den_.constant_term();
    if (lc == 0) lc = den_.leading_coefficient();
    if (lc != 1) {
      num_ *= Rational(1) / lc;
      den_ *= Rational(1) / lc;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace dicritical
