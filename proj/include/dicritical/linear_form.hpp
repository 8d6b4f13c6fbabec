#pragma once

#include <dicritical/numeric.hpp>

#include <map>
#include <string>

namespace dicritical {

/// Affine form c + sum_j coeff_j * k_j over the rationals. Unknowns are keyed
/// by the 1-based index j of the later blow-up whose curvette exponent k_j
/// they represent. Zero coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  static LinearForm unknown(std::size_t j, Rational coeff = 1) {
    LinearForm f;
    f.add_coefficient(j, coeff);
    return f;
  }

  const Rational& constant() const noexcept { return constant_; }
  const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  bool is_constant() const noexcept { return coeffs_.empty(); }

  void add_coefficient(std::size_t j, const Rational& c) {
    if (c == 0) return;
    Rational& slot = coeffs_[j];
    slot += c;
    if (slot == 0) coeffs_.erase(j);
  }

  LinearForm& operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [j, c] : o.coeffs_) add_coefficient(j, c);
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) { return *this += o * Rational(-1); }
  LinearForm& operator*=(const Rational& s) {
    if (s == 0) return *this = LinearForm();
    constant_ *= s;
    for (auto& [j, c] : coeffs_) c *= s;
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }

  /// Unknowns missing from k evaluate as zero.
  Rational evaluate(const std::map<std::size_t, BigInt>& k) const {
    Rational out = constant_;
    for (const auto& [j, c] : coeffs_) {
      auto it = k.find(j);
      if (it != k.end()) out += c * Rational(it->second);
    }
    return out;
  }

  /// Value with every unknown set to the same K.
  Rational evaluate_uniform(const BigInt& K) const {
    Rational slope = 0;
    for (const auto& [j, c] : coeffs_) slope += c;
    return constant_ + slope * Rational(K);
  }

  bool all_coefficients_positive() const {
    for (const auto& [j, c] : coeffs_)
      if (c <= 0) return false;
    return true;
  }

  /// "5 + 3/2 k_4 + k_5"; with a single unknown the index is dropped when
  /// requested so the output reads like "5 + 3/2 k".
  std::string to_string(bool bare_single_unknown = false) const {
    std::string out;
    if (constant_ != 0 || coeffs_.empty()) out = dicritical::to_string(constant_);
    const bool bare = bare_single_unknown && coeffs_.size() == 1;
    for (const auto& [j, c] : coeffs_) {
      Rational mag = abs(c);
      std::string term = mag == 1 ? "" : dicritical::to_string(mag) + " ";
      term += bare ? "k" : "k_" + std::to_string(j);
      if (out.empty()) {
        out = (c < 0 ? "-" : "") + term;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  Rational constant_ = 0;
  std::map<std::size_t, Rational> coeffs_;
};

}  // namespace dicritical
