#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicritical {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Malformed or inconsistent user input (CLI exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed one of its mathematical invariants (CLI exit status 1).
class InvariantError : public std::runtime_error {
 public:
  InvariantError(const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), index_(index) {}
  /// 1-based divisor index the violation refers to, 0 when not index-specific.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

using IntVector = std::vector<BigInt>;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

inline std::string join(const IntVector& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

}  // namespace dicritical
