#pragma once

// Exponent solvers producing certificates: the support problem (prescribed
// set of zero orders), the single-dicritical construction with special
// hypersurfaces, its refinement controlling the later divisors, and the
// Moebius-product combination for several dicriticals.

#include <dicritical/linear_form.hpp>
#include <dicritical/matrix.hpp>
#include <dicritical/modification.hpp>
#include <dicritical/numeric.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dicritical {

// --------------------------------------------------------------------------
// Classification by orders.

enum class DivisorStatus { non_dicritical, dicritical_pos, dicritical_if_split };

inline const char* status_name(DivisorStatus s) {
  switch (s) {
    case DivisorStatus::non_dicritical: return "non_dicritical";
    case DivisorStatus::dicritical_pos: return "dicritical_pos";
    case DivisorStatus::dicritical_if_split: return "dicritical_if_split";
  }
  return "?";
}

inline std::vector<DivisorStatus> classify(const IntVector& N, const IntVector& r) {
  if (N.size() != r.size()) throw InputError("classify: order and exponent vectors differ in length");
  std::vector<DivisorStatus> out;
  out.reserve(N.size());
  for (std::size_t i = 0; i < N.size(); ++i) {
    if (N[i] != 0) out.push_back(DivisorStatus::non_dicritical);
    else if (r[i] != 0) out.push_back(DivisorStatus::dicritical_pos);
    else out.push_back(DivisorStatus::dicritical_if_split);
  }
  return out;
}

// --------------------------------------------------------------------------
// Support problem: r * A = N with N_j = 0 exactly on J.

struct SupportCertificate {
  IndexSet J;
  IntVector r;
  IntVector N;
  std::vector<bool> needs_split;
};

inline SupportCertificate solve_support(const ValuationMatrix& v, const IndexSet& J,
                                        const std::map<std::size_t, BigInt>& offs = {}) {
  const std::size_t m = v.a.rows();
  if (J.empty()) throw InputError("support set J must be nonempty");
  for (std::size_t j : J)
    if (j < 1 || j > m) throw InputError("support index " + std::to_string(j) + " out of range");
  SupportCertificate cert;
  cert.J = J;
  cert.N.assign(m, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (J.contains(j)) continue;
    auto it = offs.find(j);
    BigInt target = it == offs.end() ? BigInt(1) : it->second;
    if (target == 0) throw InputError("offs must be nonzero outside J (index " + std::to_string(j) + ")");
    cert.N[j - 1] = target;
  }
  for (const auto& [j, val] : offs)
    if (J.contains(j) && val != 0) throw InputError("offs given for an index of J");
  auto r = solve_left_integral(v.a, cert.N);
  if (!r) throw InvariantError("valuation matrix is not unimodular; no integral solution");
  cert.r = std::move(*r);
  if (row_times(cert.r, v.a) != cert.N) throw InvariantError("r * A does not reproduce the target orders");
  cert.needs_split.resize(m);
  for (std::size_t i = 0; i < m; ++i) cert.needs_split[i] = cert.r[i] == 0 && J.contains(i + 1);
  return cert;
}

// --------------------------------------------------------------------------
// Single dicritical E_s among E_1..E_s.

struct Prop3Request {
  std::size_t s = 0;
  BigInt d = 1;
  /// One entry per element of D_s in ascending order; empty means all 1.
  IntVector r_prime;
  /// Contact orders l_j, same layout; empty means all 1.
  IntVector ell;
  /// N_i for i < s outside D_s; missing entries default to 1.
  std::map<std::size_t, BigInt> targets;
};

struct Prop3Certificate {
  std::size_t s = 0;
  BigInt d = 1;
  std::vector<std::size_t> owners;
  IntVector r_prime;
  IntVector ell;
  IntVector r;  ///< r_1..r_{s-1}
  IntVector N;  ///< N_1..N_s
  IntMatrix A_prev;
  IntMatrix B_prev;
  IntMatrix C;
  bool last_equation_holds = false;
  /// nu_i(f), nu_i(g) for i = 1..m where h' = f/g (numerator: C'_s^d and the
  /// positive curvette powers; denominator: C''_s^d, negative powers, H_j^{r'_j}).
  IntVector f_orders;
  IntVector g_orders;
};

namespace detail {

inline void add_scaled(IntVector& acc, const IntVector& row, const BigInt& scale) {
  for (std::size_t t = 0; t < row.size() && t < acc.size(); ++t) acc[t] += scale * row[t];
}

inline IntVector defaulted(const IntVector& v, std::size_t k, const char* what) {
  if (v.empty()) return IntVector(k, 1);
  if (v.size() != k) throw InputError(std::string(what) + " must have one entry per element of D_s");
  for (const auto& x : v)
    if (x < 1) throw InputError(std::string(what) + " entries must be positive");
  return v;
}

}  // namespace detail

/// Multiplicity tables of f and g (length m) for h' built from r, r', l.
inline std::pair<IntVector, IntVector> prop3_factor_tables(const ModificationDescriptor& d, std::size_t s,
                                                           const BigInt& deg, const IntVector& r,
                                                           const std::vector<std::size_t>& owners,
                                                           const IntVector& r_prime, const IntVector& ell) {
  IntVector f(d.m, 0), g(d.m, 0);
  const auto& ts = d.center(s).curvette_row;
  detail::add_scaled(f, ts, deg);
  detail::add_scaled(g, ts, deg);
  for (std::size_t i = 1; i < s; ++i) {
    const BigInt& ri = r[i - 1];
    if (ri > 0) detail::add_scaled(f, d.center(i).curvette_row, ri);
    if (ri < 0) detail::add_scaled(g, d.center(i).curvette_row, -ri);
  }
  for (std::size_t q = 0; q < owners.size(); ++q)
    detail::add_scaled(g, special_multiplicities(d, s, owners[q], ell[q], d.m), r_prime[q]);
  return {std::move(f), std::move(g)};
}

inline Prop3Certificate prop3_solve(const ModificationDescriptor& d, const Prop3Request& req) {
  require_valid(d);
  const std::size_t s = req.s;
  if (s < 1 || s > d.m) throw InputError("target index s out of range");
  if (req.d < 1) throw InputError("degree d must be at least 1");
  Prop3Certificate cert;
  cert.s = s;
  cert.d = req.d;
  cert.owners = special_owners(d, s);
  const std::size_t k = cert.owners.size();
  cert.r_prime = detail::defaulted(req.r_prime, k, "r'");
  cert.ell = detail::defaulted(req.ell, k, "l");
  const IndexSet& ds = d.containing(s);
  for (const auto& [i, t] : req.targets) {
    if (i < 1 || i >= s || ds.contains(i)) throw InputError("target given for index " + std::to_string(i));
    if (t == 0) throw InputError("zero target for index " + std::to_string(i));
  }
  auto target = [&](std::size_t i) {
    auto it = req.targets.find(i);
    return it == req.targets.end() ? BigInt(1) : it->second;
  };

  const ValuationMatrix v = valuation_matrix(d);
  cert.A_prev = v.a.block(s - 1, s - 1);
  cert.C = IntMatrix(k, s - 1);
  cert.B_prev = IntMatrix(k, s - 1);

  if (s == 1) {
    cert.last_equation_holds = true;
  } else {
    // Relations of A and B along column s.
    for (std::size_t i = 1; i <= s; ++i) {
      BigInt sum = i == s ? BigInt(1) : BigInt(0);
      for (std::size_t j : ds) sum += v.a(i - 1, j - 1);
      if (v.a(i - 1, s - 1) != sum) throw InvariantError("valuation matrix violates the column relation at s", i);
    }
    const IntMatrix b = special_matrix(d, s, cert.ell, d.m);
    for (std::size_t q = 0; q < k; ++q) {
      cert.C(q, cert.owners[q] - 1) = cert.ell[q];
      for (std::size_t c = 0; c + 1 < s; ++c) cert.B_prev(q, c) = b(q, c);
    }
    // Right-hand side: targets outside D_s, plus r' (B + C).
    IntVector rhs(s - 1, 0);
    for (std::size_t i = 1; i < s; ++i)
      if (!ds.contains(i)) rhs[i - 1] = target(i);
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t c = 0; c + 1 < s; ++c) rhs[c] += cert.r_prime[q] * (cert.B_prev(q, c) + cert.C(q, c));
    auto r = solve_left_integral(cert.A_prev, rhs);
    if (!r) throw InvariantError("A_{s-1} is not unimodular; no integral solution");
    cert.r = std::move(*r);
    // The eliminated equation e_s.
    BigInt es = 0;
    for (std::size_t i = 1; i < s; ++i) es += cert.r[i - 1] * v.a(i - 1, s - 1);
    for (std::size_t q = 0; q < k; ++q) es -= cert.r_prime[q] * b(q, s - 1);
    cert.last_equation_holds = es == 0;
    if (!cert.last_equation_holds) throw InvariantError("eliminated equation e_s fails", s);
  }

  auto [ft, gt] = prop3_factor_tables(d, s, cert.d, cert.r, cert.owners, cert.r_prime, cert.ell);
  cert.f_orders = pullback_orders(d, ft);
  cert.g_orders = pullback_orders(d, gt);
  cert.N.resize(s);
  for (std::size_t i = 1; i <= s; ++i) cert.N[i - 1] = cert.f_orders[i - 1] - cert.g_orders[i - 1];
  // Independent recomputation must land on the prescribed orders.
  if (cert.N[s - 1] != 0) throw InvariantError("recomputed N_s is nonzero", s);
  for (std::size_t i = 1; i < s; ++i) {
    BigInt expected = target(i);
    for (std::size_t q = 0; q < k; ++q)
      if (cert.owners[q] == i) expected = cert.r_prime[q] * cert.ell[q];
    if (cert.N[i - 1] != expected) throw InvariantError("recomputed order differs from the prescribed one", i);
  }
  return cert;
}

// --------------------------------------------------------------------------
// Single dicritical E_s, all other divisors non-dicritical.

struct Thm4Bounds {
  BigInt bound;        ///< 2^{m-s} r' k n
  BigInt nprime_min;   ///< smallest admissible N'_b, b < s
  IntVector ell_min;   ///< smallest admissible l_b per element of D_s
};

inline Thm4Bounds thm4_bounds(std::size_t m, std::size_t s, const IntVector& r_prime, std::size_t n) {
  if (s < 1 || s > m) throw InputError("target index s out of range");
  BigInt rmax = 0;
  for (const auto& x : r_prime) {
    if (x < 1) throw InputError("r' entries must be positive");
    rmax = std::max(rmax, x);
  }
  Thm4Bounds out;
  out.bound = pow2(static_cast<unsigned long>(m - s)) * rmax * BigInt(static_cast<unsigned long>(r_prime.size())) *
              BigInt(static_cast<unsigned long>(n));
  out.nprime_min = out.bound + 1;
  for (const auto& x : r_prime) out.ell_min.push_back(floor_of(Rational(out.bound, x)) + 1);
  return out;
}

struct ForcedChoice {
  std::map<std::size_t, BigInt> k;
  BigInt ell;
};

struct Thm4Request {
  std::size_t s = 0;
  BigInt d = 1;
  IntVector r_prime;
  /// Empty: the l_b are taken from the bounds.
  IntVector ell;
  /// N'_b for b < s outside D_s; missing entries come from the bounds.
  std::map<std::size_t, BigInt> targets;
  std::optional<ForcedChoice> force;
  unsigned retries = 8;
};

struct Window {
  LinearForm lower;
  LinearForm upper;
};

struct Thm4Certificate {
  std::size_t s = 0;
  BigInt d = 1;
  Prop3Certificate base;
  Thm4Bounds bounds;
  unsigned doublings = 0;
  IntVector a_s;  ///< a_{s,1..m}
  std::vector<LinearForm> alpha;
  std::vector<LinearForm> beta;
  IntVector nprime;  ///< N'_1..N'_m
  std::map<std::size_t, BigInt> p;
  std::map<std::size_t, LinearForm> W;
  std::map<std::size_t, Window> windows;
  LinearForm lower;  ///< alpha_s / a_ss
  BigInt K;
  std::map<std::size_t, BigInt> k;
  BigInt ell;  ///< 0 when s = m
  IntVector alpha_value;
  IntVector beta_value;
  IntVector N;
  bool forced = false;
  bool invariants_ok = true;
  std::vector<std::string> violations;
};

/// alpha_i and beta_i as forms in k_{s+1..m}, computed from the order
/// vectors of f, g and the rows of A.
inline std::pair<std::vector<LinearForm>, std::vector<LinearForm>> thm4_alpha_beta_matrix(
    const ValuationMatrix& v, std::size_t s, const IntVector& f_orders, const IntVector& g_orders) {
  const std::size_t m = v.a.rows();
  std::vector<LinearForm> alpha(m), beta(m);
  for (std::size_t i = 1; i <= m; ++i) {
    LinearForm later;
    for (std::size_t j = s + 1; j <= m; ++j) later.add_coefficient(j, Rational(v.a(j - 1, i - 1)));
    alpha[i - 1] = LinearForm(Rational(f_orders[i - 1])) + later;
    beta[i - 1] = LinearForm(Rational(g_orders[i - 1])) + later;
  }
  return {std::move(alpha), std::move(beta)};
}

/// Same forms through the recursion over later centers:
/// alpha_i = sum_{a in D_i} alpha_a + sum_{j in Z_i} k_j mu_i(C_j), beta adds the H_i terms.
inline std::pair<std::vector<LinearForm>, std::vector<LinearForm>> thm4_alpha_beta(
    const ModificationDescriptor& d, std::size_t s, const std::vector<LinearForm>& alpha_base,
    const std::vector<LinearForm>& beta_base, const std::vector<std::size_t>& owners, const IntVector& r_prime) {
  if (alpha_base.size() < s || beta_base.size() < s) throw InputError("base values for i <= s required");
  std::vector<LinearForm> alpha(alpha_base.begin(), alpha_base.begin() + static_cast<long>(s));
  std::vector<LinearForm> beta(beta_base.begin(), beta_base.begin() + static_cast<long>(s));
  const auto muZ = later_curvette_table(d, s);
  const auto muH = later_special_table(d, s);
  for (std::size_t i = s + 1; i <= d.m; ++i) {
    LinearForm a, b;
    for (std::size_t q : d.containing(i)) {
      a += alpha[q - 1];
      b += beta[q - 1];
    }
    for (const auto& [j, mu] : muZ.at(i)) {
      a.add_coefficient(j, Rational(mu));
      b.add_coefficient(j, Rational(mu));
    }
    for (const auto& [j, mu] : muH.at(i)) {
      auto pos = std::find(owners.begin(), owners.end(), j);
      if (pos == owners.end()) throw InputError("muH owner outside D_s");
      b += LinearForm(Rational(r_prime[static_cast<std::size_t>(pos - owners.begin())] * mu));
    }
    alpha.push_back(std::move(a));
    beta.push_back(std::move(b));
  }
  return {std::move(alpha), std::move(beta)};
}

/// N'_i for i > s through N'_i = sum_{a in D_i} N'_a - sum_{j in H_i} r'_j mu_i(H_j).
inline IntVector thm4_nprime(const ModificationDescriptor& d, std::size_t s, const IntVector& base,
                             const std::vector<std::size_t>& owners, const IntVector& r_prime) {
  if (base.size() < s) throw InputError("N' values for i <= s required");
  IntVector out(base.begin(), base.begin() + static_cast<long>(s));
  const auto muH = later_special_table(d, s);
  for (std::size_t i = s + 1; i <= d.m; ++i) {
    BigInt acc = 0;
    for (std::size_t q : d.containing(i)) acc += out[q - 1];
    for (const auto& [j, mu] : muH.at(i)) {
      auto pos = std::find(owners.begin(), owners.end(), j);
      if (pos == owners.end()) throw InputError("muH owner outside D_s");
      acc -= r_prime[static_cast<std::size_t>(pos - owners.begin())] * mu;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Index of the first i > s whose N'_i contradicts the low-set prediction,
/// or 0 when all agree. Sets `fixable` when the failure is a nonpositive value
/// where a positive one is expected (cured by larger N'_b).
inline std::size_t thm4_nprime_mismatch(const LowSet& low, const IntVector& nprime, bool& fixable) {
  fixable = false;
  for (const auto& [i, set] : low.low) {
    const BigInt& v = nprime[i - 1];
    if (low.below_target(i)) {
      if (v <= 0) {
        fixable = true;
        return i;
      }
    } else if (v != 0) {
      return i;
    }
  }
  return 0;
}

struct WPolys {
  std::map<std::size_t, BigInt> p;
  std::map<std::size_t, LinearForm> W;
};

/// p_i and W_i for every i > s with N'_i = 0, checking
/// alpha_i = p_i (alpha_s + a_ss W_i) and positivity of all coefficients.
inline WPolys thm4_w_polys(const ModificationDescriptor& d, std::size_t s, const IntVector& nprime,
                           const std::vector<LinearForm>& alpha, const IntVector& a_s) {
  WPolys out;
  const BigInt& a_ss = a_s[s - 1];
  out.p[s] = 1;
  out.W[s] = LinearForm();
  const auto muZ = later_curvette_table(d, s);
  for (std::size_t i = s + 1; i <= d.m; ++i) {
    if (nprime[i - 1] != 0) continue;
    BigInt p = 0;
    LinearForm acc;
    for (std::size_t a : d.containing(i)) {
      auto pa = out.p.find(a);
      if (pa == out.p.end()) throw InvariantError("N'_i = 0 but a parent divisor has N'_a != 0", i);
      p += pa->second;
      acc += out.W.at(a) * Rational(pa->second);
    }
    LinearForm direct;
    for (const auto& [j, mu] : muZ.at(i)) direct.add_coefficient(j, Rational(mu));
    LinearForm w = (acc + direct * Rational(1, a_ss)) * (Rational(1) / Rational(p));
    if (w.constant() != 0 || w.is_constant() || !w.all_coefficients_positive())
      throw InvariantError("W_i has a nonpositive coefficient", i);
    if (alpha[i - 1] != (alpha[s - 1] + w * Rational(a_ss)) * Rational(p))
      throw InvariantError("alpha_i differs from p_i (alpha_s + a_ss W_i)", i);
    if (a_s[i - 1] != p * a_ss) throw InvariantError("a_{si} differs from p_i a_ss", i);
    out.p[i] = p;
    out.W[i] = std::move(w);
  }
  out.p.erase(s);
  out.W.erase(s);
  return out;
}

/// Uniform K: smallest K >= 1 with W_i(K) > 1 for every i, then
/// l = floor(alpha_s(K) / a_ss) + 1.
inline std::pair<BigInt, BigInt> thm4_choose(const std::map<std::size_t, LinearForm>& W, const LinearForm& lower) {
  // Terminates: every W_i is homogeneous with positive coefficients.
  auto wide_enough = [&](const BigInt& K) {
    return std::all_of(W.begin(), W.end(), [&](const auto& e) { return e.second.evaluate_uniform(K) > 1; });
  };
  BigInt K = 1;
  while (!wide_enough(K)) K += 1;
  BigInt ell = floor_of(lower.evaluate_uniform(K)) + 1;
  return {K, ell};
}

inline Thm4Certificate thm4_certificate(const ModificationDescriptor& d, const Thm4Request& req) {
  require_valid(d);
  const std::size_t s = req.s;
  if (s < 1 || s > d.m) throw InputError("target index s out of range");
  Thm4Certificate cert;
  cert.s = s;
  cert.d = req.d;
  const auto owners = special_owners(d, s);
  const IntVector r_prime = detail::defaulted(req.r_prime, owners.size(), "r'");
  cert.bounds = thm4_bounds(d.m, s, r_prime, d.n);
  const ValuationMatrix v = valuation_matrix(d);
  for (std::size_t i = 0; i < d.m; ++i) cert.a_s.push_back(v.a(s - 1, i));
  const LowSet low = low_sets(d, s);

  Prop3Request base;
  base.s = s;
  base.d = req.d;
  base.r_prime = r_prime;
  base.ell = req.ell.empty() ? cert.bounds.ell_min : req.ell;
  for (std::size_t b = 1; b < s; ++b) {
    if (d.containing(s).contains(b)) continue;
    auto it = req.targets.find(b);
    base.targets[b] = it == req.targets.end() ? cert.bounds.nprime_min : it->second;
  }

  // N'_i must be positive exactly on the indices whose low set reaches below s.
  for (;;) {
    cert.base = prop3_solve(d, base);
    IntVector nbase(cert.base.N);
    cert.nprime = thm4_nprime(d, s, nbase, owners, r_prime);
    IntVector direct(d.m);
    for (std::size_t i = 0; i < d.m; ++i) direct[i] = cert.base.f_orders[i] - cert.base.g_orders[i];
    if (direct != cert.nprime) throw InvariantError("N' recursion disagrees with the pulled-back orders of h'");
    bool fixable = false;
    std::size_t bad = thm4_nprime_mismatch(low, cert.nprime, fixable);
    if (!bad) break;
    if (!fixable) throw InvariantError("N'_i = 0 expected from the low sets but nonzero", bad);
    if (cert.doublings >= req.retries)
      throw InvariantError("N'_i stays nonpositive after doubling the N'_b " + std::to_string(req.retries) + " times",
                           bad);
    ++cert.doublings;
    for (auto& x : base.ell) x *= 2;
    for (auto& [b, t] : base.targets) t *= 2;
  }

  auto [alpha_m, beta_m] = thm4_alpha_beta_matrix(v, s, cert.base.f_orders, cert.base.g_orders);
  auto [alpha_r, beta_r] = thm4_alpha_beta(d, s, alpha_m, beta_m, owners, r_prime);
  for (std::size_t i = 1; i <= d.m; ++i) {
    if (alpha_m[i - 1] != alpha_r[i - 1] || beta_m[i - 1] != beta_r[i - 1])
      throw InvariantError("later-center multiplicities disagree with the valuation matrix", i);
  }
  cert.alpha = std::move(alpha_m);
  cert.beta = std::move(beta_m);

  const BigInt& a_ss = cert.a_s[s - 1];
  cert.lower = cert.alpha[s - 1] * (Rational(1) / Rational(a_ss));
  if (s < d.m) {
    WPolys wp = thm4_w_polys(d, s, cert.nprime, cert.alpha, cert.a_s);
    cert.p = std::move(wp.p);
    cert.W = std::move(wp.W);
    for (const auto& [i, w] : cert.W) cert.windows[i] = Window{cert.lower, cert.lower + w};
  }

  if (req.force) {
    cert.forced = true;
    for (const auto& [j, kj] : req.force->k)
      if (j <= s || j > d.m) throw InputError("forced k_j outside s < j <= m");
    for (std::size_t j = s + 1; j <= d.m; ++j) {
      auto it = req.force->k.find(j);
      if (it == req.force->k.end()) throw InputError("forced choice must give every k_j");
      cert.k[j] = it->second;
    }
    cert.ell = req.force->ell;
    cert.K = cert.k.empty() ? BigInt(0) : cert.k.begin()->second;
  } else if (s < d.m) {
    auto [K, ell] = thm4_choose(cert.W, cert.lower);
    cert.K = K;
    cert.ell = ell;
    for (std::size_t j = s + 1; j <= d.m; ++j) cert.k[j] = K;
  }

  auto fail = [&](std::string what, std::size_t idx) {
    cert.violations.push_back(what + " (index " + std::to_string(idx) + ")");
  };
  for (std::size_t i = 1; i <= d.m; ++i) {
    Rational a = cert.alpha[i - 1].evaluate(cert.k);
    Rational b = cert.beta[i - 1].evaluate(cert.k);
    cert.alpha_value.push_back(a.get_num());
    cert.beta_value.push_back(b.get_num());
    BigInt n = a.get_num() - b.get_num();
    if (s < d.m) {
      BigInt cs = cert.ell * cert.a_s[i - 1];
      n = a.get_num() - std::min(b.get_num(), cs);
    }
    cert.N.push_back(n);
    if (a.get_num() - b.get_num() != cert.nprime[i - 1]) fail("N'_i differs from alpha_i - beta_i", i);
  }
  if (s < d.m) {
    if (Rational(cert.ell) <= cert.lower.evaluate(cert.k)) fail("l does not exceed alpha_s / a_ss", s);
    for (const auto& [i, w] : cert.windows)
      if (Rational(cert.ell) >= w.upper.evaluate(cert.k)) fail("l outside the window of W_i", i);
  }
  if (cert.N[s - 1] != 0) fail("N_s is nonzero", s);
  for (std::size_t i = 1; i <= d.m; ++i) {
    if (i == s) continue;
    if (cert.N[i - 1] <= 0) fail("N_i is not positive", i);
    if (i < s && cert.N[i - 1] < cert.nprime[i - 1]) fail("N_i < N'_i", i);
  }
  cert.invariants_ok = cert.violations.empty();
  if (!cert.invariants_ok && !cert.forced) throw InvariantError("certificate check failed: " + cert.violations.front());
  return cert;
}

// --------------------------------------------------------------------------
// Several dicriticals: product of Moebius twists.

struct MainFactor {
  std::size_t j = 0;
  BigInt degree = 1;
  Thm4Certificate cert;
};

struct MainCertificate {
  IndexSet J;
  std::vector<MainFactor> factors;
  IntVector predicted;  ///< orders of the product, all zero for generic constants
  std::vector<std::string> profile;
  std::string constraint =
      "a_j, b_j distinct, generic, avoiding the finite set of constant values of non-dicritical components";
};

inline MainCertificate combine_main(std::vector<Thm4Certificate> certs, const std::map<std::size_t, BigInt>& degrees,
                                    std::size_t m) {
  if (certs.empty()) throw InputError("dicritical set J must be nonempty");
  MainCertificate out;
  for (auto& c : certs) {
    if (!out.J.insert(c.s).second) throw InputError("duplicate dicritical index " + std::to_string(c.s));
    auto it = degrees.find(c.s);
    BigInt deg = it == degrees.end() ? c.d : it->second;
    if (deg != c.d) throw InputError("certificate degree differs from the requested one at " + std::to_string(c.s));
    out.factors.push_back(MainFactor{c.s, deg, std::move(c)});
  }
  out.predicted.assign(m, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    if (out.J.contains(i)) {
      auto it = degrees.find(i);
      out.profile.push_back("dicritical degree " + (it == degrees.end() ? std::string("1") : it->second.get_str()));
    } else {
      out.profile.push_back("non_dicritical");
    }
  }
  return out;
}

struct MainRequest {
  IndexSet J;
  std::map<std::size_t, BigInt> degrees;
  std::map<std::size_t, Thm4Request> overrides;
  unsigned retries = 8;
};

inline MainCertificate solve_main(const ModificationDescriptor& d, const MainRequest& req) {
  if (req.J.empty()) throw InputError("dicritical set J must be nonempty");
  std::vector<Thm4Certificate> certs;
  for (std::size_t j : req.J) {
    if (j < 1 || j > d.m) throw InputError("dicritical index " + std::to_string(j) + " out of range");
    Thm4Request r;
    if (auto it = req.overrides.find(j); it != req.overrides.end()) r = it->second;
    r.s = j;
    if (auto it = req.degrees.find(j); it != req.degrees.end()) r.d = it->second;
    if (r.d < 1) throw InputError("degrees must be at least 1");
    if (r.force) throw InputError("forced choices are not allowed inside a main request");
    r.retries = req.retries;
    certs.push_back(thm4_certificate(d, r));
  }
  return combine_main(std::move(certs), req.degrees, d.m);
}

}  // namespace dicritical
