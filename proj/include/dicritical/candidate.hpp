#pragma once

// Turning certificates into explicit rational functions, and comparing the
// combinatorial orders with the ones read off the charts.

#include <dicritical/chart.hpp>
#include <dicritical/modification.hpp>
#include <dicritical/rational_function.hpp>
#include <dicritical/solver.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dicritical {

/// Concrete equations for the factors of a candidate. For the target index s
/// of a construction, curvettes[s] holds C'_s, C''_s and the extra C_s in that
/// order; for any other index the first entry is the power factor and the
/// second is the partner used when a zero exponent must be split.
struct Equations {
  std::map<std::size_t, std::vector<Polynomial>> curvettes;
  std::map<std::size_t, Polynomial> special;

  const Polynomial& curvette(std::size_t i, std::size_t role) const {
    auto it = curvettes.find(i);
    if (it == curvettes.end() || it->second.size() <= role)
      throw InputError("missing equation: curvette " + std::to_string(role) + " of E_" + std::to_string(i));
    return it->second[role];
  }
  const Polynomial& special_for(std::size_t j) const {
    auto it = special.find(j);
    if (it == special.end()) throw InputError("missing equation: special hypersurface H_" + std::to_string(j));
    return it->second;
  }
};

namespace detail {

inline unsigned long exponent(const BigInt& e, const char* what) {
  if (e < 0) throw InputError(std::string("negative exponent on ") + what);
  if (!e.fits_ulong_p()) throw InputError(std::string("exponent too large on ") + what);
  return e.get_ui();
}

}  // namespace detail

inline RationalFunction build_support(const SupportCertificate& cert, const Equations& eq, std::size_t nvars) {
  Polynomial num = Polynomial::constant(nvars, 1), den = num;
  for (std::size_t i = 1; i <= cert.r.size(); ++i) {
    const BigInt& r = cert.r[i - 1];
    if (r > 0) num *= eq.curvette(i, 0).pow(detail::exponent(r, "curvette"));
    if (r < 0) den *= eq.curvette(i, 0).pow(detail::exponent(-r, "curvette"));
    if (r == 0 && cert.needs_split[i - 1]) {
      num *= eq.curvette(i, 0);
      den *= eq.curvette(i, 1);
    }
  }
  return RationalFunction(std::move(num), std::move(den));
}

/// h' = f/g with f = C'_s^d prod_{r_i>0} C_i^{r_i} and
/// g = C''_s^d prod_{r_i<0} C_i^{-r_i} prod_j H_j^{r'_j}, unexpanded quotient.
inline std::pair<Polynomial, Polynomial> build_prop3_parts(const Prop3Certificate& cert, const Equations& eq) {
  const unsigned long d = detail::exponent(cert.d, "C'_s");
  Polynomial f = eq.curvette(cert.s, 0).pow(d);
  Polynomial g = eq.curvette(cert.s, 1).pow(d);
  for (std::size_t i = 1; i < cert.s; ++i) {
    const BigInt& r = cert.r[i - 1];
    if (r > 0) f *= eq.curvette(i, 0).pow(detail::exponent(r, "curvette"));
    if (r < 0) g *= eq.curvette(i, 0).pow(detail::exponent(-r, "curvette"));
  }
  for (std::size_t q = 0; q < cert.owners.size(); ++q)
    g *= eq.special_for(cert.owners[q]).pow(detail::exponent(cert.r_prime[q], "special hypersurface"));
  return {std::move(f), std::move(g)};
}

inline RationalFunction build_prop3(const Prop3Certificate& cert, const Equations& eq) {
  auto [f, g] = build_prop3_parts(cert, eq);
  return RationalFunction(std::move(f), std::move(g));
}

/// h = f prod C_j^{k_j} / (g prod C_j^{k_j} + C_s^l); just f/g when s = m.
inline RationalFunction build_thm4(const Thm4Certificate& cert, const Equations& eq) {
  auto [f, g] = build_prop3_parts(cert.base, eq);
  if (cert.k.empty()) return RationalFunction(std::move(f), std::move(g));
  Polynomial later = Polynomial::constant(f.nvars(), 1);
  for (const auto& [j, kj] : cert.k) later *= eq.curvette(j, 0).pow(detail::exponent(kj, "later curvette"));
  Polynomial cs = eq.curvette(cert.s, 2).pow(detail::exponent(cert.ell, "C_s"));
  return RationalFunction(f * later, g * later + cs);
}

struct MobiusConstants {
  Rational a;
  Rational b;
};

/// Draws a != b avoiding the constant values of h on the non-dicritical
/// divisors, so the twist keeps every such divisor constant with a finite
/// nonzero value.
inline MobiusConstants choose_mobius_constants(const RationalFunction& h, const ChartTower& tower, Rng& rng,
                                               unsigned retries = 8) {
  std::set<std::string> forbidden;
  for (std::size_t i = 1; i <= tower.blowups(); ++i) {
    DicriticalStatus st = dicritical_status(h, tower, i);
    if (!st.dicritical) forbidden.insert(st.value);
  }
  for (unsigned t = 0; t <= retries; ++t) {
    MobiusConstants c{rng.rational(), rng.rational()};
    if (c.a == c.b || forbidden.contains(to_string(c.a)) || forbidden.contains(to_string(c.b))) continue;
    return c;
  }
  throw InvariantError("could not draw generic Moebius constants");
}

inline RationalFunction build_main(const std::vector<RationalFunction>& factors,
                                   const std::vector<MobiusConstants>& constants) {
  if (factors.empty() || factors.size() != constants.size())
    throw InputError("one Moebius pair per factor required");
  RationalFunction h = factors.front().mobius(constants.front().a, constants.front().b);
  for (std::size_t q = 1; q < factors.size(); ++q) h = h * factors[q].mobius(constants[q].a, constants[q].b);
  return h;
}

// --------------------------------------------------------------------------
// Cross-tier agreement.

/// Structural agreement between a tower and a descriptor.
inline std::vector<std::string> tower_mismatches(const ModificationDescriptor& d, const ChartTower& tower) {
  std::vector<std::string> out;
  if (tower.nvars() != d.n) out.push_back("tower has " + std::to_string(tower.nvars()) + " variables, n = " +
                                          std::to_string(d.n));
  if (tower.blowups() != d.m) {
    out.push_back("tower has " + std::to_string(tower.blowups()) + " blow-ups, m = " + std::to_string(d.m));
    return out;
  }
  for (std::size_t i = 1; i <= d.m; ++i) {
    const std::size_t dim = tower.nvars() - tower.blowup(i).center.size();
    if (dim != d.center(i).dim) out.push_back("center " + std::to_string(i) + " has dimension " + std::to_string(dim));
    for (std::size_t q : tower.visible_containing(i))
      if (!d.containing(i).contains(q))
        out.push_back("center " + std::to_string(i) + " lies in E_" + std::to_string(q) + " but D_" +
                      std::to_string(i) + " omits it");
  }
  return out;
}

struct OrderMismatch {
  std::size_t index = 0;
  BigInt predicted;
  BigInt symbolic;
};

struct CrossCheckReport {
  IntVector symbolic;
  std::vector<OrderMismatch> mismatches;
  std::vector<std::string> structure;
  bool ok() const { return mismatches.empty() && structure.empty(); }
};

inline CrossCheckReport cross_check(const ModificationDescriptor& d, const ChartTower& tower,
                                    const RationalFunction& h, const IntVector& predicted) {
  CrossCheckReport rep;
  rep.structure = tower_mismatches(d, tower);
  if (!rep.structure.empty()) return rep;
  if (predicted.size() != d.m) throw InputError("predicted order vector has the wrong length");
  for (std::size_t i = 1; i <= d.m; ++i) {
    BigInt sym = divisor_order(h, tower, i);
    if (sym != predicted[i - 1]) rep.mismatches.push_back({i, predicted[i - 1], sym});
    rep.symbolic.push_back(std::move(sym));
  }
  return rep;
}

}  // namespace dicritical
