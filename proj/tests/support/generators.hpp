#pragma once

// Seeded generators shared by the property tests and the acceptance binary.

#include <dicritical/dicritical.hpp>

#include <map>
#include <string>

namespace dicritical::testing {

/// Random admissible descriptor: Z_1 a point, nonempty D_j for j >= 2, and
/// either the default curvette table or random nonnegative multiplicities.
inline ModificationDescriptor random_descriptor(Rng& rng, std::size_t max_m = 8) {
  ModificationDescriptor d;
  d.n = static_cast<std::size_t>(rng.integer(2, 5));
  d.m = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_m)));
  const bool default_rows = rng.integer(0, 1) == 0;
  for (std::size_t j = 1; j <= d.m; ++j) {
    Center c;
    c.dim = j == 1 ? 0 : static_cast<std::size_t>(rng.integer(0, static_cast<long>(d.n) - 2));
    if (j >= 2) {
      // At most n divisors meet in a normal-crossing point.
      const long size = rng.integer(1, std::min<long>(static_cast<long>(j) - 1, static_cast<long>(d.n)));
      while (c.containing.size() < static_cast<std::size_t>(size))
        c.containing.insert(static_cast<std::size_t>(rng.integer(1, static_cast<long>(j) - 1)));
    }
    d.centers.push_back(std::move(c));
    IntVector row = default_rows ? default_curvette_row(d, j) : IntVector(j, 0);
    if (!default_rows)
      for (std::size_t t = 1; t < j; ++t) row[t - 1] = rng.integer(0, 3);
    row[j - 1] = 1;
    d.centers.back().curvette_row = std::move(row);
  }
  return d;
}

/// Random nonempty J and nonzero off-J targets for the support problem.
inline std::pair<IndexSet, std::map<std::size_t, BigInt>> random_support_request(Rng& rng, std::size_t m) {
  IndexSet J;
  while (J.empty())
    for (std::size_t j = 1; j <= m; ++j)
      if (rng.integer(0, 2) == 0) J.insert(j);
  std::map<std::size_t, BigInt> offs;
  for (std::size_t j = 1; j <= m; ++j)
    if (!J.contains(j) && rng.integer(0, 1) == 0) offs[j] = rng.nonzero_integer(6);
  return {J, offs};
}

inline Scenario fixture(const std::string& name) {
  auto sc = builtin_fixture(name);
  if (!sc) throw InputError("unknown fixture " + name);
  return *sc;
}

inline Polynomial poly(const std::string& text, const std::vector<std::string>& names = {"x", "y", "z"}) {
  return parse_polynomial(text, names);
}

/// Thm4 certificate on a fixture with a forced (k, l).
inline Thm4Certificate forced_thm4(const Scenario& sc, std::map<std::size_t, BigInt> k, const BigInt& ell) {
  Thm4Request r = std::get<Thm4Request>(*sc.request);
  r.force = ForcedChoice{std::move(k), ell};
  return thm4_certificate(sc.descriptor, r);
}

}  // namespace dicritical::testing
