#pragma once

// Combinatorial model of a tower of admissible blow-ups over a smooth point:
// centers, the containment sets D_j, multiplicity tables, and everything
// computed from them (valuation matrix, special-hypersurface matrix, low sets).
//
// Divisor indices are 1-based throughout the public API, matching the
// numbering E_1, ..., E_m of the exceptional components.

#include <dicritical/matrix.hpp>
#include <dicritical/numeric.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dicritical {

using IndexSet = std::set<std::size_t>;

struct Center {
  std::size_t dim = 0;
  /// D_j: earlier exceptional divisors containing Z_j.
  IndexSet containing;
  /// T[j][1..j]: multiplicity of the strict transform of the hypercurvette
  /// C_j along Z_t, stored at position t-1.
  IntVector curvette_row;
};

/// Multiplicities of the strict transform of a special hypersurface H_owner
/// along Z_1, ..., Z_{s-1}; the entry at Z_s is forced to l_owner.
struct SpecialRow {
  std::size_t owner = 0;
  IntVector mu;
};

/// One entry mu_i(X_j) of a later-center multiplicity table (i > s).
struct MultEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  BigInt mu;
  friend bool operator==(const MultEntry&, const MultEntry&) = default;
};

struct Thm4Data {
  std::size_t s = 0;
  /// mu_i(C_j) for j in Z_i. Optional: derived from the curvette table when empty.
  std::vector<MultEntry> later_curvette;
  /// mu_i(H~_j) for j in H_i (owners from D_s).
  std::vector<MultEntry> later_special;
};

struct ModificationDescriptor {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Center> centers;
  std::vector<SpecialRow> special;
  std::optional<Thm4Data> thm4;

  const Center& center(std::size_t j) const {
    if (j < 1 || j > centers.size()) throw InputError("center index " + std::to_string(j) + " out of range");
    return centers[j - 1];
  }
  const IndexSet& containing(std::size_t j) const { return center(j).containing; }

  const SpecialRow* special_for(std::size_t owner) const {
    for (const auto& row : special)
      if (row.owner == owner) return &row;
    return nullptr;
  }
};

struct Violation {
  std::string code;
  std::size_t index = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.message;
      if (v.index) out += " (index " + std::to_string(v.index) + ")";
    }
    return out;
  }
};

struct ValuationMatrix {
  /// A(j-1, i-1) = a_{ji} = nu_i(C_j).
  IntMatrix a;
  /// B(r, i-1) = b_{r,i} for the r-th owner of D_s in ascending order.
  std::optional<IntMatrix> b;
};

/// Low(i) for i > s: the divisors E_b, b <= s, containing the image of Z_i in X_s.
struct LowSet {
  std::size_t s = 0;
  std::map<std::size_t, IndexSet> low;

  const IndexSet& at(std::size_t i) const {
    auto it = low.find(i);
    if (it == low.end()) throw InputError("low set requested for index " + std::to_string(i) + " <= s");
    return it->second;
  }
  /// Low(i) meets {1, ..., s-1}.
  bool below_target(std::size_t i) const {
    const auto& l = at(i);
    return !l.empty() && *l.begin() < s;
  }
};

// --------------------------------------------------------------------------
// Generic order recursion.

/// N_1 = t_1, N_{i+1} = t_{i+1} + sum_{j in D_{i+1}} N_j. Linear in mult, so
/// signed (exponent-weighted) tables are accepted as well.
inline IntVector pullback_orders(const ModificationDescriptor& d, std::span<const BigInt> mult) {
  if (mult.size() > d.centers.size())
    throw InputError("multiplicity table has " + std::to_string(mult.size()) + " entries for " +
                     std::to_string(d.centers.size()) + " blow-ups");
  IntVector n(d.centers.size(), 0);
  for (std::size_t i = 1; i <= d.centers.size(); ++i) {
    BigInt acc = i <= mult.size() ? mult[i - 1] : BigInt(0);
    for (std::size_t j : d.containing(i)) {
      if (j < 1 || j >= i) throw InputError("D_" + std::to_string(i) + " refers to index " + std::to_string(j));
      acc += n[j - 1];
    }
    n[i - 1] = std::move(acc);
  }
  return n;
}

/// Transitive closure of D_j: all divisors reachable from Z_j through the
/// containment sets.
inline IndexSet ancestry(const ModificationDescriptor& d, std::size_t j) {
  IndexSet out;
  std::vector<std::size_t> stack(d.containing(j).begin(), d.containing(j).end());
  while (!stack.empty()) {
    std::size_t q = stack.back();
    stack.pop_back();
    if (!out.insert(q).second) continue;
    for (std::size_t p : d.containing(q)) stack.push_back(p);
  }
  return out;
}

/// Default curvette row: T[j][t] = 1 on the ancestry of Z_j and at t = j, else 0.
inline IntVector default_curvette_row(const ModificationDescriptor& d, std::size_t j) {
  IntVector row(j, 0);
  for (std::size_t t : ancestry(d, j)) row[t - 1] = 1;
  row[j - 1] = 1;
  return row;
}

// --------------------------------------------------------------------------
// Validation.

inline LowSet low_sets(const ModificationDescriptor& d, std::size_t s);

inline ValidationReport validate_descriptor(const ModificationDescriptor& d) {
  ValidationReport rep;
  auto fail = [&](std::string code, std::size_t idx, std::string msg) {
    rep.violations.push_back({std::move(code), idx, std::move(msg)});
  };
  if (d.n < 2) fail("n_too_small", 0, "ambient dimension n must be at least 2");
  if (d.m < 1) fail("m_too_small", 0, "at least one blow-up is required");
  if (d.centers.size() != d.m) {
    fail("m_mismatch", 0, "m does not match the number of centers");
    return rep;
  }
  bool d_sets_ok = true;
  for (std::size_t j = 1; j <= d.m; ++j) {
    const Center& c = d.centers[j - 1];
    if (d.n >= 2 && c.dim > d.n - 2) fail("dim_out_of_range", j, "center dimension exceeds n-2");
    if (j == 1 && c.dim != 0) fail("first_center_not_point", 1, "Z_1 must be the point p");
    if (j == 1 && !c.containing.empty()) {
      fail("D1_nonempty", 1, "D_1 must be empty");
      d_sets_ok = false;
    }
    if (j >= 2 && c.containing.empty()) {
      fail("D_empty", j, "D_j empty for j>=2");
      d_sets_ok = false;
    }
    for (std::size_t q : c.containing) {
      if (q < 1 || q >= j) {
        fail("D_out_of_range", j, "D_j must be a subset of {1,...,j-1}");
        d_sets_ok = false;
      }
    }
    if (c.curvette_row.size() < j) {
      fail("T_row_length", j, "curvette row must have j entries");
      continue;
    }
    for (std::size_t t = j + 1; t <= c.curvette_row.size(); ++t)
      if (c.curvette_row[t - 1] != 0) fail("T_above_diagonal", j, "T[j][t] must vanish for t > j");
    if (c.curvette_row[j - 1] != 1) fail("T_diagonal", j, "T[j][j] must equal 1");
    for (const auto& v : c.curvette_row)
      if (v < 0) {
        fail("T_negative", j, "curvette multiplicities must be nonnegative");
        break;
      }
  }

  const std::size_t s = d.thm4 ? d.thm4->s : 0;
  std::set<std::size_t> owners;
  for (const auto& row : d.special) {
    if (!owners.insert(row.owner).second) fail("special_duplicate", row.owner, "duplicate special row owner");
    if (row.owner < 1 || row.owner > d.m) fail("special_owner", row.owner, "special row owner out of range");
    for (const auto& v : row.mu)
      if (v < 0) fail("mult_negative", row.owner, "special multiplicities must be nonnegative");
  }

  if (!d.thm4) return rep;
  if (s < 1 || s > d.m) {
    fail("thm4_s_range", s, "target index s out of range");
    return rep;
  }
  for (const auto& row : d.special) {
    if (row.owner >= 1 && row.owner <= d.m && !d.containing(s).contains(row.owner))
      fail("special_owner", row.owner, "special row owner not in D_s");
    if (row.mu.size() + 1 < s) fail("special_row_length", row.owner, "special row must cover Z_1..Z_{s-1}");
  }
  for (const auto& e : d.thm4->later_curvette) {
    if (e.i <= s || e.i > d.m || e.j < e.i || e.j > d.m) {
      fail("muZ_range", e.i, "muZ entries need s < i <= j <= m");
      continue;
    }
    const auto& row = d.centers[e.j - 1].curvette_row;
    if (e.i <= row.size() && row[e.i - 1] != e.mu)
      fail("muZ_inconsistent", e.i, "muZ disagrees with the curvette table T[j][i]");
    if (e.mu < 0) fail("mult_negative", e.i, "muZ entries must be nonnegative");
  }
  if (!d.thm4->later_curvette.empty()) {
    for (std::size_t i = s + 1; i <= d.m; ++i) {
      bool found = false;
      for (const auto& e : d.thm4->later_curvette)
        if (e.i == i && e.j == i && e.mu >= 1) found = true;
      if (!found) fail("muZ_missing_diagonal", i, "i must belong to Z_i with mu_i(C_i) >= 1");
    }
  }
  for (const auto& e : d.thm4->later_special) {
    if (e.i <= s || e.i > d.m) {
      fail("muH_range", e.i, "muH entries need s < i <= m");
      continue;
    }
    if (!d.containing(s).contains(e.j)) fail("muH_range", e.i, "muH owner must belong to D_s");
    if (e.mu < 0) fail("mult_negative", e.i, "muH entries must be nonnegative");
  }
  if (d_sets_ok && rep.ok()) {
    const LowSet low = low_sets(d, s);
    for (const auto& e : d.thm4->later_special)
      if (e.mu > 0 && !low.below_target(e.i))
        fail("muH_low_set", e.i, "H_i nonempty but the image of Z_i avoids E_1..E_{s-1}");
  }
  return rep;
}

inline void require_valid(const ModificationDescriptor& d) {
  auto rep = validate_descriptor(d);
  if (!rep.ok()) throw InputError("invalid descriptor: " + rep.summary());
}

// --------------------------------------------------------------------------
// Matrices.

inline ValuationMatrix valuation_matrix(const ModificationDescriptor& d) {
  require_valid(d);
  ValuationMatrix v{IntMatrix(d.m, d.m), std::nullopt};
  for (std::size_t j = 1; j <= d.m; ++j) {
    const auto& row = d.centers[j - 1].curvette_row;
    IntVector n = pullback_orders(d, std::span<const BigInt>(row.data(), j));
    for (std::size_t i = 0; i < d.m; ++i) v.a(j - 1, i) = n[i];
  }
  return v;
}

/// Exact determinants of A_1, ..., A_m. Unimodularity means all equal 1.
inline IntVector principal_minors_unimodular(const ValuationMatrix& v) { return leading_principal_minors(v.a); }

inline bool all_ones(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 1; });
}

/// Owners of special hypersurfaces for target s: D_s in ascending order.
inline std::vector<std::size_t> special_owners(const ModificationDescriptor& d, std::size_t s) {
  const auto& ds = d.containing(s);
  return {ds.begin(), ds.end()};
}

/// Multiplicity row of H_owner along Z_1..Z_upto: the input row for t < s,
/// l at t = s and the later-center table beyond s.
inline IntVector special_multiplicities(const ModificationDescriptor& d, std::size_t s, std::size_t owner,
                                        const BigInt& ell, std::size_t upto) {
  const SpecialRow* row = d.special_for(owner);
  if (!row) throw InputError("missing special multiplicities for H_" + std::to_string(owner));
  if (row->mu.size() + 1 < s)
    throw InputError("special multiplicities for H_" + std::to_string(owner) + " do not cover Z_1..Z_{s-1}");
  IntVector mult(upto, 0);
  for (std::size_t t = 1; t < s && t <= upto; ++t) mult[t - 1] = row->mu[t - 1];
  if (s <= upto) mult[s - 1] = ell;
  if (d.thm4 && upto > s)
    for (const auto& e : d.thm4->later_special)
      if (e.j == owner && e.i <= upto) mult[e.i - 1] = e.mu;
  return mult;
}

/// B with one row per owner j in D_s and columns 1..cols (cols = s for the
/// matrix of the construction; cols = m when later orders are needed).
inline IntMatrix special_matrix(const ModificationDescriptor& d, std::size_t s, const IntVector& ell,
                                std::size_t cols) {
  if (s < 1 || s > d.m) throw InputError("target index s out of range");
  const auto owners = special_owners(d, s);
  if (owners.empty()) throw InputError("no special hypersurfaces at s with D_s=\xE2\x88\x85");
  if (ell.size() != owners.size()) throw InputError("need one l_j per element of D_s");
  IntMatrix b(owners.size(), cols);
  for (std::size_t r = 0; r < owners.size(); ++r) {
    if (ell[r] < 1) throw InputError("l_j must be positive");
    IntVector mult = special_multiplicities(d, s, owners[r], ell[r], d.m);
    IntVector orders = pullback_orders(d, mult);
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = orders[c];
  }
  // b_{rs} = sum_{j in D_s} b_{rj} + l_r
  if (cols >= s) {
    for (std::size_t r = 0; r < owners.size(); ++r) {
      BigInt expected = ell[r];
      for (std::size_t j : owners) expected += b(r, j - 1);
      if (b(r, s - 1) != expected)
        throw InvariantError("special row for H_" + std::to_string(owners[r]) + " violates the b_{is} relation",
                             owners[r]);
    }
  }
  return b;
}

inline IntMatrix special_matrix(const ModificationDescriptor& d, std::size_t s, const IntVector& ell) {
  return special_matrix(d, s, ell, s);
}

inline LowSet low_sets(const ModificationDescriptor& d, std::size_t s) {
  if (s < 1 || s > d.centers.size()) throw InputError("target index s out of range");
  LowSet out;
  out.s = s;
  for (std::size_t i = s + 1; i <= d.centers.size(); ++i) {
    IndexSet acc;
    for (std::size_t q : d.containing(i)) {
      if (q <= s) {
        acc.insert(q);
      } else {
        const auto& lq = out.low.at(q);
        acc.insert(lq.begin(), lq.end());
      }
    }
    out.low.emplace(i, std::move(acc));
  }
  return out;
}

/// mu_i(C_j) for s < i <= j <= m, keyed [i][j]; zero entries are omitted, so
/// the keys of the inner map form the set Z_i.
inline std::map<std::size_t, std::map<std::size_t, BigInt>> later_curvette_table(const ModificationDescriptor& d,
                                                                                 std::size_t s) {
  std::map<std::size_t, std::map<std::size_t, BigInt>> out;
  for (std::size_t i = s + 1; i <= d.m; ++i) {
    auto& row = out[i];
    for (std::size_t j = i; j <= d.m; ++j) {
      const auto& t = d.centers[j - 1].curvette_row;
      if (i <= t.size() && t[i - 1] != 0) row[j] = t[i - 1];
    }
  }
  return out;
}

/// mu_i(H~_j) for s < i <= m, keyed [i][j]; zero entries omitted (keys form H_i).
inline std::map<std::size_t, std::map<std::size_t, BigInt>> later_special_table(const ModificationDescriptor& d,
                                                                                std::size_t s) {
  std::map<std::size_t, std::map<std::size_t, BigInt>> out;
  for (std::size_t i = s + 1; i <= d.m; ++i) out[i];
  if (d.thm4)
    for (const auto& e : d.thm4->later_special)
      if (e.mu != 0 && e.i > s) out[e.i][e.j] = e.mu;
  return out;
}

}  // namespace dicritical
