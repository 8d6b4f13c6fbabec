#pragma once

// Explicit coordinate charts for a blow-up tower: pullbacks, divisorial
// orders, restrictions to exceptional divisors, constancy and degree along
// line classes.

#include <dicritical/polynomial.hpp>
#include <dicritical/random.hpp>
#include <dicritical/rational_function.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dicritical {

/// Blow-up of the coordinate center {x_u = 0 : u in center} seen in the chart
/// of `chart`: x_u <- chart * x_u for u in center \ {chart}; the new
/// exceptional divisor is {x_chart = 0}.
struct BlowupStep {
  std::vector<std::size_t> center;
  std::size_t chart = 0;
  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

/// Triangular coordinate change x_target <- x_target - subtrahend.
struct ShearStep {
  std::size_t target = 0;
  Polynomial subtrahend;
  friend bool operator==(const ShearStep&, const ShearStep&) = default;
};

using TowerStep = std::variant<BlowupStep, ShearStep>;

class ChartTower {
 public:
  ChartTower() = default;
  ChartTower(std::vector<std::string> names, std::vector<TowerStep> steps)
      : names_(std::move(names)), steps_(std::move(steps)) {
    analyze();
  }

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<TowerStep>& steps() const noexcept { return steps_; }
  std::size_t blowups() const noexcept { return creation_.size(); }

  /// Position in steps() of the blow-up creating E_i.
  std::size_t creation_step(std::size_t i) const {
    check_divisor(i);
    return creation_[i - 1];
  }
  const BlowupStep& blowup(std::size_t i) const { return std::get<BlowupStep>(steps_[creation_step(i)]); }

  /// Divisors with a coordinate equation after the first `count` steps, mapped to their variable.
  const std::map<std::size_t, std::size_t>& visible_after(std::size_t count) const {
    if (count > steps_.size()) throw InputError("step count beyond the tower");
    return visible_[count];
  }

  /// Visible earlier divisors containing the center of the blow-up creating E_i.
  std::set<std::size_t> visible_containing(std::size_t i) const {
    const std::size_t pos = creation_step(i);
    const BlowupStep& b = blowup(i);
    std::set<std::size_t> out;
    for (const auto& [div, var] : visible_[pos])
      if (std::find(b.center.begin(), b.center.end(), var) != b.center.end()) out.insert(div);
    return out;
  }

  /// Steps up to and including the creation of E_i, with the chart variable
  /// of that last blow-up replaced.
  ChartTower creation_chart(std::size_t i, std::optional<std::size_t> chart = std::nullopt) const {
    const std::size_t pos = creation_step(i);
    std::vector<TowerStep> steps(steps_.begin(), steps_.begin() + static_cast<long>(pos) + 1);
    if (chart) {
      auto& b = std::get<BlowupStep>(steps.back());
      if (std::find(b.center.begin(), b.center.end(), *chart) == b.center.end())
        throw InputError("alternate chart variable is not in the center");
      b.chart = *chart;
    }
    return ChartTower(names_, std::move(steps));
  }

  Polynomial apply(const Polynomial& p, const TowerStep& step) const {
    if (const auto* b = std::get_if<BlowupStep>(&step)) {
      return p.map_exponents([&](const Exponent& e) {
        Exponent f = e;
        for (std::size_t u : b->center)
          if (u != b->chart) f[b->chart] += e[u];
        return f;
      });
    }
    const auto& sh = std::get<ShearStep>(step);
    return p.substitute(sh.target, Polynomial::variable(nvars(), sh.target) - sh.subtrahend);
  }

  Polynomial pullback(const Polynomial& p, std::size_t count) const {
    if (count > steps_.size()) throw InputError("step count beyond the tower");
    Polynomial out = p;
    for (std::size_t k = 0; k < count; ++k) out = apply(out, steps_[k]);
    return out;
  }

  /// Pullback through all steps. Blow-up charts are isomorphisms away from
  /// the new divisor and shears are automorphisms, so for reduced input the
  /// only possible common factors are monomials, which are cancelled here.
  RationalFunction pullback(const RationalFunction& h) const { return pullback(h, steps_.size()); }

  RationalFunction pullback(const RationalFunction& h, std::size_t count) const {
    Polynomial n = pullback(h.numerator(), count);
    Polynomial d = pullback(h.denominator(), count);
    if (d.is_zero()) throw InvariantError("pulled-back denominator vanishes identically");
    Exponent mn = n.monomial_content(), md = d.monomial_content(), m(nvars());
    if (n.is_zero()) return RationalFunction(nvars());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(mn[i], md[i]);
    return RationalFunction::coprime(n.divide_monomial(m), d.divide_monomial(m));
  }

 private:
  void check_divisor(std::size_t i) const {
    if (i < 1 || i > creation_.size())
      throw InputError("divisor E_" + std::to_string(i) + " is not created by this tower");
  }

  void analyze() {
    const std::size_t n = names_.size();
    std::map<std::size_t, std::size_t> vis;  // divisor -> variable
    visible_.push_back(vis);
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      if (auto* b = std::get_if<BlowupStep>(&steps_[k])) {
        std::set<std::size_t> c(b->center.begin(), b->center.end());
        if (c.size() != b->center.size()) throw InputError("repeated variable in a blow-up center");
        if (c.size() < 2) throw InputError("blow-up centers need codimension at least 2");
        for (std::size_t u : c)
          if (u >= n) throw InputError("blow-up center variable out of range");
        if (!c.contains(b->chart)) throw InputError("chart variable must belong to the center");
        std::sort(b->center.begin(), b->center.end());
        // The old divisor with equation x_chart now coincides locally with the new one.
        for (auto it = vis.begin(); it != vis.end();) {
          if (it->second == b->chart) it = vis.erase(it);
          else ++it;
        }
        creation_.push_back(k);
        vis[creation_.size()] = b->chart;
      } else {
        auto& sh = std::get<ShearStep>(steps_[k]);
        if (sh.target >= n) throw InputError("shear target out of range");
        if (sh.subtrahend.nvars() != n) throw InputError("shear polynomial over the wrong variables");
        if (sh.subtrahend.depends_on(sh.target)) throw InputError("shear polynomial must not involve its target");
        for (auto it = vis.begin(); it != vis.end();) {
          if (it->second != sh.target) {
            ++it;
            continue;
          }
          // A divisor x_t = 0 becomes x_t = q; only a translation moves it off the chart origin.
          if (!sh.subtrahend.is_constant() || sh.subtrahend.is_zero())
            throw InputError("shear would bend the divisor E_" + std::to_string(it->first) +
                             " out of coordinate form");
          it = vis.erase(it);
        }
      }
      visible_.push_back(vis);
    }
  }

  std::vector<std::string> names_;
  std::vector<TowerStep> steps_;
  std::vector<std::size_t> creation_;
  std::vector<std::map<std::size_t, std::size_t>> visible_;
};

// --------------------------------------------------------------------------
// Orders and restrictions.

inline BigInt order_along(const RationalFunction& h, std::size_t var) {
  if (h.is_zero()) throw InvariantError("order of the zero function");
  return BigInt(static_cast<unsigned long>(h.numerator().order_in(var))) -
         BigInt(static_cast<unsigned long>(h.denominator().order_in(var)));
}

struct ChartOrder {
  std::string chart;  ///< "creation", "alternate:<var>", "full"
  BigInt order;
};

/// nu_i(h) in every chart of the tower that sees E_i: the creation chart,
/// the other charts of the same blow-up, and the end of the tower if E_i
/// is still visible there.
inline std::vector<ChartOrder> divisor_orders_all_charts(const RationalFunction& h, const ChartTower& tower,
                                                         std::size_t i) {
  std::vector<ChartOrder> out;
  const BlowupStep& b = tower.blowup(i);
  out.push_back({"creation", order_along(tower.creation_chart(i).pullback(h), b.chart)});
  for (std::size_t u : b.center) {
    if (u == b.chart) continue;
    out.push_back({"alternate:" + tower.names()[u], order_along(tower.creation_chart(i, u).pullback(h), u)});
  }
  const auto& vis = tower.visible_after(tower.steps().size());
  if (auto it = vis.find(i); it != vis.end() && tower.creation_step(i) + 1 < tower.steps().size())
    out.push_back({"full", order_along(tower.pullback(h), it->second)});
  return out;
}

inline BigInt divisor_order(const RationalFunction& h, const ChartTower& tower, std::size_t i) {
  auto all = divisor_orders_all_charts(h, tower, i);
  for (const auto& c : all)
    if (c.order != all.front().order)
      throw InvariantError("divisor order depends on the chart (" + c.chart + ")", i);
  return all.front().order;
}

struct Restriction {
  std::size_t divisor = 0;
  std::size_t chart_var = 0;
  BigInt order;
  /// Meaningful when order == 0: the restriction as a function of the other chart variables.
  RationalFunction value;
};

inline Restriction restrict_to(const RationalFunction& h, const ChartTower& tower, std::size_t i,
                               std::optional<std::size_t> chart = std::nullopt) {
  ChartTower prefix = tower.creation_chart(i, chart);
  const std::size_t v = prefix.blowup(i).chart;
  RationalFunction pulled = prefix.pullback(h);
  Restriction out;
  out.divisor = i;
  out.chart_var = v;
  out.order = order_along(pulled, v);
  if (out.order != 0) {
    out.value = RationalFunction(h.nvars());
    return out;
  }
  Exponent en(h.nvars(), 0), ed(h.nvars(), 0);
  en[v] = pulled.numerator().order_in(v);
  ed[v] = pulled.denominator().order_in(v);
  Polynomial n = pulled.numerator().divide_monomial(en).evaluate(v, 0);
  Polynomial d = pulled.denominator().divide_monomial(ed).evaluate(v, 0);
  if (n.is_zero() || d.is_zero()) throw InvariantError("restriction vanishes identically after clearing", i);
  out.value = RationalFunction(std::move(n), std::move(d));
  return out;
}

struct DicriticalStatus {
  bool dicritical = false;
  /// For constant divisors: "0", "inf" or the rational value.
  std::string value;
};

inline DicriticalStatus dicritical_status(const Restriction& r) {
  if (r.order > 0) return {false, "0"};
  if (r.order < 0) return {false, "inf"};
  if (r.value.is_constant()) {
    return {false, to_string(r.value.numerator().constant_term() / r.value.denominator().constant_term())};
  }
  return {true, ""};
}

inline DicriticalStatus dicritical_status(const RationalFunction& h, const ChartTower& tower, std::size_t i) {
  return dicritical_status(restrict_to(h, tower, i));
}

// --------------------------------------------------------------------------
// Degree along a line class.

enum class LineSlot { zero, generic, line };

struct LineClassSpec {
  std::size_t divisor = 0;
  /// One slot per chart variable of the creation chart of E_divisor.
  std::vector<LineSlot> slots;
};

/// The line of a general fiber at creation: the divisor variable is 0, the
/// other center variables move along a generic affine line (fiber direction)
/// and the remaining variables are fixed at a generic point of the center.
inline LineClassSpec default_line_class(const ChartTower& tower, std::size_t i) {
  const BlowupStep& b = tower.blowup(i);
  LineClassSpec spec{i, std::vector<LineSlot>(tower.nvars(), LineSlot::generic)};
  for (std::size_t u : b.center) spec.slots[u] = LineSlot::line;
  spec.slots[b.chart] = LineSlot::zero;
  return spec;
}

inline void check_line_class(const ChartTower& tower, const LineClassSpec& spec) {
  if (spec.slots.size() != tower.nvars()) throw InputError("line template needs one slot per variable");
  if (spec.slots[tower.blowup(spec.divisor).chart] != LineSlot::zero)
    throw InputError("line template does not lie in E_" + std::to_string(spec.divisor));
  if (std::none_of(spec.slots.begin(), spec.slots.end(), [](LineSlot s) { return s == LineSlot::line; }))
    throw InputError("line template has no moving coordinate");
}

/// Degree of a univariate rational function after cancelling the gcd.
inline long reduced_degree(const UPoly& num, const UPoly& den) {
  UPoly g = UPoly::gcd(num, den);
  long dn = UPoly::divmod(num, g).first.degree();
  long dd = UPoly::divmod(den, g).first.degree();
  return std::max(dn, dd);
}

struct DegreeResult {
  long degree = 0;
  unsigned draws = 0;
};

/// Degree of the restriction along a random line of the class; two independent
/// draws must agree, redrawing up to `retries` times.
inline DegreeResult dicritical_degree(const Restriction& r, const LineClassSpec& spec, Rng& rng,
                                      unsigned retries = 8) {
  if (r.order != 0 || r.value.is_constant()) throw InputError("degree requested for a constant divisor");
  const std::size_t n = r.value.nvars();
  if (spec.slots.size() != n) throw InputError("line template needs one slot per variable");
  if (spec.slots[r.chart_var] != LineSlot::zero) throw InputError("line template does not lie in the divisor");
  auto draw = [&]() -> std::optional<long> {
    std::vector<UPoly> images;
    for (LineSlot s : spec.slots) {
      switch (s) {
        case LineSlot::zero: images.emplace_back(); break;
        case LineSlot::generic: images.emplace_back(rng.rational()); break;
        case LineSlot::line: {
          Rational a = rng.rational();
          images.push_back(UPoly::linear(a, rng.rational()));
          break;
        }
      }
    }
    UPoly num = r.value.numerator().evaluate_along(images);
    UPoly den = r.value.denominator().evaluate_along(images);
    if (den.is_zero() || num.is_zero()) return std::nullopt;
    return reduced_degree(num, den);
  };
  DegreeResult out;
  std::optional<long> previous;
  for (unsigned attempt = 0; attempt < retries + 2; ++attempt) {
    std::optional<long> d = draw();
    ++out.draws;
    if (!d) continue;
    if (previous && *previous == *d) {
      out.degree = *d;
      return out;
    }
    previous = d;
  }
  throw InvariantError("line degree disagrees between draws; template is not generic", r.divisor);
}

}  // namespace dicritical
