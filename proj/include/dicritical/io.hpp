#pragma once

// JSON encoding of descriptors, polynomials, towers and certificates.
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are {"num", "den"}; linear forms are
// {"const", "coeffs": {"j": rational}}.

#include <dicritical/candidate.hpp>
#include <dicritical/chart.hpp>
#include <dicritical/linear_form.hpp>
#include <dicritical/modification.hpp>
#include <dicritical/solver.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

namespace dicritical {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// --------------------------------------------------------------------------
// Scalars.

inline Json to_json_int(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline BigInt int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<unsigned long>()) : BigInt(j.get<long>());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError(std::string("malformed integer in ") + what);
    return v;
  }
  throw InputError(std::string("expected an exact integer in ") + what);
}

inline std::size_t index_from_json(const Json& j, const char* what) {
  BigInt v = int_from_json(j, what);
  if (v < 0 || !v.fits_ulong_p()) throw InputError(std::string("index out of range in ") + what);
  return v.get_ui();
}

inline std::size_t index_from_key(const std::string& key, const char* what) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(key, &pos);
    if (pos != key.size()) throw InputError(std::string("malformed index key in ") + what);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(std::string("malformed index key in ") + what);
  }
}

inline Json to_json_rational(const Rational& q) {
  return Json{{"num", to_json_int(q.get_num())}, {"den", to_json_int(q.get_den())}};
}

/// Accepts {"num", "den"} or a bare integer.
inline Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) throw InputError(std::string("rational needs num and den in ") + what);
    return make_rational(int_from_json(j.at("num"), what), int_from_json(j.at("den"), what));
  }
  return Rational(int_from_json(j, what));
}

inline Json to_json_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json_int(x));
  return out;
}

inline IntVector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("expected an array in ") + what);
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

inline Json to_json_index_set(const IndexSet& s) { return Json(std::vector<std::size_t>(s.begin(), s.end())); }

inline IndexSet index_set_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("expected an index array in ") + what);
  IndexSet out;
  for (const auto& x : j) out.insert(index_from_json(x, what));
  return out;
}

inline Json to_json_index_map(const std::map<std::size_t, BigInt>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = to_json_int(v);
  return out;
}

inline std::map<std::size_t, BigInt> index_map_from_json(const Json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string("expected an object keyed by index in ") + what);
  std::map<std::size_t, BigInt> out;
  for (const auto& [k, v] : j.items()) out[index_from_key(k, what)] = int_from_json(v, what);
  return out;
}

inline Json to_json_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json_int(m(r, c)));
    out.push_back(row);
  }
  return out;
}

inline IntMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty, const char* what) {
  if (!j.is_array()) throw InputError(std::string("expected a matrix in ") + what);
  const std::size_t cols = j.empty() ? cols_if_empty : j.front().size();
  IntMatrix out(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != cols) throw InputError(std::string("ragged matrix in ") + what);
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = int_from_json(j[r][c], what);
  }
  return out;
}

inline Json to_json(const LinearForm& f) {
  Json coeffs = Json::object();
  for (const auto& [j, c] : f.coefficients()) coeffs[std::to_string(j)] = to_json_rational(c);
  return Json{{"const", to_json_rational(f.constant())}, {"coeffs", coeffs}};
}

inline LinearForm linear_form_from_json(const Json& j) {
  LinearForm f(rational_from_json(j.at("const"), "linear form"));
  for (const auto& [k, v] : j.at("coeffs").items())
    f.add_coefficient(index_from_key(k, "linear form"), rational_from_json(v, "linear form"));
  return f;
}

// --------------------------------------------------------------------------
// Descriptor.

inline Json to_json(const ModificationDescriptor& d) {
  Json centers = Json::array();
  for (const auto& c : d.centers)
    centers.push_back(
        Json{{"dim", c.dim}, {"D", to_json_index_set(c.containing)}, {"T_row", to_json_vector(c.curvette_row)}});
  Json out{{"n", d.n}, {"m", d.m}, {"centers", centers}};
  if (!d.special.empty()) {
    Json sp = Json::array();
    for (const auto& s : d.special) sp.push_back(Json{{"owner", s.owner}, {"mu_row", to_json_vector(s.mu)}});
    out["special"] = sp;
  }
  if (d.thm4) {
    auto entries = [](const std::vector<MultEntry>& v) {
      Json a = Json::array();
      for (const auto& e : v) a.push_back(Json{{"i", e.i}, {"j", e.j}, {"mu", to_json_int(e.mu)}});
      return a;
    };
    out["thm4"] = Json{{"s", d.thm4->s}, {"muZ", entries(d.thm4->later_curvette)},
                       {"muH", entries(d.thm4->later_special)}};
  }
  return out;
}

inline ModificationDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("descriptor must be an object");
  ModificationDescriptor d;
  d.n = index_from_json(j.at("n"), "descriptor.n");
  d.m = index_from_json(j.at("m"), "descriptor.m");
  for (const auto& c : j.at("centers")) {
    Center center;
    center.dim = index_from_json(c.at("dim"), "center.dim");
    center.containing = index_set_from_json(c.at("D"), "center.D");
    center.curvette_row = vector_from_json(c.at("T_row"), "center.T_row");
    d.centers.push_back(std::move(center));
  }
  if (j.contains("special")) {
    for (const auto& s : j.at("special"))
      d.special.push_back(
          SpecialRow{index_from_json(s.at("owner"), "special.owner"), vector_from_json(s.at("mu_row"), "special")});
  }
  if (j.contains("thm4")) {
    const Json& t = j.at("thm4");
    Thm4Data data;
    data.s = index_from_json(t.at("s"), "thm4.s");
    auto entries = [](const Json& a, const char* what) {
      std::vector<MultEntry> out;
      if (!a.is_array()) throw InputError(std::string("expected an array in ") + what);
      for (const auto& e : a)
        out.push_back(MultEntry{index_from_json(e.at("i"), what), index_from_json(e.at("j"), what),
                                int_from_json(e.at("mu"), what)});
      return out;
    };
    if (t.contains("muZ")) data.later_curvette = entries(t.at("muZ"), "thm4.muZ");
    if (t.contains("muH")) data.later_special = entries(t.at("muH"), "thm4.muH");
    d.thm4 = std::move(data);
  }
  return d;
}

// --------------------------------------------------------------------------
// Polynomials and towers. Scenario files write polynomials as expressions
// over the tower's variable names; term lists are accepted as well.

/// Canonical term list, ascending exponent order.
inline Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json coeff = c.get_den() == 1 ? to_json_int(c.get_num()) : to_json_rational(c);
    out.push_back(Json{{"c", coeff}, {"e", e}});
  }
  return out;
}

namespace detail {

/// Recursive-descent reader for the notation printed by Polynomial::to_string:
/// sums of products of rationals, variable names, powers and parentheses.
/// Juxtaposition multiplies ("3/2 y*z"); division is by nonzero constants only.
class PolynomialReader {
 public:
  PolynomialReader(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial read() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial \"" + std::string(s_) + "\": " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  Polynomial sum() {
    Polynomial out(names_.size());
    bool first = true;
    for (;;) {
      bool negative = false;
      if (peek('+') || peek('-')) {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        return out;
      }
      Polynomial t = product();
      out = negative ? out - t : out + t;
      first = false;
    }
  }

  Polynomial product() {
    Polynomial out = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        out = out * power();
      } else if (peek('/')) {
        ++pos_;
        Polynomial q = power();
        if (!q.is_constant() || q.is_zero()) fail("division by a nonconstant or zero");
        out *= Rational(1) / q.constant_term();
      } else if (starts_factor()) {
        out = out * power();
      } else {
        return out;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small exponent");
    return base.pow(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!peek(')')) fail("missing )");
      ++pos_;
      return p;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(names_.size(), Rational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable " + name);
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return detail::PolynomialReader(text, names).read();
}

/// A polynomial is either an expression string or an explicit term list.
inline Polynomial polynomial_from_json(const Json& j, const std::vector<std::string>& names) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), names);
  if (!j.is_array()) throw InputError("polynomial must be a string or a term list");
  const std::size_t nvars = names.size();
  Polynomial p(nvars);
  for (const auto& t : j) {
    Exponent e;
    for (const auto& x : t.at("e")) {
      BigInt v = int_from_json(x, "polynomial exponent");
      if (v < 0 || v > 100000) throw InputError("polynomial exponent out of range");
      e.push_back(static_cast<std::uint32_t>(v.get_ui()));
    }
    if (e.size() != nvars) throw InputError("polynomial exponent has the wrong length");
    p.add_term(e, rational_from_json(t.at("c"), "polynomial coefficient"));
  }
  return p;
}

inline std::size_t variable_index(const std::vector<std::string>& names, const Json& j) {
  if (!j.is_string()) throw InputError("variables are referred to by name");
  auto it = std::find(names.begin(), names.end(), j.get<std::string>());
  if (it == names.end()) throw InputError("unknown variable " + j.get<std::string>());
  return static_cast<std::size_t>(it - names.begin());
}

inline Json to_json(const ChartTower& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps()) {
    if (const auto* b = std::get_if<BlowupStep>(&s)) {
      Json center = Json::array();
      for (std::size_t u : b->center) center.push_back(t.names()[u]);
      steps.push_back(Json{{"blowup", Json{{"center", center}, {"chart", t.names()[b->chart]}}}});
    } else {
      const auto& sh = std::get<ShearStep>(s);
      steps.push_back(Json{{"shear", Json{{"target", t.names()[sh.target]}, {"subtrahend", sh.subtrahend.to_string(t.names())}}}});
    }
  }
  return Json{{"variables", t.names()}, {"steps", steps}};
}

inline ChartTower tower_from_json(const Json& j) {
  std::vector<std::string> names;
  for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
  std::vector<TowerStep> steps;
  for (const auto& s : j.at("steps")) {
    if (s.contains("blowup")) {
      const Json& b = s.at("blowup");
      BlowupStep step;
      for (const auto& u : b.at("center")) step.center.push_back(variable_index(names, u));
      step.chart = variable_index(names, b.at("chart"));
      steps.emplace_back(std::move(step));
    } else if (s.contains("shear")) {
      const Json& sh = s.at("shear");
      steps.emplace_back(ShearStep{variable_index(names, sh.at("target")),
                                   polynomial_from_json(sh.at("subtrahend"), names)});
    } else {
      throw InputError("tower step must be a blowup or a shear");
    }
  }
  return ChartTower(std::move(names), std::move(steps));
}

inline Json to_json(const Equations& eq, const std::vector<std::string>& names) {
  Json curv = Json::object(), spec = Json::object();
  for (const auto& [i, list] : eq.curvettes) {
    Json a = Json::array();
    for (const auto& p : list) a.push_back(p.to_string(names));
    curv[std::to_string(i)] = a;
  }
  for (const auto& [j, p] : eq.special) spec[std::to_string(j)] = p.to_string(names);
  return Json{{"curvettes", curv}, {"special", spec}};
}

inline Equations equations_from_json(const Json& j, const std::vector<std::string>& names) {
  Equations eq;
  if (j.contains("curvettes"))
    for (const auto& [k, list] : j.at("curvettes").items())
      for (const auto& p : list) eq.curvettes[index_from_key(k, "equations")].push_back(polynomial_from_json(p, names));
  if (j.contains("special"))
    for (const auto& [k, p] : j.at("special").items())
      eq.special[index_from_key(k, "equations")] = polynomial_from_json(p, names);
  return eq;
}

inline const char* slot_name(LineSlot s) {
  switch (s) {
    case LineSlot::zero: return "zero";
    case LineSlot::generic: return "generic";
    case LineSlot::line: return "line";
  }
  return "?";
}

inline LineSlot slot_from_json(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "zero") return LineSlot::zero;
  if (s == "generic") return LineSlot::generic;
  if (s == "line") return LineSlot::line;
  throw InputError("line template slot must be zero, generic or line");
}

inline Json to_json(const LineClassSpec& spec, const std::vector<std::string>& names) {
  Json tmpl = Json::object();
  for (std::size_t v = 0; v < spec.slots.size(); ++v) tmpl[names[v]] = slot_name(spec.slots[v]);
  return Json{{"divisor", spec.divisor}, {"template", tmpl}};
}

inline LineClassSpec line_from_json(const Json& j, const std::vector<std::string>& names) {
  LineClassSpec spec;
  spec.divisor = index_from_json(j.at("divisor"), "lines.divisor");
  spec.slots.assign(names.size(), LineSlot::generic);
  for (const auto& [k, v] : j.at("template").items()) spec.slots[variable_index(names, Json(k))] = slot_from_json(v);
  return spec;
}

// --------------------------------------------------------------------------
// Certificates.

inline Json to_json(const SupportCertificate& c) {
  Json split = Json::array();
  for (bool b : c.needs_split) split.push_back(b);
  Json status = Json::array();
  for (auto s : classify(c.N, c.r)) status.push_back(status_name(s));
  return Json{{"J", to_json_index_set(c.J)}, {"r", to_json_vector(c.r)}, {"N", to_json_vector(c.N)},
              {"needs_split", split}, {"status", status}};
}

inline SupportCertificate support_from_json(const Json& j) {
  SupportCertificate c;
  c.J = index_set_from_json(j.at("J"), "support.J");
  c.r = vector_from_json(j.at("r"), "support.r");
  c.N = vector_from_json(j.at("N"), "support.N");
  for (const auto& b : j.at("needs_split")) c.needs_split.push_back(b.get<bool>());
  return c;
}

inline Json to_json(const Prop3Certificate& c) {
  return Json{{"s", c.s},
              {"d", to_json_int(c.d)},
              {"owners", c.owners},
              {"r_prime", to_json_vector(c.r_prime)},
              {"ell", to_json_vector(c.ell)},
              {"r", to_json_vector(c.r)},
              {"N", to_json_vector(c.N)},
              {"A_prev", to_json_matrix(c.A_prev)},
              {"B_prev", to_json_matrix(c.B_prev)},
              {"C", to_json_matrix(c.C)},
              {"last_equation_holds", c.last_equation_holds},
              {"f_orders", to_json_vector(c.f_orders)},
              {"g_orders", to_json_vector(c.g_orders)}};
}

inline Prop3Certificate prop3_from_json(const Json& j) {
  Prop3Certificate c;
  c.s = index_from_json(j.at("s"), "prop3.s");
  c.d = int_from_json(j.at("d"), "prop3.d");
  for (const auto& o : j.at("owners")) c.owners.push_back(index_from_json(o, "prop3.owners"));
  c.r_prime = vector_from_json(j.at("r_prime"), "prop3.r_prime");
  c.ell = vector_from_json(j.at("ell"), "prop3.ell");
  c.r = vector_from_json(j.at("r"), "prop3.r");
  c.N = vector_from_json(j.at("N"), "prop3.N");
  const std::size_t w = c.s - 1;
  c.A_prev = matrix_from_json(j.at("A_prev"), w, "prop3.A_prev");
  c.B_prev = matrix_from_json(j.at("B_prev"), w, "prop3.B_prev");
  c.C = matrix_from_json(j.at("C"), w, "prop3.C");
  c.last_equation_holds = j.at("last_equation_holds").get<bool>();
  c.f_orders = vector_from_json(j.at("f_orders"), "prop3.f_orders");
  c.g_orders = vector_from_json(j.at("g_orders"), "prop3.g_orders");
  return c;
}

inline Json to_json(const Thm4Certificate& c) {
  auto forms = [](const std::vector<LinearForm>& v) {
    Json a = Json::array();
    for (const auto& f : v) a.push_back(to_json(f));
    return a;
  };
  Json W = Json::object(), windows = Json::object();
  for (const auto& [i, w] : c.W) W[std::to_string(i)] = to_json(w);
  for (const auto& [i, w] : c.windows)
    windows[std::to_string(i)] = Json{{"lower", to_json(w.lower)}, {"upper", to_json(w.upper)}};
  return Json{{"s", c.s},
              {"d", to_json_int(c.d)},
              {"base", to_json(c.base)},
              {"bounds", Json{{"bound", to_json_int(c.bounds.bound)},
                              {"nprime_min", to_json_int(c.bounds.nprime_min)},
                              {"ell_min", to_json_vector(c.bounds.ell_min)}}},
              {"doublings", c.doublings},
              {"a_s", to_json_vector(c.a_s)},
              {"alpha", forms(c.alpha)},
              {"beta", forms(c.beta)},
              {"nprime", to_json_vector(c.nprime)},
              {"p", to_json_index_map(c.p)},
              {"W", W},
              {"windows", windows},
              {"lower", to_json(c.lower)},
              {"K", to_json_int(c.K)},
              {"k", to_json_index_map(c.k)},
              {"ell", to_json_int(c.ell)},
              {"alpha_value", to_json_vector(c.alpha_value)},
              {"beta_value", to_json_vector(c.beta_value)},
              {"N", to_json_vector(c.N)},
              {"forced", c.forced},
              {"invariants_ok", c.invariants_ok},
              {"violations", c.violations}};
}

inline Thm4Certificate thm4_from_json(const Json& j) {
  Thm4Certificate c;
  auto forms = [](const Json& a) {
    std::vector<LinearForm> v;
    for (const auto& f : a) v.push_back(linear_form_from_json(f));
    return v;
  };
  c.s = index_from_json(j.at("s"), "thm4.s");
  c.d = int_from_json(j.at("d"), "thm4.d");
  c.base = prop3_from_json(j.at("base"));
  const Json& b = j.at("bounds");
  c.bounds.bound = int_from_json(b.at("bound"), "thm4.bounds");
  c.bounds.nprime_min = int_from_json(b.at("nprime_min"), "thm4.bounds");
  c.bounds.ell_min = vector_from_json(b.at("ell_min"), "thm4.bounds");
  c.doublings = j.at("doublings").get<unsigned>();
  c.a_s = vector_from_json(j.at("a_s"), "thm4.a_s");
  c.alpha = forms(j.at("alpha"));
  c.beta = forms(j.at("beta"));
  c.nprime = vector_from_json(j.at("nprime"), "thm4.nprime");
  c.p = index_map_from_json(j.at("p"), "thm4.p");
  for (const auto& [k, v] : j.at("W").items()) c.W[index_from_key(k, "thm4.W")] = linear_form_from_json(v);
  for (const auto& [k, v] : j.at("windows").items())
    c.windows[index_from_key(k, "thm4.windows")] =
        Window{linear_form_from_json(v.at("lower")), linear_form_from_json(v.at("upper"))};
  c.lower = linear_form_from_json(j.at("lower"));
  c.K = int_from_json(j.at("K"), "thm4.K");
  c.k = index_map_from_json(j.at("k"), "thm4.k");
  c.ell = int_from_json(j.at("ell"), "thm4.ell");
  c.alpha_value = vector_from_json(j.at("alpha_value"), "thm4.alpha_value");
  c.beta_value = vector_from_json(j.at("beta_value"), "thm4.beta_value");
  c.N = vector_from_json(j.at("N"), "thm4.N");
  c.forced = j.at("forced").get<bool>();
  c.invariants_ok = j.at("invariants_ok").get<bool>();
  c.violations = j.at("violations").get<std::vector<std::string>>();
  return c;
}

inline Json to_json(const MainCertificate& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors)
    factors.push_back(Json{{"j", f.j},
                           {"degree", to_json_int(f.degree)},
                           {"a", "a_" + std::to_string(f.j)},
                           {"b", "b_" + std::to_string(f.j)},
                           {"certificate", to_json(f.cert)}});
  return Json{{"J", to_json_index_set(c.J)},
              {"factors", factors},
              {"predicted", to_json_vector(c.predicted)},
              {"profile", c.profile},
              {"constraint", c.constraint}};
}

inline MainCertificate main_from_json(const Json& j) {
  MainCertificate c;
  c.J = index_set_from_json(j.at("J"), "main.J");
  for (const auto& f : j.at("factors"))
    c.factors.push_back(MainFactor{index_from_json(f.at("j"), "main.factors"), int_from_json(f.at("degree"), "main"),
                                   thm4_from_json(f.at("certificate"))});
  c.predicted = vector_from_json(j.at("predicted"), "main.predicted");
  c.profile = j.at("profile").get<std::vector<std::string>>();
  c.constraint = j.at("constraint").get<std::string>();
  return c;
}

}  // namespace dicritical
