#pragma once

// Scenarios bundle a descriptor, an optional explicit tower with equations,
// and a solver request. The run_* functions are the pipelines behind the CLI
// subcommands; they are pure apart from the optional artifact writer.

#include <dicritical/candidate.hpp>
#include <dicritical/io.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dicritical {

struct SupportRequest {
  IndexSet J;
  std::map<std::size_t, BigInt> offs;
};

using SolverRequest = std::variant<SupportRequest, Prop3Request, Thm4Request, MainRequest>;

inline const char* request_kind(const SolverRequest& r) {
  static constexpr const char* names[] = {"support", "prop3", "thm4", "main"};
  return names[r.index()];
}

struct Scenario {
  std::string name;
  ModificationDescriptor descriptor;
  std::optional<ChartTower> tower;
  Equations equations;
  std::map<std::size_t, LineClassSpec> lines;
  std::optional<SolverRequest> request;
  std::uint64_t seed = 0;
};

// --------------------------------------------------------------------------
// Loading.

namespace detail {

inline void check_schema(const Json& j, const char* what) {
  if (!j.contains("schema_version")) return;
  if (!j.at("schema_version").is_number_integer() || j.at("schema_version").get<long>() != kSchemaVersion)
    throw InputError(std::string("unsupported schema_version in ") + what);
}

inline std::optional<ForcedChoice> force_from_json(const Json& j, const ModificationDescriptor& d, std::size_t s) {
  ForcedChoice f;
  f.ell = int_from_json(j.at("ell"), "force.ell");
  const Json& k = j.at("k");
  if (k.is_object()) {
    f.k = index_map_from_json(k, "force.k");
  } else {
    // A single integer applies to every later curvette.
    BigInt all = int_from_json(k, "force.k");
    for (std::size_t i = s + 1; i <= d.m; ++i) f.k[i] = all;
  }
  return f;
}

inline Thm4Request thm4_request_from_json(const Json& j, const ModificationDescriptor& d) {
  Thm4Request r;
  if (j.contains("s")) r.s = index_from_json(j.at("s"), "request.s");
  if (j.contains("d")) r.d = int_from_json(j.at("d"), "request.d");
  if (j.contains("r_prime")) r.r_prime = vector_from_json(j.at("r_prime"), "request.r_prime");
  if (j.contains("ell")) r.ell = vector_from_json(j.at("ell"), "request.ell");
  if (j.contains("targets")) r.targets = index_map_from_json(j.at("targets"), "request.targets");
  if (j.contains("force")) r.force = force_from_json(j.at("force"), d, r.s);
  return r;
}

inline Json thm4_request_to_json(const Thm4Request& r, bool with_s) {
  Json out = Json::object();
  if (with_s) out["s"] = r.s;
  out["d"] = to_json_int(r.d);
  if (!r.r_prime.empty()) out["r_prime"] = to_json_vector(r.r_prime);
  if (!r.ell.empty()) out["ell"] = to_json_vector(r.ell);
  if (!r.targets.empty()) out["targets"] = to_json_index_map(r.targets);
  if (r.force) out["force"] = Json{{"k", to_json_index_map(r.force->k)}, {"ell", to_json_int(r.force->ell)}};
  return out;
}

}  // namespace detail

inline SolverRequest request_from_json(const Json& j, const ModificationDescriptor& d) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "support") {
    SupportRequest r;
    r.J = index_set_from_json(j.at("J"), "request.J");
    if (j.contains("offs")) r.offs = index_map_from_json(j.at("offs"), "request.offs");
    return r;
  }
  if (kind == "prop3") {
    Prop3Request r;
    r.s = index_from_json(j.at("s"), "request.s");
    if (j.contains("d")) r.d = int_from_json(j.at("d"), "request.d");
    if (j.contains("r_prime")) r.r_prime = vector_from_json(j.at("r_prime"), "request.r_prime");
    if (j.contains("ell")) r.ell = vector_from_json(j.at("ell"), "request.ell");
    if (j.contains("targets")) r.targets = index_map_from_json(j.at("targets"), "request.targets");
    return r;
  }
  if (kind == "thm4") {
    if (!j.contains("s")) throw InputError("thm4 request needs s");
    return detail::thm4_request_from_json(j, d);
  }
  if (kind == "main") {
    MainRequest r;
    r.J = index_set_from_json(j.at("J"), "request.J");
    if (j.contains("degrees")) {
      const Json& deg = j.at("degrees");
      if (deg.is_array()) {
        // Listed in the order of J.
        if (deg.size() != r.J.size()) throw InputError("one degree per element of J");
        auto it = r.J.begin();
        for (const auto& x : deg) r.degrees[*it++] = int_from_json(x, "request.degrees");
      } else {
        r.degrees = index_map_from_json(deg, "request.degrees");
      }
    }
    if (j.contains("overrides"))
      for (const auto& [k, v] : j.at("overrides").items())
        r.overrides[index_from_key(k, "request.overrides")] = detail::thm4_request_from_json(v, d);
    return r;
  }
  throw InputError("request kind must be support, prop3, thm4 or main");
}

inline Json request_to_json(const SolverRequest& req) {
  Json out{{"kind", request_kind(req)}};
  if (const auto* r = std::get_if<SupportRequest>(&req)) {
    out["J"] = to_json_index_set(r->J);
    if (!r->offs.empty()) out["offs"] = to_json_index_map(r->offs);
  } else if (const auto* r = std::get_if<Prop3Request>(&req)) {
    out["s"] = r->s;
    out["d"] = to_json_int(r->d);
    if (!r->r_prime.empty()) out["r_prime"] = to_json_vector(r->r_prime);
    if (!r->ell.empty()) out["ell"] = to_json_vector(r->ell);
    if (!r->targets.empty()) out["targets"] = to_json_index_map(r->targets);
  } else if (const auto* r = std::get_if<Thm4Request>(&req)) {
    out.update(detail::thm4_request_to_json(*r, true));
  } else {
    const auto& m = std::get<MainRequest>(req);
    out["J"] = to_json_index_set(m.J);
    if (!m.degrees.empty()) out["degrees"] = to_json_index_map(m.degrees);
    if (!m.overrides.empty()) {
      Json o = Json::object();
      for (const auto& [j, r] : m.overrides) o[std::to_string(j)] = detail::thm4_request_to_json(r, false);
      out["overrides"] = o;
    }
  }
  return out;
}

inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("scenario must be a JSON object");
  detail::check_schema(j, "scenario");
  Scenario sc;
  sc.name = j.value("name", std::string("scenario"));
  if (sc.name.empty() || sc.name.find_first_of("/\\") != std::string::npos)
    throw InputError("scenario name must be a nonempty file-name component");
  if (j.contains("seed")) {
    BigInt seed = int_from_json(j.at("seed"), "seed");
    if (seed < 0 || !seed.fits_ulong_p()) throw InputError("seed must be an unsigned 64-bit integer");
    sc.seed = seed.get_ui();
  }
  sc.descriptor = descriptor_from_json(j.at("descriptor"));
  require_valid(sc.descriptor);
  if (j.contains("tower")) {
    sc.tower = tower_from_json(j.at("tower"));
    auto issues = tower_mismatches(sc.descriptor, *sc.tower);
    if (!issues.empty()) throw InputError("tower does not match the descriptor: " + issues.front());
    if (j.contains("equations")) sc.equations = equations_from_json(j.at("equations"), sc.tower->names());
    if (j.contains("lines"))
      for (const auto& l : j.at("lines")) {
        LineClassSpec spec = line_from_json(l, sc.tower->names());
        check_line_class(*sc.tower, spec);
        sc.lines[spec.divisor] = std::move(spec);
      }
  } else if (j.contains("equations") || j.contains("lines")) {
    throw InputError("equations and lines need a tower");
  }
  if (j.contains("request")) sc.request = request_from_json(j.at("request"), sc.descriptor);
  return sc;
}

inline Json to_json(const Scenario& sc) {
  Json out{{"schema_version", kSchemaVersion}, {"name", sc.name}, {"seed", sc.seed},
           {"descriptor", to_json(sc.descriptor)}};
  if (sc.tower) {
    out["tower"] = to_json(*sc.tower);
    out["equations"] = to_json(sc.equations, sc.tower->names());
    if (!sc.lines.empty()) {
      Json lines = Json::array();
      for (const auto& [i, spec] : sc.lines) lines.push_back(to_json(spec, sc.tower->names()));
      out["lines"] = lines;
    }
  }
  if (sc.request) out["request"] = request_to_json(*sc.request);
  return out;
}

inline Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

// --------------------------------------------------------------------------
// Certificates.

using Certificate = std::variant<SupportCertificate, Prop3Certificate, Thm4Certificate, MainCertificate>;

inline const char* certificate_kind(const Certificate& c) {
  static constexpr const char* names[] = {"support", "prop3", "thm4", "main"};
  return names[c.index()];
}

inline Json certificate_body(const Certificate& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

inline Certificate certificate_from_body(const std::string& kind, const Json& j) {
  if (kind == "support") return support_from_json(j);
  if (kind == "prop3") return prop3_from_json(j);
  if (kind == "thm4") return thm4_from_json(j);
  if (kind == "main") return main_from_json(j);
  throw InputError("unknown certificate kind " + kind);
}

/// Solves the scenario's request; descriptor validation already happened at load.
inline Certificate solve(const Scenario& sc, unsigned retries = 8) {
  if (!sc.request) throw InputError("scenario " + sc.name + " has no solver request");
  const auto& d = sc.descriptor;
  return std::visit(
      [&](const auto& req) -> Certificate {
        using T = std::decay_t<decltype(req)>;
        if constexpr (std::is_same_v<T, SupportRequest>) {
          return solve_support(valuation_matrix(d), req.J, req.offs);
        } else if constexpr (std::is_same_v<T, Prop3Request>) {
          return prop3_solve(d, req);
        } else if constexpr (std::is_same_v<T, Thm4Request>) {
          Thm4Request r = req;
          r.retries = retries;
          return thm4_certificate(d, r);
        } else {
          MainRequest r = req;
          r.retries = retries;
          return solve_main(d, r);
        }
      },
      *sc.request);
}

/// Full order vector the certificate predicts for the function it describes.
inline IntVector predicted_orders(const Certificate& cert) {
  if (const auto* c = std::get_if<SupportCertificate>(&cert)) return c->N;
  if (const auto* c = std::get_if<Prop3Certificate>(&cert)) {
    IntVector out;
    for (std::size_t i = 0; i < c->f_orders.size(); ++i)
      out.push_back(i < c->N.size() ? c->N[i] : c->f_orders[i] - c->g_orders[i]);
    return out;
  }
  if (const auto* c = std::get_if<Thm4Certificate>(&cert)) return c->N;
  return std::get<MainCertificate>(cert).predicted;
}

/// What the construction promises about E_i.
struct Expectation {
  enum class Kind { any, constant, dicritical } kind = Kind::any;
  std::optional<BigInt> degree;  ///< exact degree; absent: any degree >= 1

  std::string to_string() const {
    switch (kind) {
      case Kind::any: return "any";
      case Kind::constant: return "constant";
      case Kind::dicritical: return degree ? "dicritical deg " + degree->get_str() : "dicritical deg>=1";
    }
    return "?";
  }
};

inline std::vector<Expectation> expected_profile(const Certificate& cert, std::size_t m) {
  using K = Expectation::Kind;
  std::vector<Expectation> out(m, Expectation{K::constant, std::nullopt});
  if (const auto* c = std::get_if<SupportCertificate>(&cert)) {
    for (std::size_t j : c->J) out[j - 1] = {K::dicritical, std::nullopt};
  } else if (const auto* c = std::get_if<Prop3Certificate>(&cert)) {
    for (std::size_t i = c->s + 1; i <= m; ++i) out[i - 1] = {K::any, std::nullopt};
    out[c->s - 1] = {K::dicritical, c->d};
  } else if (const auto* c = std::get_if<Thm4Certificate>(&cert)) {
    out[c->s - 1] = {K::dicritical, c->d};
  } else {
    for (const auto& f : std::get<MainCertificate>(cert).factors) out[f.j - 1] = {K::dicritical, f.degree};
  }
  return out;
}

// --------------------------------------------------------------------------
// Matrix command.

struct MatrixReport {
  IntMatrix a;
  IntVector minors;
  std::optional<IntMatrix> b;  ///< special rows for the scenario's target index
  std::size_t b_target = 0;
  IntVector b_ell;
  bool ok = false;
};

inline MatrixReport run_matrix(const Scenario& sc) {
  MatrixReport rep;
  const auto& d = sc.descriptor;
  rep.a = valuation_matrix(d).a;
  rep.minors = leading_principal_minors(rep.a);
  rep.ok = all_ones(rep.minors);
  if (!d.special.empty()) {
    std::size_t s = d.thm4 ? d.thm4->s : d.m;
    IntVector ell;
    if (sc.request) {
      if (const auto* r = std::get_if<Prop3Request>(&*sc.request)) s = r->s, ell = r->ell;
      if (const auto* r = std::get_if<Thm4Request>(&*sc.request)) s = r->s, ell = r->ell;
    }
    if (ell.empty()) ell.assign(special_owners(d, s).size(), 1);
    if (!special_owners(d, s).empty()) {
      rep.b = special_matrix(d, s, ell, d.m);
      rep.b_target = s;
      rep.b_ell = ell;
    }
  }
  return rep;
}

inline Json to_json(const MatrixReport& r) {
  Json out{{"A", to_json_matrix(r.a)}, {"minors", to_json_vector(r.minors)}, {"unimodular", r.ok}};
  if (r.b) {
    out["B"] = Json{{"s", r.b_target}, {"ell", to_json_vector(r.b_ell)}, {"rows", to_json_matrix(*r.b)}};
    out["stacked"] = to_json_matrix(r.a.stacked(*r.b));
  }
  return out;
}

// --------------------------------------------------------------------------
// Verification.

struct DivisorRow {
  std::size_t index = 0;
  BigInt predicted;
  std::optional<BigInt> symbolic;  ///< absent when the charts disagree
  std::vector<ChartOrder> chart_orders;
  bool dicritical = false;
  std::string value;  ///< constant value on E_i
  std::optional<long> degree;
  std::string restriction;
  bool charts_agree = true;
  Expectation expected;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

struct VerifyReport {
  std::string kind;
  std::vector<DivisorRow> rows;
  std::vector<std::string> structure;
  std::vector<std::pair<std::size_t, MobiusConstants>> mobius;
  std::string function;
  bool pass() const {
    if (!structure.empty()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const DivisorRow& r) { return r.ok(); });
  }
};

namespace detail {

/// Stable 64-bit label for RNG sub-streams.
inline std::uint64_t label_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

}  // namespace detail

/// The explicit function a certificate describes. Main certificates draw their
/// Moebius constants from the scenario seed; they are reported back.
inline RationalFunction build_candidate(const Scenario& sc, const Certificate& cert,
                                        std::vector<std::pair<std::size_t, MobiusConstants>>* mobius = nullptr,
                                        unsigned retries = 8) {
  if (!sc.tower) throw InputError("scenario " + sc.name + " has no chart tower");
  const auto& eq = sc.equations;
  const std::size_t n = sc.tower->nvars();
  if (const auto* c = std::get_if<SupportCertificate>(&cert)) return build_support(*c, eq, n);
  if (const auto* c = std::get_if<Prop3Certificate>(&cert)) return build_prop3(*c, eq);
  if (const auto* c = std::get_if<Thm4Certificate>(&cert)) return build_thm4(*c, eq);
  const auto& main = std::get<MainCertificate>(cert);
  Rng root(sc.seed);
  std::vector<RationalFunction> factors;
  std::vector<MobiusConstants> constants;
  for (const auto& f : main.factors) {
    factors.push_back(build_thm4(f.cert, eq));
    Rng rng = root.stream(detail::label_hash("mobius:" + std::to_string(f.j)));
    constants.push_back(choose_mobius_constants(factors.back(), *sc.tower, rng, retries));
    if (mobius) mobius->emplace_back(f.j, constants.back());
  }
  return build_main(factors, constants);
}

/// Status, value, degree and restriction of h on E_i, with the checks shared
/// by every certificate kind.
inline DivisorRow inspect_divisor(const RationalFunction& h, const Scenario& sc, std::size_t i, Rng rng,
                                  unsigned retries) {
  const ChartTower& tower = *sc.tower;
  DivisorRow row;
  row.index = i;
  row.chart_orders = divisor_orders_all_charts(h, tower, i);
  for (const auto& c : row.chart_orders)
    if (c.order != row.chart_orders.front().order) row.charts_agree = false;
  if (row.charts_agree) row.symbolic = row.chart_orders.front().order;
  else row.problems.push_back("order depends on the chart");

  Restriction res = restrict_to(h, tower, i);
  DicriticalStatus st = dicritical_status(res);
  row.dicritical = st.dicritical;
  row.value = st.value;
  if (res.order == 0) row.restriction = res.value.to_string(tower.names());

  // The other charts of the same blow-up must see the same behaviour.
  const BlowupStep& b = tower.blowup(i);
  for (std::size_t u : b.center) {
    if (u == b.chart) continue;
    DicriticalStatus alt = dicritical_status(restrict_to(h, tower, i, u));
    if (alt.dicritical != st.dicritical || alt.value != st.value) {
      row.charts_agree = false;
      row.problems.push_back("restriction differs in chart " + tower.names()[u]);
    }
  }
  if (st.dicritical) {
    auto it = sc.lines.find(i);
    LineClassSpec spec = it == sc.lines.end() ? default_line_class(tower, i) : it->second;
    row.degree = dicritical_degree(res, spec, rng, retries).degree;
  }
  return row;
}

inline VerifyReport run_verify(const Scenario& sc, const Certificate& cert, unsigned retries = 8) {
  if (!sc.tower) throw InputError("scenario " + sc.name + " has no chart tower to verify against");
  const auto& d = sc.descriptor;
  VerifyReport rep;
  rep.kind = certificate_kind(cert);
  rep.structure = tower_mismatches(d, *sc.tower);
  if (!rep.structure.empty()) return rep;

  RationalFunction h = build_candidate(sc, cert, &rep.mobius, retries);
  rep.function = h.to_string(sc.tower->names());
  const IntVector predicted = predicted_orders(cert);
  if (predicted.size() != d.m) throw InputError("certificate does not match the descriptor size");
  const auto profile = expected_profile(cert, d.m);
  if (const auto* t = std::get_if<Thm4Certificate>(&cert); t && !t->invariants_ok)
    for (const auto& v : t->violations) rep.structure.push_back("certificate: " + v);

  Rng root(sc.seed);
  for (std::size_t i = 1; i <= d.m; ++i) {
    DivisorRow row = inspect_divisor(h, sc, i, root.stream(detail::label_hash("degree:" + std::to_string(i))), retries);
    row.predicted = predicted[i - 1];
    row.expected = profile[i - 1];
    if (row.symbolic && *row.symbolic != row.predicted)
      row.problems.push_back("order " + row.symbolic->get_str() + " but predicted " + row.predicted.get_str());
    using K = Expectation::Kind;
    if (row.expected.kind == K::constant && row.dicritical) row.problems.push_back("dicritical, expected constant");
    if (row.expected.kind == K::dicritical) {
      if (!row.dicritical) row.problems.push_back("constant, expected dicritical");
      else if (row.expected.degree && BigInt(*row.degree) != *row.expected.degree)
        row.problems.push_back("degree " + std::to_string(*row.degree) + ", expected " +
                               row.expected.degree->get_str());
      else if (!row.expected.degree && *row.degree < 1)
        row.problems.push_back("degree 0, expected at least 1");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline Json to_json(const VerifyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json charts = Json::array();
    for (const auto& c : row.chart_orders) charts.push_back(Json{{"chart", c.chart}, {"order", to_json_int(c.order)}});
    Json j{{"i", row.index},
           {"predicted", to_json_int(row.predicted)},
           {"symbolic", row.symbolic ? to_json_int(*row.symbolic) : Json(nullptr)},
           {"charts", charts},
           {"status", row.dicritical ? "dicritical" : "constant"},
           {"value", row.dicritical ? Json(nullptr) : Json(row.value)},
           {"degree", row.degree ? Json(*row.degree) : Json(nullptr)},
           {"expected", row.expected.to_string()},
           {"ok", row.ok()},
           {"problems", row.problems}};
    if (!row.restriction.empty()) j["restriction"] = row.restriction;
    rows.push_back(j);
  }
  Json mob = Json::array();
  for (const auto& [j, c] : r.mobius)
    mob.push_back(Json{{"j", j}, {"a", to_json_rational(c.a)}, {"b", to_json_rational(c.b)}});
  Json out{{"kind", r.kind}, {"verdict", r.pass() ? "PASS" : "FAIL"}, {"divisors", rows},
           {"structure", r.structure}};
  if (!r.mobius.empty()) out["mobius"] = mob;
  out["function"] = r.function;
  return out;
}

// --------------------------------------------------------------------------
// Plain-text tables.

namespace detail {

inline std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text += "  ";
      text += cells[c] + std::string(width[c] - cells[c].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

inline std::string matrix_lines(const IntMatrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) { auto row = m.row(r); out += indent + join(IntVector(row.begin(), row.end()), " ") + "\n"; }
  return out;
}

}  // namespace detail

inline std::string format_matrix(const std::string& name, const MatrixReport& r) {
  std::string out = "scenario " + name + "\nA =\n" + detail::matrix_lines(r.a, "  ");
  out += "leading minors: " + join(r.minors) + (r.ok ? "  (unimodular)\n" : "  (NOT unimodular)\n");
  if (r.b) {
    out += "B (s = " + std::to_string(r.b_target) + ", l = " + join(r.b_ell) + ") =\n";
    out += detail::matrix_lines(*r.b, "  ");
  }
  return out;
}

inline std::string format_certificate(const std::string& name, const Certificate& cert, std::size_t m) {
  std::ostringstream out;
  out << "scenario " << name << "  kind " << certificate_kind(cert) << "\n";
  if (const auto* c = std::get_if<SupportCertificate>(&cert)) {
    out << "r = (" << join(c->r) << ")\n";
  } else if (const auto* c = std::get_if<Prop3Certificate>(&cert)) {
    out << "r = (" << join(c->r) << ")  r' = (" << join(c->r_prime) << ")  l = (" << join(c->ell) << ")\n";
  } else if (const auto* c = std::get_if<Thm4Certificate>(&cert)) {
    out << "r = (" << join(c->base.r) << ")  r' = (" << join(c->base.r_prime) << ")  l_b = (" << join(c->base.ell)
        << ")\n";
    if (!c->windows.empty()) {
      for (const auto& [i, w] : c->windows)
        out << "window E_" << i << ": " << w.lower.to_string(true) << " < l < " << w.upper.to_string(true) << "\n";
      out << "K = " << c->K << "  l = " << c->ell << "\n";
    }
    if (c->forced) out << "forced choice" << (c->invariants_ok ? "" : " violating the window") << "\n";
    for (const auto& v : c->violations) out << "  ! " << v << "\n";
  } else {
    for (const auto& f : std::get<MainCertificate>(cert).factors)
      out << "factor h_" << f.j << ": degree " << f.degree << ", K = " << f.cert.K << ", l = " << f.cert.ell
          << ", N = (" << join(f.cert.N) << ")\n";
  }
  const IntVector pred = predicted_orders(cert);
  const auto profile = expected_profile(cert, m);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i <= m; ++i)
    rows.push_back({"E_" + std::to_string(i), pred[i - 1].get_str(), profile[i - 1].to_string()});
  out << detail::table({"divisor", "N", "expected"}, rows);
  return out.str();
}

inline std::string format_verify(const std::string& name, const VerifyReport& r) {
  std::ostringstream out;
  out << "scenario " << name << "  verify " << r.kind << "\n";
  for (const auto& [j, c] : r.mobius)
    out << "Moebius constants for h_" << j << ": a = " << to_string(c.a) << ", b = " << to_string(c.b) << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows) {
    std::string status = row.dicritical ? "dicritical" : "constant " + row.value;
    rows.push_back({"E_" + std::to_string(row.index), row.predicted.get_str(),
                    row.symbolic ? row.symbolic->get_str() : "?", row.charts_agree ? "yes" : "NO", status,
                    row.degree ? std::to_string(*row.degree) : "-", row.expected.to_string(),
                    row.ok() ? "ok" : "FAIL"});
  }
  out << detail::table({"divisor", "predicted", "symbolic", "charts", "status", "degree", "expected", "check"}, rows);
  for (const auto& row : r.rows) {
    if (!row.restriction.empty() && row.dicritical)
      out << "restriction to E_" << row.index << ": " << row.restriction << "\n";
    for (const auto& p : row.problems) out << "  ! E_" << row.index << ": " << p << "\n";
  }
  for (const auto& s : r.structure) out << "  ! " << s << "\n";
  out << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// --------------------------------------------------------------------------
// Artifacts.

/// Append-only writer: an existing file with identical content is kept, a
/// differing one is never overwritten; the new content goes to the first free
/// numbered sibling (name.1.json, name.2.json, ...).
inline std::filesystem::path write_artifact(const std::filesystem::path& dir, const std::string& stem,
                                            const std::string& ext, const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (unsigned n = 0;; ++n) {
    fs::path p = dir / (n == 0 ? stem + ext : stem + "." + std::to_string(n) + ext);
    if (fs::exists(p)) {
      std::ifstream in(p, std::ios::binary);
      std::string existing((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (existing == content) return p;
      continue;
    }
    std::ofstream out(p, std::ios::binary);
    out << content;
    if (!out) throw InputError("cannot write " + p.string());
    return p;
  }
}

inline Json envelope(const Scenario& sc, const std::string& command, Json body) {
  return Json{{"schema_version", kSchemaVersion}, {"scenario", sc.name}, {"command", command},
              {"seed", sc.seed}, {"result", std::move(body)}};
}

inline Json certificate_document(const Scenario& sc, const Certificate& cert) {
  Json doc = envelope(sc, "solve", certificate_body(cert));
  doc["kind"] = certificate_kind(cert);
  return doc;
}

inline Certificate certificate_from_document(const Json& j) {
  detail::check_schema(j, "certificate");
  if (!j.contains("kind") || !j.contains("result")) throw InputError("certificate document needs kind and result");
  return certificate_from_body(j.at("kind").get<std::string>(), j.at("result"));
}

}  // namespace dicritical
