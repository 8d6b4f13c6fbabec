#pragma once

// Built-in scenarios: the worked examples, each with an explicit tower and
// concrete equations so that verification runs end to end.

#include <dicritical/scenario.hpp>

#include <string_view>
#include <utility>
#include <vector>

namespace dicritical {

namespace fixtures {

// Two point blow-ups, the second at a point of E_1, then the line
// y = z = 0 of E_1 seen in the chart x.
inline constexpr std::string_view ex1_pi = R"({
  "schema_version": 1, "name": "ex1-pi", "seed": 7,
  "descriptor": {"n": 3, "m": 3, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 0, "D": [1], "T_row": [1, 1]},
    {"dim": 1, "D": [1], "T_row": [1, 1, 1]}]},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "x"}},
    {"blowup": {"center": ["y", "z"], "chart": "y"}}]},
  "equations": {"curvettes": {
    "1": ["x + 2*y + 3*z", "3*x - y + 2*z", "x - 2*y + z"],
    "2": ["2*x + 3*y", "x - 4*y"],
    "3": ["y + 2*z^2", "3*y - z^2"]}},
  "request": {"kind": "support", "J": [2]}
})";

inline constexpr std::string_view ex1_pibar = R"({
  "schema_version": 1, "name": "ex1-pibar", "seed": 7,
  "descriptor": {"n": 3, "m": 3, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 1, "D": [1], "T_row": [1, 1]},
    {"dim": 1, "D": [2], "T_row": [2, 1, 1]}]},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"blowup": {"center": ["y", "z"], "chart": "y"}},
    {"blowup": {"center": ["x", "y"], "chart": "x"}}]},
  "equations": {"curvettes": {
    "1": ["x + 2*y + 3*z", "3*x - y + 2*z"],
    "2": ["y + 2*z^2", "3*y - z^2"],
    "3": ["y^2 + 2*x*z^2 + 3*x*y", "2*y^2 - x*z^2 + 5*x*y"]}},
  "request": {"kind": "support", "J": [3]}
})";

inline constexpr std::string_view ex_4_2 = R"({
  "schema_version": 1, "name": "ex-4.2", "seed": 7,
  "descriptor": {"n": 3, "m": 3, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 0, "D": [1], "T_row": [1, 1]},
    {"dim": 0, "D": [1, 2], "T_row": [1, 1, 1]}],
    "special": [{"owner": 1, "mu_row": [2, 2]}, {"owner": 2, "mu_row": [3, 2]}],
    "thm4": {"s": 3}},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "y"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "x"}}]},
  "equations": {
    "curvettes": {
      "1": ["x + y + z", "2*x - y + 3*z", "x - 2*y + z"],
      "2": ["x + y"],
      "3": ["x + z^2", "x - z^2", "2*x + z^2"]},
    "special": {"1": "x^2 + y*z^2", "2": "x^2*z + y^3"}},
  "request": {"kind": "prop3", "s": 3, "d": 1, "r_prime": [1, 1], "ell": [1, 1]}
})";

inline constexpr std::string_view ex_4_2_main = R"({
  "schema_version": 1, "name": "ex-4.2-main", "seed": 7,
  "descriptor": {"n": 3, "m": 3, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 0, "D": [1], "T_row": [1, 1]},
    {"dim": 0, "D": [1, 2], "T_row": [1, 1, 1]}],
    "special": [{"owner": 1, "mu_row": [2, 2]}, {"owner": 2, "mu_row": [3, 2]}]},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "y"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "x"}}]},
  "equations": {
    "curvettes": {
      "1": ["x + y + z", "2*x - y + 3*z", "x - 2*y + z"],
      "2": ["x + y"],
      "3": ["x + z^2", "x - z^2", "2*x + z^2"]},
    "special": {"1": "x^2 + y*z^2", "2": "x^2*z + y^3"}},
  "request": {"kind": "main", "J": [1, 3], "degrees": [1, 1], "overrides": {"3": {"ell": [1, 1]}}}
})";

// The second center is the conic x + y^2 = 0 inside E_1; the shear turns it
// into the coordinate line x = z = 0.
inline constexpr std::string_view ex_4_4 = R"({
  "schema_version": 1, "name": "ex-4.4", "seed": 7,
  "descriptor": {"n": 3, "m": 2, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 1, "D": [1], "T_row": [2, 1]}]},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"shear": {"target": "x", "subtrahend": "-y^2"}},
    {"blowup": {"center": ["x", "z"], "chart": "z"}}]},
  "equations": {"curvettes": {
    "1": ["2*x - y + z", "x + y - 2*z", "x + 2*y + 3*z"],
    "2": ["x*z - y^2"]}},
  "request": {"kind": "thm4", "s": 1, "d": 1}
})";

// ex-4.2 followed by the blow-up of the line x = 0, y = 1 of E_3.
inline constexpr std::string_view ex_4_5 = R"({
  "schema_version": 1, "name": "ex-4.5", "seed": 7,
  "descriptor": {"n": 3, "m": 4, "centers": [
    {"dim": 0, "D": [], "T_row": [1]},
    {"dim": 0, "D": [1], "T_row": [1, 1]},
    {"dim": 0, "D": [1, 2], "T_row": [1, 1, 1]},
    {"dim": 1, "D": [3], "T_row": [2, 1, 1, 1]}],
    "special": [{"owner": 1, "mu_row": [2, 2]}, {"owner": 2, "mu_row": [3, 2]}],
    "thm4": {"s": 3}},
  "tower": {"variables": ["x", "y", "z"], "steps": [
    {"blowup": {"center": ["x", "y", "z"], "chart": "z"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "y"}},
    {"blowup": {"center": ["x", "y", "z"], "chart": "x"}},
    {"shear": {"target": "y", "subtrahend": "1"}},
    {"blowup": {"center": ["x", "y"], "chart": "y"}}]},
  "equations": {
    "curvettes": {
      "1": ["x + y + z", "2*x - y + 3*z", "x - 2*y + z"],
      "2": ["x + y"],
      "3": ["x + z^2", "x - z^2", "2*x + z^2"],
      "4": ["x*z + y^2"]},
    "special": {"1": "x^2 + y*z^2", "2": "x^2*z + y^3"}},
  "request": {"kind": "thm4", "s": 3, "d": 1, "ell": [1, 1]}
})";

}  // namespace fixtures

/// Name and JSON text of every built-in scenario, in a fixed order.
inline const std::vector<std::pair<std::string_view, std::string_view>>& builtin_fixtures() {
  static const std::vector<std::pair<std::string_view, std::string_view>> all = {
      {"ex1-pi", fixtures::ex1_pi},   {"ex1-pibar", fixtures::ex1_pibar}, {"ex-4.2", fixtures::ex_4_2},
      {"ex-4.2-main", fixtures::ex_4_2_main}, {"ex-4.4", fixtures::ex_4_4}, {"ex-4.5", fixtures::ex_4_5}};
  return all;
}

inline std::optional<Scenario> builtin_fixture(std::string_view name) {
  for (const auto& [n, text] : builtin_fixtures())
    if (n == name) return scenario_from_json(Json::parse(text));
  return std::nullopt;
}

}  // namespace dicritical
