// Command-line front end: matrix | solve | verify | report | list | fixtures.
//
// Exit status: 0 pass, 1 invariant violation or failed verification,
// 2 input error. With several scenarios the worst status wins.

#include <dicritical/dicritical.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace dicritical;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;

struct Options {
  std::vector<std::string> scenarios;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned retries = 8;
  std::string certificate;
};

struct Outcome {
  std::string text;
  std::string errors;
  int code = kExitOk;
};

Scenario load(const std::string& ref, const Options& opt) {
  std::optional<Scenario> sc;
  if (fs::exists(ref)) sc = load_scenario_file(ref);
  else sc = builtin_fixture(ref);
  if (!sc) throw InputError("no scenario file or built-in fixture named " + ref);
  if (opt.seed) sc->seed = *opt.seed;
  return std::move(*sc);
}

void emit(const Options& opt, const Scenario& sc, const std::string& command, const Json& doc,
          const std::string& text, Outcome& out) {
  if (opt.out.empty()) return;
  // Two scenario files may carry the same name; keep the numbering race-free.
  static std::mutex writer;
  std::lock_guard lock(writer);
  const std::string stem = sc.name + "." + command;
  auto json_path = write_artifact(opt.out, stem, ".json", doc.dump(2) + "\n");
  auto text_path = write_artifact(opt.out, stem, ".txt", text);
  out.errors += "wrote " + json_path.string() + " and " + text_path.string() + "\n";
}

Certificate certificate_for(const Scenario& sc, const Options& opt) {
  if (opt.certificate.empty()) return solve(sc, opt.retries);
  std::ifstream in(opt.certificate);
  if (!in) throw InputError("cannot open certificate " + opt.certificate);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid certificate JSON: " + std::string(e.what()));
  }
  if (doc.contains("scenario") && doc.at("scenario") != sc.name)
    throw InputError("certificate belongs to scenario " + doc.at("scenario").get<std::string>());
  return certificate_from_document(doc);
}

Outcome run_one(const std::string& command, const std::string& ref, const Options& opt) {
  Outcome out;
  try {
    const Scenario sc = load(ref, opt);
    if (command == "matrix") {
      MatrixReport rep = run_matrix(sc);
      out.text = format_matrix(sc.name, rep);
      emit(opt, sc, command, envelope(sc, command, to_json(rep)), out.text, out);
      if (!rep.ok) out.code = kExitInvariant;
    } else if (command == "solve") {
      Certificate cert = solve(sc, opt.retries);
      out.text = format_certificate(sc.name, cert, sc.descriptor.m);
      emit(opt, sc, command, certificate_document(sc, cert), out.text, out);
      if (const auto* t = std::get_if<Thm4Certificate>(&cert); t && !t->invariants_ok) out.code = kExitInvariant;
    } else if (command == "verify") {
      Certificate cert = certificate_for(sc, opt);
      VerifyReport rep = run_verify(sc, cert, opt.retries);
      out.text = format_verify(sc.name, rep);
      emit(opt, sc, command, envelope(sc, command, to_json(rep)), out.text, out);
      if (!rep.pass()) out.code = kExitInvariant;
    } else {
      MatrixReport mat = run_matrix(sc);
      Certificate cert = certificate_for(sc, opt);
      std::optional<VerifyReport> ver;
      if (sc.tower) ver = run_verify(sc, cert, opt.retries);
      out.text = format_matrix(sc.name, mat) + "\n" + format_certificate(sc.name, cert, sc.descriptor.m);
      Json body{{"matrix", to_json(mat)}, {"kind", certificate_kind(cert)}, {"certificate", certificate_body(cert)}};
      if (ver) {
        out.text += "\n" + format_verify(sc.name, *ver);
        body["verify"] = to_json(*ver);
      } else {
        out.text += "\n(no chart tower: symbolic verification skipped)\n";
      }
      emit(opt, sc, command, envelope(sc, command, body), out.text, out);
      if (!mat.ok || (ver && !ver->pass())) out.code = kExitInvariant;
    }
  } catch (const InputError& e) {
    out.errors += ref + ": input error: " + e.what() + "\n";
    out.code = kExitInput;
  } catch (const nlohmann::json::exception& e) {
    out.errors += ref + ": input error: " + e.what() + "\n";
    out.code = kExitInput;
  } catch (const InvariantError& e) {
    out.errors += ref + ": invariant violation";
    if (e.index()) out.errors += " at E_" + std::to_string(e.index());
    out.errors += std::string(": ") + e.what() + "\n";
    out.code = kExitInvariant;
  }
  return out;
}

int run_batch(const std::string& command, const Options& opt) {
  std::vector<std::future<Outcome>> jobs;
  for (const auto& ref : opt.scenarios)
    jobs.push_back(std::async(std::launch::async, run_one, command, ref, std::cref(opt)));
  int code = kExitOk;
  bool first = true;
  for (auto& job : jobs) {
    Outcome o = job.get();
    if (!first && !o.text.empty()) std::cout << "\n";
    first = false;
    std::cout << o.text;
    std::cerr << o.errors;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational functions with prescribed dicritical divisors"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_certificate) {
    sub->add_option("--scenario", opt.scenarios, "Scenario file or built-in fixture name (repeatable)")->required();
    sub->add_option("--out", opt.out, "Directory for JSON and text artifacts");
    sub->add_option("--seed", opt.seed, "Override the scenario seed");
    sub->add_option("--retries", opt.retries, "Retry budget for randomized checks and bound doubling")
        ->check(CLI::Range(0U, 1000U));
    if (with_certificate)
      sub->add_option("--certificate", opt.certificate, "Certificate produced by solve (default: solve afresh)");
  };
  std::vector<std::pair<std::string, CLI::App*>> batch = {
      {"matrix", app.add_subcommand("matrix", "Valuation matrix, special rows and leading minors")},
      {"solve", app.add_subcommand("solve", "Run the solver request and emit a certificate")},
      {"verify", app.add_subcommand("verify", "Check a certificate on the explicit charts")},
      {"report", app.add_subcommand("report", "Matrix, certificate and verification in one report")}};
  for (auto& [name, sub] : batch) add_common(sub, name == "verify" || name == "report");

  auto* list = app.add_subcommand("list", "List the built-in fixtures");
  auto* dump = app.add_subcommand("fixtures", "Write the built-in fixtures as scenario files");
  std::string dump_dir;
  dump->add_option("--out", dump_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (list->parsed()) {
    for (const auto& [name, text] : builtin_fixtures()) {
      Scenario sc = scenario_from_json(Json::parse(text));
      std::cout << name << "  (" << (sc.request ? request_kind(*sc.request) : "no request") << ", m = "
                << sc.descriptor.m << ")\n";
    }
    return kExitOk;
  }
  if (dump->parsed()) {
    try {
      for (const auto& [name, text] : builtin_fixtures()) {
        Scenario sc = scenario_from_json(Json::parse(text));
        auto p = write_artifact(dump_dir, std::string(name), ".json", to_json(sc).dump(2) + "\n");
        std::cout << p.string() << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "fixtures: " << e.what() << "\n";
      return kExitInput;
    }
    return kExitOk;
  }
  for (auto& [name, sub] : batch)
    if (sub->parsed()) return run_batch(name, opt);
  return kExitInput;
}
