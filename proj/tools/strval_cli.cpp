#include "strval.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
  std::string family;
  int rank = 0;
  std::vector<int> word, lambda, mu, order;
  std::string data, format, valuation, poly, generators;
  int level_cap = 0, scaling = 0, random = 0, samples = 0, levels = 0, step_cap = 0;
  std::uint64_t seed = 0;
  std::int64_t dimension_cap = 0;
};

std::string read_json_argument(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw std::runtime_error("cannot read " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(sv_status s) {
  switch (s) {
    case SV_OK: return 0;
    case SV_ERR_ASSERTION:
    case SV_ERR_CONSISTENCY: return 1;
    case SV_ERR_USAGE: return 2;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact string parametrizations, valuations and Newton-Okounkov bodies", "strval"};
  app.set_version_flag("--version", std::string(sv_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::map<std::string, CLI::Option*> given;
  given["family"] = app.add_option("--family", o.family, "Cartan family: A or C");
  given["rank"] = app.add_option("--rank", o.rank, "Rank (A1..A4, C2)");
  given["word"] = app.add_option("--word", o.word, "Reduced word for w0, e.g. 1,2,1")->delimiter(',');
  given["lambda"] = app.add_option("--lambda", o.lambda, "Dominant weight in fundamental weights")->delimiter(',');
  given["mu"] = app.add_option("--mu", o.mu, "Second dominant weight (expand)")->delimiter(',');
  given["data"] = app.add_option("--data", o.data, "Isotypic data: builtin:a1-toy, builtin:flag or a JSON file");
  given["level_cap"] = app.add_option("--level-cap", o.level_cap, "Highest sampled level");
  given["scaling"] = app.add_option("--scaling", o.scaling, "Check Delta(k lambda) = k Delta(lambda) up to this k");
  given["random"] = app.add_option("--random", o.random, "Seeded random dual vectors per word");
  given["seed"] = app.add_option("--seed", o.seed, "Random seed");
  given["format"] = app.add_option("--format", o.format, "json, csv or table")
                        ->check(CLI::IsMember({"json", "csv", "table"}));
  given["dimension_cap"] = app.add_option("--dimension-cap", o.dimension_cap, "Largest module dimension built");
  given["samples"] = app.add_option("--samples", o.samples, "Random polynomials for the axiom suite");
  given["levels"] = app.add_option("--levels", o.levels, "Hilbert values H(0..levels-1)");
  given["step_cap"] = app.add_option("--step-cap", o.step_cap, "Subduction step cap");
  given["valuation"] = app.add_option("--valuation", o.valuation, "highest or lowest term valuation")
                           ->check(CLI::IsMember({"highest", "lowest"}));
  given["order"] = app.add_option("--order", o.order, "Variable priority, e.g. 1,0")->delimiter(',');
  given["poly"] = app.add_option("--poly", o.poly, "Polynomial JSON (or @file)");
  given["generators"] = app.add_option("--generators", o.generators, "JSON array of polynomials (or @file)");

  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help) {
    parent->add_subcommand(name, help)->callback([&command, full] { command = full; });
  };
  leaf(&app, "roots", "roots", "Cartan data, roots and reduced words of w0");
  leaf(&app, "module", "module", "Build V_lambda with Chevalley generator matrices");
  auto strings = app.add_subcommand("strings", "String parametrizations")->require_subcommand(1);
  leaf(strings, "value-set", "strings value-set", "Leaf-reduced string value set S_lambda");
  leaf(strings, "oracle", "strings oracle", "Compare with the type A tableaux crystal");
  leaf(strings, "cone", "strings cone", "Sample of the string cone up to --level-cap");
  auto poly = app.add_subcommand("poly", "Term valuations on polynomials")->require_subcommand(1);
  leaf(poly, "valuation", "poly valuation", "Value of --poly");
  leaf(poly, "axioms", "poly axioms", "Seeded valuation axiom suite with a negative control");
  leaf(&app, "verify-main-theorem", "verify-main-theorem", "String parameters versus chart valuations");
  leaf(&app, "expand", "expand", "Expand products of leaf-reduced bases of V_lambda and V_mu");
  auto nok = app.add_subcommand("nok", "Newton-Okounkov bodies and string polytopes")->require_subcommand(1);
  leaf(nok, "string-polytope", "nok string-polytope", "String polytope with lattice count and volume");
  leaf(nok, "fibered", "nok fibered", "Fibered polytope over isotypic data");
  leaf(nok, "degree", "nok degree", "Hilbert fit versus volume");
  leaf(nok, "moment", "nok moment", "Moment body, directly and through the weight valuation");
  auto sagbi = app.add_subcommand("sagbi", "Subduction and toric degeneration")->require_subcommand(1);
  leaf(sagbi, "subduct", "sagbi subduct", "Subduct --poly by --generators");
  leaf(sagbi, "check", "sagbi check", "SAGBI check of the section ring sample");
  leaf(sagbi, "degenerate", "sagbi degenerate", "Structure constants of the degeneration");
  leaf(&app, "suite", "suite", "Full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  nlohmann::json config = nlohmann::json::object();
  auto set = [&](const char* key, const auto& value) {
    if (given[key]->count() > 0) config[key] = value;
  };
  set("family", o.family);
  set("rank", o.rank);
  set("word", o.word);
  set("lambda", o.lambda);
  set("mu", o.mu);
  set("data", o.data);
  set("level_cap", o.level_cap);
  set("scaling", o.scaling);
  set("random", o.random);
  set("seed", o.seed);
  set("format", o.format);
  set("dimension_cap", o.dimension_cap);
  set("samples", o.samples);
  set("levels", o.levels);
  set("step_cap", o.step_cap);
  set("valuation", o.valuation);
  set("order", o.order);
  try {
    if (given["poly"]->count() > 0) config["poly"] = nlohmann::json::parse(read_json_argument(o.poly));
    if (given["generators"]->count() > 0)
      config["generators"] = nlohmann::json::parse(read_json_argument(o.generators));
  } catch (const std::exception& e) {
    std::cerr << "strval: " << e.what() << "\n";
    return 2;
  }

  char* report = nullptr;
  sv_status status = sv_run(command.c_str(), config.dump().c_str(), &report);
  if (report) {
    std::cout << report;
    if (const char* dir = std::getenv("STRVAL_OUT_DIR")) {
      std::string name = command;
      for (auto& c : name)
        if (c == ' ') c = '-';
      const std::string ext = o.format.empty() ? "json" : o.format == "table" ? "txt" : o.format;
      std::filesystem::path path = std::filesystem::path(dir) / (name + "." + ext);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      std::ofstream out(path);
      if (!out) {
        std::cerr << "strval: cannot write " << path << "\n";
        sv_free_string(report);
        return 3;
      }
      out << report;
    }
    sv_free_string(report);
  }
  if (status != SV_OK) std::cerr << "strval: " << sv_status_name(status) << ": " << sv_last_error() << "\n";
  return exit_code(status);
}
