#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "squarerun/cycles.hpp"
#include "squarerun/errors.hpp"
#include "squarerun/families.hpp"
#include "squarerun/orbit.hpp"
#include "squarerun/search_io.hpp"
#include "squarerun/serialize.hpp"
#include "squarerun/surface.hpp"

namespace {

using namespace squarerun;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

QuadMap parse_map_spec(const std::string& c_str, const std::string& map_str) {
  if (!c_str.empty() && !map_str.empty())
    throw ParseError("give either --c or --map, not both");
  if (!c_str.empty()) return QuadMap::normal(Rational::parse(c_str));
  if (map_str.empty()) throw ParseError("one of --c or --map is required");
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = map_str.find(',', start);
    parts.push_back(map_str.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw ParseError("--map expects three coefficients A,B,C");
  return QuadMap(Rational::parse(parts[0]), Rational::parse(parts[1]),
                 Rational::parse(parts[2]));
}

struct OrbitArgs {
  std::string c_str, map_str, x0_str;
  unsigned steps = 16;
  bool steps_given = false;
  bool detect = false;
  std::size_t max_bits = 4096;
};

void run_orbit(const OrbitArgs& a) {
  QuadMap f = parse_map_spec(a.c_str, a.map_str);
  Rational x0 = Rational::parse(a.x0_str);
  IterationLimits lim{a.max_bits};
  Orbit orbit;
  if (a.detect) {
    unsigned budget = a.steps_given ? a.steps : 256;
    orbit = detect_cycle(f, x0, budget, lim);
  } else {
    Rational x = x0;
    orbit.iterates.push_back(x);
    for (unsigned i = 0; i < a.steps; ++i) {
      x = f(x);
      if (x.bit_size() > lim.max_bits) {
        orbit.truncated = true;
        break;
      }
      orbit.iterates.push_back(x);
    }
  }
  print(to_json(orbit));
}

struct FamilyArgs {
  std::string name;
  std::string beta_str, a_str, alpha_str;
  long extend = 0;
};

void run_family(const FamilyArgs& a) {
  auto need = [](const std::string& value, const char* flag) -> Rational {
    if (value.empty()) throw ParseError(std::string(flag) + " is required for this family");
    return Rational::parse(value);
  };
  if (a.name == "xc") {
    Rational beta = need(a.beta_str, "--beta");
    print(to_json(a.extend ? extend_family_xc(beta, a.extend) : family_xc(beta)));
  } else if (a.name == "xaxb") {
    Rational p = need(a.a_str, "--a");
    print(to_json(a.extend ? extend_family_xaxb(p, a.extend) : family_xaxb(p)));
  } else if (a.name == "xaxma") {
    Rational alpha = need(a.alpha_str, "--alpha");
    print(to_json(a.extend ? extend_family_xax_minus_a(alpha, a.extend)
                           : family_xax_minus_a(alpha)));
  } else {
    throw ParseError("unknown family \"" + a.name + "\" (xc, xaxb, xaxma)");
  }
}

struct SearchArgs {
  std::vector<std::string> y_strs;
  long box = 8;
  bool no_coprime = false;
  bool include_trivial = false;
  unsigned shards = 1;
  std::string results;
  std::string manifest;
};

void run_search(const SearchArgs& a, bool fixed_y) {
  SearchConfig cfg;
  cfg.box = a.box;
  cfg.coprime_only = !a.no_coprime;
  cfg.include_trivial = a.include_trivial;
  cfg.shards = a.shards;
  for (const std::string& y : a.y_strs) cfg.y_grid.push_back(Rational::parse(y));
  if (fixed_y && cfg.y_grid.empty())
    throw ParseError("fixed-y search needs at least one --y value");

  RunManifest manifest;
  manifest.command = fixed_y ? "search4 fixed-y" : "search4 form";
  manifest.config["mode"] = fixed_y ? "fixed-y" : "form";
  Json cfg_json = to_json(cfg);
  for (auto& [key, value] : cfg_json.items()) manifest.config[key] = value;
  manifest.shards = cfg.shards;
  manifest.started = utc_timestamp();

  std::vector<FourSquareHit> hits;
  unsigned long long rejected = 0;
  if (fixed_y) {
    hits = search_grid(cfg);
    manifest.candidates = hits.size();
  } else {
    FormSearchResult result = search_form_fourth_power(cfg);
    hits = std::move(result.hits);
    manifest.candidates = result.candidates;
    rejected = result.rejected;
  }

  std::filesystem::path results_file =
      a.results.empty() ? default_results_dir() / (fixed_y ? "fixed_y.jsonl" : "form.jsonl")
                        : std::filesystem::path(a.results);
  std::filesystem::path manifest_file =
      a.manifest.empty()
          ? results_file.parent_path() / (results_file.stem().string() + ".manifest.json")
          : std::filesystem::path(a.manifest);

  std::size_t new_lines = append_hits(results_file, hits);
  manifest.hits_new = new_lines;
  manifest.finished = utc_timestamp();
  write_manifest(manifest_file, manifest);

  Json summary;
  summary["command"] = manifest.command;
  summary["config"] = manifest.config;
  summary["results"] = results_file.string();
  summary["manifest"] = manifest_file.string();
  summary["hits"] = hits.size();
  summary["new_lines"] = new_lines;
  if (!fixed_y) {
    summary["candidates"] = manifest.candidates;
    summary["rejected"] = rejected;
  }
  print(summary);
}

int run_catalog_check() {
  CatalogReport report = catalog_check();
  print(to_json(report));
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational orbits of quadratic maps, square runs, and square cycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  int exit_code = 0;

  OrbitArgs orbit_args;
  CLI::App* orbit = app.add_subcommand("orbit", "iterate A x^2 + B x + C exactly");
  orbit->add_option("--c", orbit_args.c_str, "normal-form constant, map x^2 + c");
  orbit->add_option("--map", orbit_args.map_str, "coefficients A,B,C");
  orbit->add_option("--x0", orbit_args.x0_str, "start value")->required();
  CLI::Option* steps_opt = orbit->add_option("--steps", orbit_args.steps,
                                             "iteration count (cycle budget with --detect-cycle)");
  orbit->add_flag("--detect-cycle", orbit_args.detect, "stop at the first repeated value");
  orbit->add_option("--max-bits", orbit_args.max_bits, "height guard in bits");
  orbit->callback([&] {
    orbit_args.steps_given = steps_opt->count() > 0;
    run_orbit(orbit_args);
  });

  FamilyArgs family_args;
  CLI::App* family = app.add_subcommand("family", "three-consecutive-square witnesses");
  family->add_option("name", family_args.name, "xc, xaxb, or xaxma")->required();
  family->add_option("--beta", family_args.beta_str, "parameter of x^2 + c");
  family->add_option("--a", family_args.a_str, "parameter of x^2 + a x + b");
  family->add_option("--alpha", family_args.alpha_str, "parameter of x^2 + a x - a");
  family->add_option("--extend", family_args.extend,
                     "use the n-th multiple on the parametrizing curve (n >= 2)");
  family->callback([&] { run_family(family_args); });

  SearchArgs search_args;
  CLI::App* search4 = app.add_subcommand("search4", "four-consecutive-square searches");
  search4->require_subcommand(1);
  CLI::App* fixed_y = search4->add_subcommand("fixed-y", "chord scan at fixed y values");
  CLI::App* form = search4->add_subcommand("form", "integer scan for fourth-power form values");
  for (CLI::App* sub : {fixed_y, form}) {
    if (sub == fixed_y)
      sub->add_option("--y", search_args.y_strs, "y row to scan (repeatable)");
    sub->add_option("--box", search_args.box, "grid radius");
    sub->add_flag("--no-coprime", search_args.no_coprime, "scan non-coprime cells too");
    sub->add_flag("--include-trivial", search_args.include_trivial,
                  "keep trivial |x|=|y|=|z|=|w| hits");
    sub->add_option("--shards", search_args.shards, "parallel shard count");
    sub->add_option("--results", search_args.results, "results file (JSON lines)");
    sub->add_option("--manifest", search_args.manifest, "manifest file");
  }
  fixed_y->callback([&] { run_search(search_args, true); });
  form->callback([&] { run_search(search_args, false); });

  CLI::App* periodic = app.add_subcommand("periodic", "periodic points and square cycles");
  periodic->require_subcommand(1);

  std::string rho_str, sigma_str, tau_str;
  CLI::App* poonen = periodic->add_subcommand("poonen", "rational cycles of x^2 + c");
  CLI::Option* rho_opt = poonen->add_option("--rho", rho_str, "period-1 parameter");
  CLI::Option* sigma_opt = poonen->add_option("--sigma", sigma_str, "period-2 parameter");
  CLI::Option* tau_opt = poonen->add_option("--tau", tau_str, "period-3 parameter");
  rho_opt->excludes(sigma_opt)->excludes(tau_opt);
  sigma_opt->excludes(tau_opt);
  poonen->callback([&] {
    if (!rho_str.empty())
      print(to_json(poonen_fixed(Rational::parse(rho_str))));
    else if (!sigma_str.empty())
      print(to_json(poonen_two_cycle(Rational::parse(sigma_str))));
    else if (!tau_str.empty())
      print(to_json(poonen_three_cycle(Rational::parse(tau_str))));
    else
      throw ParseError("one of --rho, --sigma, --tau is required");
  });

  std::string m2_str, k2_str;
  CLI::App* two = periodic->add_subcommand("two-cycle", "monic map swapping m^2 and k^2");
  two->add_option("--m", m2_str)->required();
  two->add_option("--k", k2_str)->required();
  two->callback([&] {
    print(to_json(square_two_cycle(Rational::parse(m2_str), Rational::parse(k2_str))));
  });

  std::string m3_str, n3_str, r3_str;
  CLI::App* three = periodic->add_subcommand("three-cycle", "monic map cycling three squares");
  three->add_option("--m", m3_str)->required();
  three->add_option("--n", n3_str)->required();
  three->add_option("--r", r3_str)->required();
  three->callback([&] {
    print(to_json(square_three_cycle_map(Rational::parse(m3_str), Rational::parse(n3_str),
                                         Rational::parse(r3_str))));
  });

  std::string rt_map_str;
  CLI::App* rt = periodic->add_subcommand("recover-tau", "period-3 parameters of a monic map");
  rt->add_option("--map", rt_map_str, "coefficients A,B,C")->required();
  rt->callback([&] {
    QuadMap f = parse_map_spec("", rt_map_str);
    Json j;
    j["map"] = to_json(f);
    j["c"] = to_json(conjugate_to_normal(f).c);
    Json taus = Json::array();
    for (const Rational& tau : recover_tau(f)) taus.push_back(to_json(tau));
    j["tau"] = taus;
    print(j);
  });

  CLI::App* check = periodic->add_subcommand("catalog-check", "re-verify the worked examples");
  check->callback([&] { exit_code = run_catalog_check(); });

  long height = 4;
  unsigned search_shards = 1;
  CLI::App* cycle_search = periodic->add_subcommand("search", "enumerate square three-cycles");
  cycle_search->add_option("--height", height, "max numerator/denominator height");
  cycle_search->add_option("--shards", search_shards, "parallel shard count");
  cycle_search->callback([&] {
    Json j;
    j["height"] = height;
    j["shards"] = search_shards;
    Json list = Json::array();
    for (const SquareCycleWitness& w : square_cycle_search(height, search_shards))
      list.push_back(to_json(w));
    j["witnesses"] = list;
    print(j);
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
