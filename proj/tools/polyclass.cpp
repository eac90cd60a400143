// polyclass: class groups and structure of toric rings of lattice polytopes.
//
//   polyclass analyze <file|spec> [--json]
//   polyclass make <ctor> [params] [-o <file>]
//   polyclass verify [--dim N] [--exhaustive | --samples K --seed S]
//                    [--fixtures] [--json]
//
// Exit codes: 0 success, 1 bad input or usage, 2 invariant violation or a
// failed verification check.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "polyclass/polyclass.hpp"

namespace {

using namespace polyclass;

constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

std::size_t parse_count(const std::string &s, const std::string &what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw ArgumentError(what + " must be a nonnegative integer, got '" + s +
                        "'");
  return static_cast<std::size_t>(v);
}

// simplex:N | cube:N | fixture:NAME | file:PATH
PolytopeFile polytope_from_spec(const std::string &spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ArgumentError("polytope spec '" + spec +
                        "' is not of the form kind:arg");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "simplex")
    return {spec, simplex(parse_count(arg, "simplex dimension"))};
  if (kind == "cube")
    return {spec, cube(parse_count(arg, "cube dimension"))};
  if (kind == "fixture")
    return {arg, fixture(arg)};
  if (kind == "file")
    return load_polytope(arg);
  throw ArgumentError("unknown polytope kind '" + kind + "'");
}

PolytopeFile load_input(const std::string &input) {
  if (input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    return parse_polytope(text);
  }
  if (!std::filesystem::exists(input) &&
      input.find(':') != std::string::npos)
    return polytope_from_spec(input);
  return load_polytope(input);
}

std::size_t thread_budget() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("POLYCLASS_THREADS")) {
    const std::size_t cap = parse_count(env, "POLYCLASS_THREADS");
    if (cap > 0)
      n = std::min(n, cap);
  }
  return n;
}

struct MakeArgs {
  std::string ctor;
  std::vector<std::string> params;
  std::vector<std::string> of;
  std::size_t lift = 1;
  std::size_t factor = 2;
  std::string graph, poset, name, output;
};

PolytopeFile build(const MakeArgs &m) {
  auto need_param = [&](const char *what) -> const std::string & {
    if (m.params.size() != 1)
      throw ArgumentError("make " + m.ctor + " takes exactly one " + what);
    return m.params.front();
  };
  auto need_of = [&](std::size_t n) {
    if (n && m.of.size() != n)
      throw ArgumentError("make " + m.ctor + " needs --of with " +
                          std::to_string(n) + " polytope spec(s)");
    if (m.of.empty())
      throw ArgumentError("make " + m.ctor + " needs --of");
    std::vector<PolytopeFile> out;
    for (const auto &s : m.of)
      out.push_back(polytope_from_spec(s));
    return out;
  };

  if (m.ctor == "simplex") {
    const auto n = parse_count(need_param("dimension"), "dimension");
    return {"simplex" + std::to_string(n), simplex(n)};
  }
  if (m.ctor == "cube") {
    const auto n = parse_count(need_param("dimension"), "dimension");
    return {"cube" + std::to_string(n), cube(n)};
  }
  if (m.ctor == "fixture") {
    const auto &name = need_param("fixture name");
    return {name, fixture(name)};
  }
  if (m.ctor == "product") {
    auto parts = need_of(0);
    PolytopeFile acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = {acc.name + " x " + parts[i].name,
             product(acc.polytope, parts[i].polytope)};
    return acc;
  }
  if (m.ctor == "pyramid") {
    auto base = need_of(1).front();
    return {"pyramid(" + base.name + ")", pyramid(base.polytope, m.lift)};
  }
  if (m.ctor == "dilate") {
    auto base = need_of(1).front();
    return {std::to_string(m.factor) + "*" + base.name,
            dilate(base.polytope, m.factor)};
  }
  if (m.ctor == "order") {
    if (m.poset.empty())
      throw ArgumentError("make order needs --poset <file>");
    const auto in = parse_poset(detail::read_file(m.poset));
    if (!in.was_closed)
      std::cerr << "warning: poset relations were not transitively closed; "
                   "closure taken\n";
    return {"order(" + m.poset + ")", order_polytope(in.poset)};
  }
  if (m.ctor == "stableset" || m.ctor == "edge") {
    if (m.graph.empty())
      throw ArgumentError("make " + m.ctor + " needs --graph <file>");
    const Graph g = parse_graph(detail::read_file(m.graph));
    if (m.ctor == "edge")
      return {"edge(" + m.graph + ")", edge_polytope(g)};
    return {"stableset(" + m.graph + ")", stable_set_polytope(g)};
  }
  throw ArgumentError("unknown constructor '" + m.ctor + "'");
}

int run_make(const MakeArgs &m) {
  PolytopeFile pf = build(m);
  if (!m.name.empty())
    pf.name = m.name;
  const std::string text = write_polytope(pf.name, pf.polytope);
  if (m.output.empty() || m.output == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(m.output, std::ios::binary);
  if (!out)
    throw ArgumentError("cannot write " + m.output);
  out << text;
  return 0;
}

int run_analyze(const std::string &input, bool json) {
  const PolytopeFile pf = load_input(input);
  const AnalysisReport r = analyze(pf.name, pf.polytope);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return 0;
}

struct VerifyArgs {
  std::size_t dim = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool fixtures = false;
  bool json = false;
};

int run_verify(const VerifyArgs &v) {
  std::vector<NamedPolytope> family;
  if (v.fixtures) {
    auto f = fixture_family();
    family.insert(family.end(), f.begin(), f.end());
  }
  if (v.exhaustive) {
    if (v.dim == 0 || v.dim > 4)
      throw ArgumentError("--exhaustive needs 1 <= --dim <= 4");
    auto f = exhaustive_01_family(v.dim);
    family.insert(family.end(), f.begin(), f.end());
  }
  if (v.samples > 0) {
    if (v.dim == 0)
      throw ArgumentError("--samples needs --dim");
    auto f = random_01_family(v.dim, v.samples, v.seed);
    family.insert(family.end(), f.begin(), f.end());
  }
  if (family.empty())
    throw ArgumentError(
        "nothing to verify: pass --fixtures, --exhaustive or --samples");
  const auto report = verify_theorems(family, thread_budget());
  if (v.json)
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << to_text(report);
  return report.ok() ? 0 : kExitInvariant;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Divisor class groups and structure of toric rings of "
               "integral polytopes"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  auto *analyze_cmd = app.add_subcommand("analyze", "Analyze a polytope");
  analyze_cmd
      ->add_option("input", input,
                   "Polytope file, '-' for stdin, or a spec such as "
                   "fixture:P3 or simplex:2")
      ->required();
  analyze_cmd->add_flag("--json", json, "Emit the full report as JSON");

  MakeArgs make;
  auto *make_cmd = app.add_subcommand(
      "make", "Write a polytope file from a constructor: simplex N, cube N, "
              "fixture NAME, product --of A B.., pyramid --of A [--lift L], "
              "dilate --of A --factor K, order --poset F, stableset --graph F, "
              "edge --graph F");
  make_cmd->add_option("ctor", make.ctor, "Constructor name")->required();
  make_cmd->add_option("params", make.params, "Constructor parameters");
  make_cmd->add_option("--of", make.of,
                       "Operand specs: simplex:N, cube:N, fixture:NAME, "
                       "file:PATH");
  make_cmd->add_option("--lift", make.lift, "Apex height for pyramid");
  make_cmd->add_option("--factor", make.factor, "Dilation factor");
  make_cmd->add_option("--graph", make.graph, "Graph file");
  make_cmd->add_option("--poset", make.poset, "Poset file");
  make_cmd->add_option("--name", make.name, "Name stored in the file");
  make_cmd->add_option("-o,--output", make.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto *verify_cmd =
      app.add_subcommand("verify", "Check the torsion/normality theorems on a "
                                   "family of polytopes");
  verify_cmd->add_option("--dim", verify.dim, "Ambient dimension");
  auto *exh = verify_cmd->add_flag("--exhaustive", verify.exhaustive,
                                   "All full-dimensional (0,1)-polytopes");
  auto *samples = verify_cmd->add_option("--samples", verify.samples,
                                         "Number of random (0,1)-polytopes");
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->needs(samples);
  exh->excludes(samples);
  verify_cmd->add_flag("--fixtures", verify.fixtures,
                       "Include the named fixtures");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd)
      return run_analyze(input, json);
    if (*make_cmd)
      return run_make(make);
    return run_verify(verify);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ArgumentError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation &e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
}
