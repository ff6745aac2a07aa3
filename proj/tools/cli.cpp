#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tripext/cube.hpp"
#include "tripext/detach.hpp"
#include "tripext/error.hpp"
#include "tripext/evans.hpp"
#include "tripext/extension.hpp"
#include "tripext/factorize.hpp"
#include "tripext/json_io.hpp"
#include "tripext/oracle.hpp"

namespace tripext::cli {

namespace {

using json = nlohmann::ordered_json;
namespace tj = tripext::json;

struct Settings {
  std::uint64_t seed = 0;
  bool pretty = false;
  std::string in;
  std::string out;
  int n = 0;
  int lambda = 1;
  std::int64_t max_nodes = 0;
  int max_edges = 60;
  std::size_t limit = 1000;
  bool all = false;
  bool one_factorization = false;
  bool search_only = false;
  bool as_cube = false;
};

json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(file);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::InvalidInput, path + ": " + ex.what());
  }
}

class Emitter {
 public:
  Emitter(const Settings& s, std::ostream& out) : s_(s), out_(out) {}

  // The main result: to --out when given, else stdout.
  void result(const json& j) const {
    if (s_.out.empty() || s_.out == "-") {
      out_ << text(j) << '\n';
      return;
    }
    std::ofstream file(s_.out);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + s_.out);
    file << text(j) << '\n';
  }

  // Certificates and reports always go to stdout.
  void print(const json& j) const { out_ << text(j) << '\n'; }

 private:
  std::string text(const json& j) const { return s_.pretty ? j.dump(2) : j.dump(); }

  const Settings& s_;
  std::ostream& out_;
};

json exhausted_json(std::int64_t nodes) {
  InfeasibilityCertificate cert;
  cert.kind = InfeasibilityCertificate::Kind::SearchExhausted;
  cert.nodes = nodes;
  return tj::to_json(cert);
}

int cmd_extend(const Settings& s, const Emitter& emit, std::ostream& err) {
  const ExtensionInstance inst = tj::extension_from_json(read_json(s.in));
  ExtendOptions options;
  options.list.max_nodes = s.max_nodes;
  options.detach.seed = s.seed;
  const ExtensionResult r = extend(inst, options);
  if (r) {
    emit.result(tj::to_json(*r.factorization));
    return kOk;
  }
  if (!r.complete) {
    err << "list coloring search stopped after " << r.certificate->nodes << " nodes\n";
    return kInconclusive;
  }
  emit.print(tj::to_json(*r.certificate));
  return kInfeasible;
}

int cmd_evans(const Settings& s, const Emitter& emit) {
  const PartialInstance inst = tj::partial_from_json(read_json(s.in));
  ExtendOptions options;
  options.detach.seed = s.seed;
  emit.result(tj::to_json(evans_embed(inst, options).factorization));
  return kOk;
}

int cmd_factorize(const Settings& s, const Emitter& emit) {
  DetachOptions options;
  options.seed = s.seed;
  if (s.one_factorization && s.n % 3 != 0) {
    InfeasibilityCertificate cert;
    cert.kind = InfeasibilityCertificate::Kind::NotDivisible;
    cert.ground = s.n;
    emit.print(tj::to_json(cert));
    return kInfeasible;
  }
  emit.result(tj::to_json(min_coloring(s.n, s.lambda, options)));
  return kOk;
}

int cmd_chromatic_index(const Settings& s, std::ostream& out) {
  out << chromatic_index(s.n, s.lambda) << '\n';
  return kOk;
}

int cmd_cube_build(const Settings& s, const Emitter& emit) {
  const MixedFactorization mf = tj::mixed_from_json(read_json(s.in));
  emit.result(tj::to_json(build_cube(mf)));
  return kOk;
}

int cmd_cube_verify(const Settings& s, const Emitter& emit) {
  const json j = read_json(s.in);
  Report r;
  if (j.is_object() && j.contains("entries")) {
    r = verify_cube(tj::cube_from_json(j));
  } else {
    r = verify_mixed(tj::mixed_from_json(j));
  }
  emit.print(tj::to_json(r));
  return r.ok() ? kOk : kInfeasible;
}

int cmd_cube_search(const Settings& s, const Emitter& emit, std::ostream& err) {
  MixedSearchOptions options;
  options.max_nodes = s.max_nodes;
  const MixedSearchResult r = find_mixed_factorization(s.n, options);
  if (r) {
    emit.result(s.as_cube ? tj::to_json(build_cube(*r.factorization)) : tj::to_json(*r.factorization));
    return kOk;
  }
  if (r.exhausted) {
    emit.print(exhausted_json(r.nodes));
    return kInfeasible;
  }
  err << "search stopped after " << r.nodes << " nodes\n";
  return kInconclusive;
}

int cmd_detach(const Settings& s, const Emitter& emit, std::ostream& err) {
  const DetachmentTask task = tj::task_from_json(read_json(s.in));
  validate_task(task);
  DetachOptions options;
  options.seed = s.seed;
  options.max_nodes = s.max_nodes;
  options.search_only = s.search_only;
  const DetachResult r = detach(task, options);
  if (r) {
    if (Report check = verify_detachment(task, *r.detached); !check.ok()) {
      throw Error(ErrorCode::Internal, "detachment failed its own check: " + check.summary());
    }
    emit.result(tj::to_json(*r.detached));
    return kOk;
  }
  if (r.exhausted) {
    emit.print(exhausted_json(r.nodes));
    return kInfeasible;
  }
  err << "search stopped after " << r.nodes << " nodes\n";
  return kInconclusive;
}

int cmd_oracle_extend(const Settings& s, const Emitter& emit, std::ostream& err) {
  const ExtensionInstance inst = tj::extension_from_json(read_json(s.in));
  oracle::Limits limits;
  limits.max_edges = s.max_edges;
  limits.max_nodes = s.max_nodes;
  const oracle::ExtendResult r = oracle::brute_extend(inst, limits);
  switch (r.status) {
    case oracle::Status::Found:
      emit.result(tj::to_json(*r.witness));
      return kOk;
    case oracle::Status::None:
      emit.print(exhausted_json(r.nodes));
      return kInfeasible;
    case oracle::Status::CapExceeded:
      break;
  }
  err << "oracle limit reached (" << s.max_edges << " edges, " << r.nodes << " nodes)\n";
  return kInconclusive;
}

int cmd_oracle_enumerate(const Settings& s, const Emitter& emit) {
  oracle::EnumerateOptions options;
  options.limit = s.limit;
  options.canonical = !s.all;
  options.max_edges = s.max_edges;
  const oracle::EnumerateResult r = oracle::enumerate_factorizations(s.n, s.lambda, options);
  json list = json::array();
  for (const Coloring& c : r.factorizations) list.push_back(tj::to_json(c));
  emit.result({{"n", s.n},
               {"lambda", s.lambda},
               {"count", r.factorizations.size()},
               {"truncated", r.truncated},
               {"factorizations", list}});
  return kOk;
}

// Largest lambda with host == lambda*C(ground,3), if any.
std::optional<int> complete_multiplicity(const Coloring& c) {
  const Hypergraph host = c.host();
  if (host.empty() || c.ground() < 3) return std::nullopt;
  const int lambda = host.edges().begin()->second;
  if (host == complete_triples(c.ground(), lambda)) return lambda;
  return std::nullopt;
}

int cmd_verify(const Settings& s, const Emitter& emit) {
  const Coloring c = tj::coloring_from_json(read_json(s.in));
  Report r;
  if (c.host().loopless()) {
    r.merge(verify_proper(c));
  } else {
    r.add("coloring has an edge with a repeated vertex");
  }
  const Report factor = verify_one_factorization(c);
  if (s.one_factorization) r.merge(factor);
  const std::optional<int> lambda = complete_multiplicity(c);
  if (s.lambda > 0 && lambda != s.lambda) {
    r.add("host is not " + std::to_string(s.lambda) + " copies of every triple of 1.." + std::to_string(c.ground()));
  }
  json j = tj::to_json(r);
  j["one_factorization"] = factor.ok();
  j["complete_lambda"] = lambda ? json(*lambda) : json(nullptr);
  emit.print(j);
  return r.ok() ? kOk : kInfeasible;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
      return kInconclusive;
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kInvalidInput;
  }
}

const CLI::App* deepest(const CLI::App* app) {
  for (const CLI::App* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Extend colorings of complete triple systems to one-factorizations.", "tripext"};
  app.require_subcommand(1);
  app.add_option("--seed", s.seed, "Seed for randomized tie-breaking in detachment search");
  app.add_flag("--pretty", s.pretty, "Indent JSON output");

  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", s.out, "Write the result here instead of stdout"); };

  CLI::App* extend_cmd = app.add_subcommand("extend", "Extend a coloring of lambda*C(X,3) to a one-factorization");
  extend_cmd->add_option("--instance", s.in, "Extension instance JSON")->required();
  extend_cmd->add_option("--max-nodes", s.max_nodes, "Node limit for list coloring (0 = none)");
  add_out(extend_cmd);

  CLI::App* evans_cmd = app.add_subcommand("evans", "Embed a partial q-coloring when nY >= 3 nX");
  evans_cmd->add_option("--instance", s.in, "Partial instance JSON")->required();
  add_out(evans_cmd);

  CLI::App* factorize_cmd = app.add_subcommand("factorize", "Minimum coloring of lambda*C({1..n},3)");
  factorize_cmd->add_option("--n", s.n, "Ground size")->required()->check(CLI::Range(3, 64));
  factorize_cmd->add_option("--lambda", s.lambda, "Multiplicity")->check(CLI::PositiveNumber);
  factorize_cmd->add_flag("--one-factorization", s.one_factorization, "Require every class to be a perfect matching");
  add_out(factorize_cmd);

  CLI::App* chi_cmd = app.add_subcommand("chromatic-index", "Print the chromatic index of lambda*C({1..n},3)");
  chi_cmd->add_option("--n", s.n, "Ground size")->required()->check(CLI::Range(3, 100000));
  chi_cmd->add_option("--lambda", s.lambda, "Multiplicity")->check(CLI::PositiveNumber);

  CLI::App* cube_cmd = app.add_subcommand("cube", "Symmetric layer-rainbow latin cubes");
  cube_cmd->require_subcommand(1);
  CLI::App* cube_build = cube_cmd->add_subcommand("build", "Cube from a mixed one-factorization");
  cube_build->add_option("--in", s.in, "Mixed factorization JSON")->required();
  add_out(cube_build);
  CLI::App* cube_verify = cube_cmd->add_subcommand("verify", "Check a cube or a mixed factorization");
  cube_verify->add_option("--in", s.in, "Cube or mixed factorization JSON")->required();
  CLI::App* cube_search = cube_cmd->add_subcommand("search", "Search for a mixed one-factorization");
  cube_search->add_option("--n", s.n, "Order")->required()->check(CLI::PositiveNumber);
  cube_search->add_option("--max-nodes", s.max_nodes, "Node limit (0 = none)");
  cube_search->add_flag("--cube", s.as_cube, "Output the cube instead of the factorization");
  add_out(cube_search);

  CLI::App* detach_cmd = app.add_subcommand("detach", "Run a detachment task");
  detach_cmd->add_option("--task", s.in, "Detachment task JSON")->required();
  detach_cmd->add_option("--max-nodes", s.max_nodes, "Node limit for exhaustive search (0 = none)");
  detach_cmd->add_flag("--search-only", s.search_only, "Skip the flow splitter");
  add_out(detach_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth on tiny instances");
  oracle_cmd->require_subcommand(1);
  CLI::App* oracle_extend = oracle_cmd->add_subcommand("extend", "Exhaustive extension search");
  oracle_extend->add_option("--instance", s.in, "Extension instance JSON")->required();
  oracle_extend->add_option("--limit", s.max_edges, "Largest lambda*C(nY,3) accepted");
  oracle_extend->add_option("--max-nodes", s.max_nodes, "Node limit (0 = none)");
  add_out(oracle_extend);
  CLI::App* oracle_enum = oracle_cmd->add_subcommand("enumerate", "List one-factorizations");
  oracle_enum->add_option("--n", s.n, "Ground size")->required()->check(CLI::Range(3, 63));
  oracle_enum->add_option("--lambda", s.lambda, "Multiplicity")->check(CLI::PositiveNumber);
  oracle_enum->add_option("--limit", s.limit, "Stop after this many");
  oracle_enum->add_option("--max-edges", s.max_edges, "Largest lambda*C(n,3) accepted");
  oracle_enum->add_flag("--all", s.all, "Count colorings that differ by a color permutation separately");
  add_out(oracle_enum);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  verify_cmd->add_option("--in", s.in, "Coloring JSON")->required();
  verify_cmd->add_flag("--one-factorization", s.one_factorization, "Require every class to be a perfect matching");
  verify_cmd->add_option("--lambda", s.lambda, "Require the host to be lambda*C({1..ground},3)");

  bool lambda_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    lambda_given = verify_cmd->count("--lambda") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kInvalidInput;
  }

  const Emitter emit(s, out);
  try {
    if (extend_cmd->parsed()) return cmd_extend(s, emit, err);
    if (evans_cmd->parsed()) return cmd_evans(s, emit);
    if (factorize_cmd->parsed()) return cmd_factorize(s, emit);
    if (chi_cmd->parsed()) return cmd_chromatic_index(s, out);
    if (cube_build->parsed()) return cmd_cube_build(s, emit);
    if (cube_verify->parsed()) return cmd_cube_verify(s, emit);
    if (cube_search->parsed()) return cmd_cube_search(s, emit, err);
    if (detach_cmd->parsed()) return cmd_detach(s, emit, err);
    if (oracle_extend->parsed()) return cmd_oracle_extend(s, emit, err);
    if (oracle_enum->parsed()) return cmd_oracle_enumerate(s, emit);
    if (verify_cmd->parsed()) {
      if (!lambda_given) s.lambda = 0;
      return cmd_verify(s, emit);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << app.help();
  return kInvalidInput;
}

}  // namespace tripext::cli
