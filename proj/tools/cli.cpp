#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "posetdim/bounds.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/json_io.hpp"
#include "posetdim/solver.hpp"

namespace posetdim::cli {
namespace {

using nlohmann::json;
namespace io = posetdim::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooSmall:
    case ErrorKind::BadMatching:
    case ErrorKind::BadParameters: return kBadParams;
    case ErrorKind::CapExceeded:
    case ErrorKind::SearchLimit: return kCapExceeded;
    case ErrorKind::NotARealizer:
    case ErrorKind::DomainMismatch: return kVerifyFailed;
    case ErrorKind::Internal: return kInternal;
    default: return kParse;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

json read_json(const std::string& path, std::istream& in) {
  try {
    return json::parse(read_input(path, in));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void emit(std::ostream& out, const json& doc, bool pretty) { out << doc.dump(pretty ? 2 : -1) << '\n'; }

std::string join(const LinearOrder& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? " < " : "") + order[i];
  return s;
}

Matching parse_matching(const std::string& text) {
  // "r:c,r:c,..."
  Matching m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::BadMatching, "matching entries look like row:col");
    try {
      m.pairs.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadMatching, "bad matching entry '" + item + "'");
    }
  }
  return m;
}

std::size_t solver_cap_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("POSETDIM_SOLVER_CAP")) {
    try {
      return std::stoul(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadParameters, "POSETDIM_SOLVER_CAP must be a non-negative integer");
    }
  }
  return fallback;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0, d = 0, h = 0, k = 0, k1 = 0, k2 = 0, g = 0;
  std::string matching;
  std::uint64_t seed = 0;
  bool allow_unit_block = false;
  std::string output = "-";
};

int run_gen(const GenArgs& a, std::ostream& out, bool pretty) {
  json doc;
  if (a.family == "standard") {
    doc = io::to_json(standard_example(a.n));
  } else if (a.family == "stacked") {
    doc = io::to_json(stacked_standard(a.n));
  } else if (a.family == "complete-minus-matching") {
    Matching m;
    if (!a.matching.empty()) {
      m = parse_matching(a.matching);
    } else {
      std::mt19937_64 rng(a.seed);
      m = random_matching(a.h, a.k, a.g, rng);
    }
    doc = io::to_json(complete_minus_matching(a.h, a.k, m));
  } else if (a.family == "lower-bound-family") {
    doc = io::to_json(lower_bound_family(a.d, a.h, a.k, a.allow_unit_block));
  } else if (a.family == "subset") {
    doc = io::to_json(subset_poset(a.k1, a.k2, a.n));
  } else {
    throw Error(ErrorKind::BadParameters, "unknown family '" + a.family + "'");
  }
  if (a.output == "-") {
    emit(out, doc, pretty);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorKind::BadParameters, "cannot write '" + a.output + "'");
    emit(file, doc, pretty);
  }
  return kOk;
}

struct DimArgs {
  std::string input;
  std::size_t max_d = 0;
  bool greedy = false;
  bool all_pairs = false;
  bool no_clique = false;
  std::uint64_t node_limit = 0;
  unsigned threads = 0;
};

int run_dim(const DimArgs& a, std::istream& in, std::ostream& out, bool pretty) {
  const Poset p = io::parse_poset(read_json(a.input, in)).poset;
  if (a.greedy) {
    Realizer r = greedy_realizer(p);
    canonicalize(r);
    if (pretty) {
      out << "upper bound: " << r.size() << " (greedy)\n";
      for (const auto& order : r.orders) out << "  " << join(order) << '\n';
    } else {
      emit(out, {{"upper_bound", r.size()}, {"is_exact", false}, {"witness", io::to_json(r)}}, false);
    }
    return kOk;
  }

  SolverOptions options;
  if (a.max_d) options.max_d = a.max_d;
  if (a.node_limit) options.node_limit = a.node_limit;
  options.critical_pairs_only = !a.all_pairs;
  options.clique_lower_bound = !a.no_clique;
  options.threads = a.threads ? a.threads : std::max(1U, std::thread::hardware_concurrency());
  try {
    const auto result = exact_dimension(p, options);
    if (pretty) {
      out << "dimension: " << result.dimension << "\n"
          << "nodes explored: " << result.certificate.nodes_explored << "\n"
          << "lower bound from conflicting pairs: " << result.certificate.lower_bound << "\n";
      for (const auto& order : result.witness.orders) out << "  " << join(order) << '\n';
    } else {
      emit(out, io::to_json(result), false);
    }
    return kOk;
  } catch (const CapExceeded& e) {
    emit(out, {{"dimension", nullptr}, {"error", "CapExceeded"}, {"certificate", io::to_json(e.certificate())}},
         pretty);
    return kCapExceeded;
  }
}

struct BoundsArgs {
  std::string input;
  std::string mode = "exact";
  std::string witness_out;
  unsigned threads = 0;
};

int run_bounds(const BoundsArgs& a, std::istream& in, std::ostream& out, bool pretty) {
  const auto mp = io::require_multipartite(io::parse_poset(read_json(a.input, in)));
  ReportOptions options;
  options.b.mode = a.mode == "greedy" ? BMode::Greedy : BMode::Exact;
  options.b.exact_size_cap = solver_cap_from_env(options.b.exact_size_cap);
  options.b.threads = a.threads ? a.threads : std::max(1U, std::thread::hardware_concurrency());
  const auto report = make_bound_report(mp, options);

  if (!a.witness_out.empty()) {
    std::ofstream file(a.witness_out);
    if (!file) throw Error(ErrorKind::BadParameters, "cannot write '" + a.witness_out + "'");
    emit(file, io::to_json(report.witness), false);
  }
  if (pretty) {
    out << "parts m = " << report.m << "\n";
    for (const auto& row : report.b.table)
      out << "  dim P(" << row.i + 1 << "," << row.j + 1 << ") " << (row.exact ? "= " : "<= ") << row.dimension
          << "\n";
    out << "B(P) " << (report.b.is_exact ? "= " : "<= ") << report.b.value << "\n"
        << "sum bound = " << report.sum_bound << "\n"
        << "chained bound = " << report.theorem_coefficient << " * B = " << report.theorem_bound << "\n"
        << "chained realizer size = " << report.witness.size() << "\n"
        << "exact dim = " << (report.exact_dim ? std::to_string(*report.exact_dim) : "n/a") << "\n"
        << "f(m) envelope = [" << report.envelope.lower << ", " << report.envelope.upper << "]\n";
  } else {
    emit(out, io::to_json(report), false);
  }
  return kOk;
}

int run_verify(const std::string& input, const std::string& realizer_path, std::istream& in, std::ostream& out,
               bool pretty) {
  const Poset p = io::parse_poset(read_json(input, in)).poset;
  const Realizer r = io::parse_realizer(read_json(realizer_path, in));
  const auto violation = find_realizer_violation(p, r);
  if (!violation) {
    emit(out, {{"realizer", true}, {"orders", r.size()}}, pretty);
    return kOk;
  }
  json v;
  switch (violation->kind) {
    case RealizerViolation::Kind::Empty: v = {{"kind", "empty"}}; break;
    case RealizerViolation::Kind::NotExtension:
      v = {{"kind", "not_a_linear_extension"}, {"order", violation->order}, {"pair", {violation->lower, violation->upper}}};
      break;
    case RealizerViolation::Kind::NeverReversed:
      v = {{"kind", "never_reversed"}, {"pair", {violation->lower, violation->upper}}};
      break;
  }
  emit(out, {{"realizer", false}, {"violation", v}}, pretty);
  return kVerifyFailed;
}

int run_embed(const std::string& input, const std::string& realizer_path, std::istream& in, std::ostream& out,
              bool pretty) {
  const Poset p = io::parse_poset(read_json(input, in)).poset;
  const Realizer r = io::parse_realizer(read_json(realizer_path, in));
  const auto coords = embed(p, r);
  emit(out, {{"dimension", r.size()}, {"coordinates", io::to_json(coords)}, {"self_check", embedding_reproduces(p, coords)}},
       pretty);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order dimension of finite and multipartite posets", "posetdim"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "Print this help message and exit");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of one JSON line");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a poset family as JSON");
  gen_cmd->add_option("family", gen.family, "standard | stacked | complete-minus-matching | lower-bound-family | subset")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Size parameter (standard, stacked, subset)");
  gen_cmd->add_option("--d", gen.d, "Block size (lower-bound-family)");
  gen_cmd->add_option("--h", gen.h, "Rows / row blocks");
  gen_cmd->add_option("--k", gen.k, "Columns / column blocks");
  gen_cmd->add_option("--k1", gen.k1, "Lower subset size (subset)");
  gen_cmd->add_option("--k2", gen.k2, "Upper subset size (subset)");
  gen_cmd->add_option("--matching", gen.matching, "Removed pairs as row:col,row:col (1-based)");
  gen_cmd->add_option("--g", gen.g, "Random matching size when --matching is absent");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random matchings");
  gen_cmd->add_flag("--allow-unit-block", gen.allow_unit_block, "Permit d = 1 in lower-bound-family");
  gen_cmd->add_option("-o,--output", gen.output, "Output path, - for stdout");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Exact order dimension with witness and certificate");
  dim_cmd->add_option("input", dim.input, "Poset JSON, - for stdin")->required();
  dim_cmd->add_option("--max-d", dim.max_d, "Give up past this many orders (exit 4)");
  dim_cmd->add_flag("--greedy", dim.greedy, "Greedy upper bound instead of exact search");
  dim_cmd->add_flag("--all-pairs", dim.all_pairs, "Cover every ordered incomparable pair, not only critical pairs");
  dim_cmd->add_flag("--no-clique", dim.no_clique, "Start the search at d = 2 without the clique lower bound");
  dim_cmd->add_option("--node-limit", dim.node_limit, "Abort after this many search nodes (exit 4)");
  dim_cmd->add_option("--threads", dim.threads, "Search threads (default: all cores)");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "B(P), sum and chained upper bounds for a multipartite poset");
  bounds_cmd->add_option("input", bounds.input, "Poset JSON with parts, - for stdin")->required();
  bounds_cmd->add_option("--mode", bounds.mode, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));
  bounds_cmd->add_option("--witness-out", bounds.witness_out, "Write the chained realizer here");
  bounds_cmd->add_option("--threads", bounds.threads, "Parallel sub-poset solves (default: all cores)");

  std::string verify_input, verify_realizer;
  auto* verify_cmd = app.add_subcommand("verify", "Check that orders realize a poset");
  verify_cmd->add_option("input", verify_input, "Poset JSON")->required();
  verify_cmd->add_option("realizer", verify_realizer, "Realizer JSON {\"orders\": [...]}")->required();

  std::string embed_input, embed_realizer;
  auto* embed_cmd = app.add_subcommand("embed", "Integer coordinates from a realizer");
  embed_cmd->add_option("input", embed_input, "Poset JSON")->required();
  embed_cmd->add_option("realizer", embed_realizer, "Realizer JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadParams;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out, pretty);
    if (*dim_cmd) return run_dim(dim, in, out, pretty);
    if (*bounds_cmd) return run_bounds(bounds, in, out, pretty);
    if (*verify_cmd) return run_verify(verify_input, verify_realizer, in, out, pretty);
    if (*embed_cmd) return run_embed(embed_input, embed_realizer, in, out, pretty);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kInternal;
}

}  // namespace posetdim::cli
