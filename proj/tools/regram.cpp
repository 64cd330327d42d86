// Command-line front end. Exit codes: 0 success, 1 a checked property does
// not hold (or a sequence is infeasible), 2 construction failure, 3 I/O or
// parse failure, 64 invalid arguments.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "regram/certificate.hpp"
#include "regram/degree_realization.hpp"
#include "regram/equitable_coloring.hpp"
#include "regram/graph_io.hpp"
#include "regram/hfree_process.hpp"
#include "regram/pipeline.hpp"
#include "regram/regularizer.hpp"
#include "regram/two_factor.hpp"

namespace {

using namespace regram;

constexpr int kExitProperty = 1;
constexpr int kExitConstruction = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 64;

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad list entry '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

GraphFormat parse_format(const std::string& text) {
  if (text == "g6" || text == "graph6") {
    return GraphFormat::graph6;
  }
  if (text == "edges") {
    return GraphFormat::edge_list;
  }
  throw std::invalid_argument("format must be g6 or edges");
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

struct Options {
  // realize
  std::string left;
  std::string right;
  // shared
  std::string in;
  std::string out;
  std::string format = "edges";
  std::uint64_t seed = 1;
  // color
  int colors = 0;
  // process
  int n = 0;
  std::string pattern = "K3";
  std::string stats;
  // regularize
  int d = 0;
  // hkr
  int k = 0;
  int r = 0;
  std::uint64_t factor_seed = 0;
  // verify / construct
  std::string alpha = "exact";
  std::int64_t budget = kDefaultAlphaBudget;
  std::optional<double> target;
  std::string certificate;
  int retries = 8;
  bool parity = false;
  bool no_fallback = false;
  std::string d_policy = "minimal";
};

int run_realize(const Options& o) {
  const DegreeSequence left(parse_list(o.left));
  const DegreeSequence right(parse_list(o.right));
  if (auto s = gale_ryser_violation(left, right)) {
    std::cout << "INFEASIBLE s=" << *s << "\n";
    return kExitProperty;
  }
  const auto b = realize_bipartite(left, right);
  std::cout << "# left=" << b.left_size << " right=" << b.right_size << "\n";
  for (int i = 0; i < b.left_size; ++i) {
    for (int j : b.adjacency[i]) {
      std::cout << i << " " << j << "\n";
    }
  }
  return 0;
}

int run_color(const Options& o) {
  const Graph g = read_graph_file(o.in);
  const auto coloring = equitable_color(g, o.colors, o.seed);
  std::ostringstream text;
  for (int v = 0; v < g.order(); ++v) {
    text << v << " " << coloring.color_of[v] << "\n";
  }
  emit(o.out, text.str());
  return 0;
}

int run_process_cmd(const Options& o) {
  const auto pattern = ForbiddenPattern::parse(o.pattern);
  const auto result = run_process(o.n, pattern, o.seed);
  if (!o.stats.empty()) {
    std::ostringstream csv;
    csv << "step,max_deg,min_deg,open_pairs\n";
    for (const auto& s : result.trajectory) {
      csv << s.step << "," << s.max_degree << "," << s.min_degree << "," << s.open_pairs << "\n";
    }
    write_text_file(o.stats, csv.str());
  }
  emit(o.out, serialize(result.final_graph, parse_format(o.format)));
  std::cerr << "steps=" << result.steps << " max_deg=" << (o.n > 0 ? max_degree(result.final_graph) : 0)
            << " min_deg=" << (o.n > 0 ? min_degree(result.final_graph) : 0) << "\n";
  return 0;
}

int run_regularize_cmd(const Options& o) {
  const Graph g = read_graph_file(o.in);
  emit(o.out, serialize(regularize(g, o.d, o.seed), parse_format(o.format)));
  return 0;
}

int run_hkr(const Options& o) {
  emit(o.out, serialize(h_kr(o.k, o.r, o.factor_seed), parse_format(o.format)));
  return 0;
}

int run_verify(const Options& o) {
  const Graph g = read_graph_file(o.in);
  CertifyOptions opts;
  opts.alpha = parse_alpha_mode(o.alpha);
  opts.budget = o.budget;
  opts.constant_target = o.target;
  const auto cert = certify(g, opts);
  std::cout << to_json(cert).dump(2) << "\n";
  bool ok = cert.regular && cert.triangle_free;
  if (o.target) {
    const auto ratio = cert.ratio_upper ? cert.ratio_upper : cert.ratio_lower;
    ok = ok && (!ratio || *ratio <= *o.target);
  }
  return ok ? 0 : kExitProperty;
}

int run_construct(const Options& o) {
  PipelineConfig cfg;
  cfg.seed = o.seed;
  cfg.max_retries = o.retries;
  cfg.parity_required = o.parity;
  cfg.d_policy = parse_d_policy(o.d_policy);
  cfg.allow_fallback = !o.no_fallback;
  cfg.certify.alpha = parse_alpha_mode(o.alpha);
  cfg.certify.budget = o.budget;
  cfg.certify.constant_target = o.target;
  const auto format = parse_format(o.format);
  const Construction c = construct(o.n, cfg);
  emit(o.out, serialize(c.graph, format));
  const std::string json_text = to_json(c).dump(2) + "\n";
  if (!o.certificate.empty()) {
    write_text_file(o.certificate, json_text);
  } else if (!o.out.empty()) {
    std::cout << json_text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular triangle-free graphs with small independence number"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* realize = app.add_subcommand("realize", "Realize a bidegree pair as a bipartite graph");
  realize->add_option("--left", o.left, "Left degrees, comma separated, non-increasing")->required();
  realize->add_option("--right", o.right, "Right degrees, comma separated, non-increasing")->required();

  auto* color = app.add_subcommand("color", "Equitable colouring; prints `vertex colour` lines");
  color->add_option("--in", o.in, "Graph file (edge list or graph6)")->required();
  color->add_option("--colors", o.colors, "Number of colours, at least max degree + 1")->required();
  color->add_option("--seed", o.seed, "Tie-breaking seed");
  color->add_option("--out", o.out, "Output path (default stdout)");

  auto* process = app.add_subcommand("process", "Run the random H-free process");
  process->add_option("--n", o.n, "Vertex count")->required();
  process->add_option("--h", o.pattern, "Forbidden graph: K<k>, C<k> or P<k>");
  process->add_option("--seed", o.seed, "RNG seed");
  process->add_option("--stats", o.stats, "Per-step CSV path");
  process->add_option("--out", o.out, "Final graph path (default stdout)");
  process->add_option("--format", o.format, "g6 or edges");

  auto* reg = app.add_subcommand("regularize", "Two-copy regularizing gadget");
  reg->add_option("--in", o.in, "Triangle-free input graph")->required();
  reg->add_option("--d", o.d, "Slack d")->required();
  reg->add_option("--seed", o.seed, "Seed for colouring and class order");
  reg->add_option("--out", o.out, "Output path (default stdout)");
  reg->add_option("--format", o.format, "g6 or edges");

  auto* hkr = app.add_subcommand("hkr", "C5 blow-up with 2-factors removed");
  hkr->add_option("--k", o.k, "Order, a multiple of 5")->required();
  hkr->add_option("--r", o.r, "Even degree, at most 2k/5")->required();
  hkr->add_option("--seed", o.factor_seed, "Non-zero values permute the factor order");
  hkr->add_option("--out", o.out, "Output path (default stdout)");
  hkr->add_option("--format", o.format, "g6 or edges");

  auto* verify = app.add_subcommand("verify", "Certify a graph; exit 0 iff regular and triangle-free");
  verify->add_option("--in", o.in, "Graph file")->required();
  verify->add_option("--alpha", o.alpha, "exact or greedy");
  verify->add_option("--budget", o.budget, "Node budget for the exact search");
  verify->add_option("--max-ratio", o.target, "Also require alpha / sqrt(n ln n) <= this");

  auto* cons = app.add_subcommand("construct", "Build a regular triangle-free graph on n vertices");
  cons->add_option("--n", o.n, "Target order")->required();
  cons->add_option("--seed", o.seed, "Master seed");
  cons->add_option("--format", o.format, "g6 or edges");
  cons->add_option("--out", o.out, "Graph path (default stdout)");
  cons->add_option("--certificate", o.certificate, "Certificate JSON path");
  cons->add_option("--alpha", o.alpha, "exact or greedy");
  cons->add_option("--budget", o.budget, "Node budget for the exact search");
  cons->add_option("--retries", o.retries, "Process runs / blow-up attempts");
  cons->add_option("--d-policy", o.d_policy, "minimal or maximal");
  cons->add_option("--max-ratio", o.target, "Report whether the ratio stays below this");
  cons->add_flag("--parity", o.parity, "Force an even degree on even orders");
  cons->add_flag("--no-fallback", o.no_fallback, "Fail instead of emitting the edgeless graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*realize) return run_realize(o);
    if (*color) return run_color(o);
    if (*process) return run_process_cmd(o);
    if (*reg) return run_regularize_cmd(o);
    if (*hkr) return run_hkr(o);
    if (*verify) return run_verify(o);
    if (*cons) return run_construct(o);
  } catch (const ConstructionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
