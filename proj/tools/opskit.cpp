#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opskit/opskit.hpp"

namespace {

using opskit::io::Json;
using opskit::io::ResultReport;
using opskit::io::round2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) opskit::fail(opskit::Errc::ParseError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ResultReport& report, const std::string& text, bool json) {
  if (json)
    std::cout << report.to_string();
  else
    std::cout << text;
}

std::string join_ids(const std::vector<opskit::VertexId>& ids, const char* sep) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

constexpr const char* kGraphFormatHelp =
    "Graph file format: first content line `n <count>`, then one edge per line "
    "`u v w` (1-based integer ids, decimal weight >= 0). Lines starting with `#` "
    "are comments.";

struct MstOptions {
  std::string file;
  std::string algo = "prim";
  int start = 1;
  bool json = false;
};

int run_mst(const MstOptions& opt) {
  const std::string bytes = read_file(opt.file);
  const opskit::WeightedGraph g = opskit::io::parse_graph_file(bytes);

  opskit::MstResult mst;
  if (opt.algo == "prim")
    mst = opskit::prim_mst(g, opt.start);
  else if (opt.algo == "kruskal")
    mst = opskit::kruskal_mst(g);
  else
    mst = opskit::enumerate_spanning_trees_min(g);

  ResultReport report;
  report.task = "mst";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["algorithm"] = opt.algo;
  if (opt.algo == "prim") report.result["start"] = opt.start;
  report.result["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const opskit::Edge& e : mst.edges)
    edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  report.result["edges"] = edges;
  report.result["total_weight"] = mst.total_weight;
  report.display["total_weight"] = round2(mst.total_weight);

  std::string text = "minimum spanning tree (" + opt.algo;
  if (opt.algo == "prim") text += ", start " + std::to_string(opt.start);
  text += ")\n";
  for (const opskit::Edge& e : mst.edges)
    text += "  " + std::to_string(e.u) + " - " + std::to_string(e.v) + "  " +
            opskit::io::format_number(e.weight) + "\n";
  text += "edges: " + std::to_string(mst.edges.size()) +
          ", total weight: " + round2(mst.total_weight) + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct PathOptions {
  std::string file;
  int from = 0;
  int to = 0;
  bool json = false;
};

int run_shortest_path(const PathOptions& opt) {
  const std::string bytes = read_file(opt.file);
  const opskit::WeightedGraph g = opskit::io::parse_graph_file(bytes);
  const opskit::PathResult path = opskit::shortest_path(g, opt.from, opt.to);

  ResultReport report;
  report.task = "shortest-path";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["from"] = opt.from;
  report.result["to"] = opt.to;
  report.result["path"] = path.path;
  report.result["distance"] = path.distance;
  report.display["distance"] = round2(path.distance);

  std::string text = "shortest path " + std::to_string(opt.from) + " -> " +
                     std::to_string(opt.to) + "\n";
  text += "path: " + join_ids(path.path, " -> ") + "\n";
  text += "distance: " + round2(path.distance) + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct FlowOptions {
  std::string file;
  int source = 0;
  int sink = 0;
  bool directed = false;
  bool json = false;
};

int run_max_flow(const FlowOptions& opt) {
  const std::string bytes = read_file(opt.file);
  opskit::FlowNetwork net = opt.directed
                                ? opskit::io::parse_flow_network(bytes)
                                : opskit::flow_network_from_graph(opskit::io::parse_graph_file(bytes));
  const opskit::FlowResult flow = opskit::max_flow(net, opt.source, opt.sink);

  ResultReport report;
  report.task = "max-flow";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["source"] = opt.source;
  report.result["sink"] = opt.sink;
  report.result["directed"] = opt.directed;
  report.result["value"] = flow.value;
  report.result["min_cut"] = flow.min_cut;
  report.result["cut_capacity"] = flow.cut_capacity;
  report.display["value"] = round2(flow.value);

  std::string text = "max flow " + std::to_string(opt.source) + " -> " +
                     std::to_string(opt.sink) + "\n";
  text += "value: " + round2(flow.value) + "\n";
  text += "min cut (source side): " + join_ids(flow.min_cut, " ") + "\n";
  text += "cut capacity: " + round2(flow.cut_capacity) + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct KnapsackOptions {
  std::string file;
  int capacity = 0;
  bool json = false;
};

int run_knapsack(const KnapsackOptions& opt) {
  const std::string bytes = read_file(opt.file);
  std::vector<opskit::KnapsackItem> items;
  for (const auto& line : opskit::io::content_lines(bytes)) {
    const auto tokens = opskit::io::split_whitespace(line.text);
    if (tokens.size() != 2)
      opskit::io::parse_fail(opskit::Errc::ParseError, line.number, "expected `weight value`");
    const auto w = opskit::io::parse_integer(tokens[0]);
    const auto v = opskit::io::parse_double(tokens[1]);
    if (!w || *w < 0) opskit::io::parse_fail(opskit::Errc::ParseError, line.number,
                                             "weight must be an integer >= 0");
    if (!v || !(*v >= 0.0))
      opskit::io::parse_fail(opskit::Errc::ParseError, line.number, "value must be a decimal >= 0");
    items.push_back({static_cast<int>(*w), *v});
  }
  const opskit::KnapsackResult best = opskit::knapsack_01(items, opt.capacity);

  ResultReport report;
  report.task = "knapsack";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["capacity"] = opt.capacity;
  report.result["items"] = items.size();
  report.result["best_value"] = best.best_value;
  Json chosen = Json::array();
  int chosen_weight = 0;
  for (int idx : best.chosen) {
    chosen.push_back(idx + 1);  // 1-based for humans
    chosen_weight += items[idx].weight;
  }
  report.result["chosen"] = chosen;
  report.result["chosen_weight"] = chosen_weight;
  report.display["best_value"] = round2(best.best_value);

  std::string text = "knapsack, capacity " + std::to_string(opt.capacity) + "\n";
  text += "best value: " + round2(best.best_value) + "\n";
  text += "chosen items (1-based):";
  for (const auto& c : chosen) text += " " + std::to_string(c.get<int>());
  text += "\nchosen weight: " + std::to_string(chosen_weight) + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct ConcordanceOptions {
  std::string file;
  double alpha = 0.01;
  bool json = false;
};

int run_concordance(const ConcordanceOptions& opt) {
  const std::string bytes = read_file(opt.file);
  const opskit::stats::RankMatrix ranks = opskit::io::parse_rank_csv(bytes);
  const opskit::stats::ConcordanceResult r = opskit::stats::kendall_w(ranks, opt.alpha);

  ResultReport report;
  report.task = "concordance";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["experts"] = ranks.experts();
  report.result["objects"] = ranks.objects();
  report.result["rank_sums"] = r.rank_sums;
  report.result["s"] = r.s;
  report.result["w"] = r.w;
  report.result["chi_square"] = r.chi_square;
  report.result["df"] = r.df;
  report.result["alpha"] = r.alpha;
  report.result["critical"] = r.critical;
  Json warnings = Json::array();
  for (const auto& w : r.tie_warnings)
    warnings.push_back(Json{{"expert", w.expert}, {"duplicated", w.duplicated}, {"missing", w.missing}});
  report.result["tie_warnings"] = warnings;
  report.display["w"] = round2(r.w);
  report.display["chi_square"] = round2(r.chi_square);
  report.display["critical"] = round2(r.critical);
  report.verdicts.emplace_back("significant", r.significant);

  std::string text = "concordance over " + std::to_string(ranks.experts()) + " experts x " +
                     std::to_string(ranks.objects()) + " objects\n";
  text += "W = " + round2(r.w) + "\n";
  text += "chi-square = " + round2(r.chi_square) + " (df " + std::to_string(r.df) + ")\n";
  text += "critical at alpha " + opskit::io::format_number(r.alpha) + " = " + round2(r.critical) + "\n";
  text += std::string("verdict: ") + (r.significant ? "SIGNIFICANT" : "NOT SIGNIFICANT") + "\n";
  for (const auto& w : r.tie_warnings) {
    text += "warning: expert " + std::to_string(w.expert) + " is not a permutation (duplicate:";
    for (int d : w.duplicated) text += " " + std::to_string(d);
    text += "; missing:";
    for (int miss : w.missing) text += " " + std::to_string(miss);
    text += ")\n";
  }
  emit(report, text, opt.json);
  return 0;
}

struct AggregateOptions {
  std::string file;
  std::string kind = "auto";
  bool json = false;
};

int run_aggregate(const AggregateOptions& opt) {
  const std::string bytes = read_file(opt.file);

  opskit::stats::AggregateReport agg;
  std::string kind = opt.kind;
  if (kind == "auto") {
    try {
      agg = opskit::stats::aggregate_scores(opskit::io::parse_score_csv(bytes));
      kind = "scores";
    } catch (const opskit::Error& e) {
      if (e.code() != opskit::Errc::NonIntegerCell) throw;
      kind = "means";  // decimal cells: treat the file as pre-averaged means
    }
  } else if (kind == "scores") {
    agg = opskit::stats::aggregate_scores(opskit::io::parse_score_csv(bytes));
  }
  if (kind == "means") {
    const opskit::io::MeansCsv means = opskit::io::parse_means_csv(bytes);
    agg = opskit::stats::aggregate_means(means.names, means.means, means.weights);
  }

  ResultReport report;
  report.task = "aggregate";
  report.input_digest = opskit::io::fnv1a_digest(bytes);
  report.result["input_kind"] = kind;
  Json indicators = Json::array();
  for (size_t i = 0; i < agg.names.size(); ++i)
    indicators.push_back(Json{{"name", agg.names[i]},
                              {"mean", agg.indicator_means[i]},
                              {"weight", agg.weights[i]}});
  report.result["indicators"] = indicators;
  report.result["group_mean"] = agg.group_mean;
  report.display["group_mean"] = round2(agg.group_mean);

  std::string text = "aggregate of " + std::to_string(agg.names.size()) + " indicators (" + kind +
                     " input)\n";
  for (size_t i = 0; i < agg.names.size(); ++i)
    text += "  " + agg.names[i] + ": " + round2(agg.indicator_means[i]) + "\n";
  text += "group mean: " + round2(agg.group_mean) + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct FisherOptions {
  double p1 = 0.0, p2 = 0.0;
  int n1 = 0, n2 = 0;
  double alpha = 0.05;
  bool json = false;
};

int run_fisher(const FisherOptions& opt) {
  const opskit::stats::FisherResult r =
      opskit::stats::fisher_angular_test(opt.p1, opt.n1, opt.p2, opt.n2, opt.alpha);

  ResultReport report;
  report.task = "fisher";
  const std::string args = "p1=" + opskit::io::format_number(opt.p1) +
                           " n1=" + std::to_string(opt.n1) +
                           " p2=" + opskit::io::format_number(opt.p2) +
                           " n2=" + std::to_string(opt.n2) +
                           " alpha=" + opskit::io::format_number(opt.alpha);
  report.input_digest = opskit::io::fnv1a_digest(args);
  report.result["p1"] = r.p1;
  report.result["n1"] = r.n1;
  report.result["p2"] = r.p2;
  report.result["n2"] = r.n2;
  report.result["phi1"] = r.phi1;
  report.result["phi2"] = r.phi2;
  report.result["phi_emp"] = r.phi_emp;
  report.result["alpha"] = r.alpha;
  report.result["phi_crit"] = r.phi_crit;
  report.display["phi_emp"] = round2(r.phi_emp);
  report.display["phi_crit"] = round2(r.phi_crit);
  report.verdicts.emplace_back("significant", r.significant);

  std::string text = "fisher angular test\n";
  text += "phi1 = " + round2(r.phi1) + ", phi2 = " + round2(r.phi2) + "\n";
  text += "phi_emp = " + round2(r.phi_emp) + "\n";
  text += "critical at alpha " + opskit::io::format_number(r.alpha) + " = " + round2(r.phi_crit) + "\n";
  text += std::string("verdict: ") + (r.significant ? "SIGNIFICANT" : "NOT SIGNIFICANT") + "\n";
  emit(report, text, opt.json);
  return 0;
}

struct Chi2Options {
  int df = 1;
  double alpha = 0.01;
  bool json = false;
};

int run_chi2_critical(const Chi2Options& opt) {
  const double critical = opskit::stats::chi_square_critical(opt.df, opt.alpha);

  ResultReport report;
  report.task = "chi2-critical";
  const std::string args =
      "df=" + std::to_string(opt.df) + " alpha=" + opskit::io::format_number(opt.alpha);
  report.input_digest = opskit::io::fnv1a_digest(args);
  report.result["df"] = opt.df;
  report.result["alpha"] = opt.alpha;
  report.result["critical"] = critical;
  report.display["critical"] = round2(critical);

  char full[32];
  std::snprintf(full, sizeof full, "%.4f", critical);
  std::string text = "chi-square critical value, df " + std::to_string(opt.df) + ", alpha " +
                     opskit::io::format_number(opt.alpha) + "\n";
  text += std::string("critical = ") + full + "\n";
  emit(report, text, opt.json);
  return 0;
}

void add_format_flag(CLI::App* cmd, bool& json) {
  cmd->add_flag_callback("--json", [&json]() { json = true; },
                         "Shorthand for --format json");
  cmd->add_option_function<std::string>(
         "--format",
         [&json](const std::string& value) { json = (value == "json"); },
         "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
}

int run(int argc, char** argv) {
  CLI::App app{"opskit: graph optimization solvers and expert-panel statistics"};
  app.require_subcommand(1);

  MstOptions mst;
  auto* mst_cmd = app.add_subcommand(
      "mst", std::string("Minimum spanning tree of an undirected graph. ") + kGraphFormatHelp);
  mst_cmd->add_option("file", mst.file, "Graph file")->required();
  mst_cmd->add_option("--algo", mst.algo, "Algorithm")
      ->check(CLI::IsMember({"prim", "kruskal", "brute"}))
      ->capture_default_str();
  mst_cmd->add_option("--start", mst.start, "Start vertex (prim)")->capture_default_str();
  add_format_flag(mst_cmd, mst.json);

  PathOptions path;
  auto* path_cmd = app.add_subcommand(
      "shortest-path", std::string("Cheapest route between two vertices. ") + kGraphFormatHelp);
  path_cmd->add_option("file", path.file, "Graph file")->required();
  path_cmd->add_option("--from", path.from, "Start vertex")->required();
  path_cmd->add_option("--to", path.to, "Target vertex")->required();
  add_format_flag(path_cmd, path.json);

  FlowOptions flow;
  auto* flow_cmd = app.add_subcommand(
      "max-flow",
      std::string("Maximum flow and a minimum cut. ") + kGraphFormatHelp +
          " By default each edge becomes an arc pair; with --directed each line is one arc "
          "`from to capacity` and parallel arcs are allowed.");
  flow_cmd->add_option("file", flow.file, "Network file")->required();
  flow_cmd->add_option("--source", flow.source, "Source vertex")->required();
  flow_cmd->add_option("--sink", flow.sink, "Sink vertex")->required();
  flow_cmd->add_flag("--directed", flow.directed, "Treat lines as directed arcs");
  add_format_flag(flow_cmd, flow.json);

  KnapsackOptions knapsack;
  auto* knapsack_cmd = app.add_subcommand(
      "knapsack",
      "0/1 knapsack, exact. Items file: one `weight value` pair per line (integer weight >= 0, "
      "decimal value >= 0); `#` starts a comment line.");
  knapsack_cmd->add_option("file", knapsack.file, "Items file")->required();
  knapsack_cmd->add_option("--capacity", knapsack.capacity, "Knapsack capacity (integer >= 0)")
      ->required();
  add_format_flag(knapsack_cmd, knapsack.json);

  ConcordanceOptions concordance;
  auto* concordance_cmd = app.add_subcommand(
      "concordance",
      "Kendall's W with the chi-square significance test. Rank CSV: header row of object ids "
      "1..n, then one comma-separated row of integer ranks per expert.");
  concordance_cmd->add_option("file", concordance.file, "Rank CSV")->required();
  concordance_cmd->add_option("--alpha", concordance.alpha, "Significance level")
      ->capture_default_str();
  add_format_flag(concordance_cmd, concordance.json);

  AggregateOptions aggregate;
  auto* aggregate_cmd = app.add_subcommand(
      "aggregate",
      "Weighted mean of indicator scores. Score CSV: header row of indicator names, optional "
      "`weights,...` row, then one row of 0..3 integer scores per expert. A means CSV carries "
      "exactly one row of decimal per-indicator means instead; `auto` picks by cell type.");
  aggregate_cmd->add_option("file", aggregate.file, "Score or means CSV")->required();
  aggregate_cmd->add_option("--kind", aggregate.kind, "Input kind")
      ->check(CLI::IsMember({"auto", "scores", "means"}))
      ->capture_default_str();
  add_format_flag(aggregate_cmd, aggregate.json);

  FisherOptions fisher;
  auto* fisher_cmd = app.add_subcommand(
      "fisher", "Two-proportion angular test: phi = 2*asin(sqrt(p)), one-sided normal critical.");
  fisher_cmd->add_option("--p1", fisher.p1, "First proportion, in [0, 1]")->required();
  fisher_cmd->add_option("--n1", fisher.n1, "First sample size")->required();
  fisher_cmd->add_option("--p2", fisher.p2, "Second proportion, in [0, 1]")->required();
  fisher_cmd->add_option("--n2", fisher.n2, "Second sample size")->required();
  fisher_cmd->add_option("--alpha", fisher.alpha, "Significance level")->capture_default_str();
  add_format_flag(fisher_cmd, fisher.json);

  Chi2Options chi2;
  auto* chi2_cmd = app.add_subcommand(
      "chi2-critical", "Upper critical value of the chi-square distribution.");
  chi2_cmd->add_option("--df", chi2.df, "Degrees of freedom (>= 1)")->required();
  chi2_cmd->add_option("--alpha", chi2.alpha, "Upper-tail probability")->capture_default_str();
  add_format_flag(chi2_cmd, chi2.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mst_cmd->parsed()) return run_mst(mst);
    if (path_cmd->parsed()) return run_shortest_path(path);
    if (flow_cmd->parsed()) return run_max_flow(flow);
    if (knapsack_cmd->parsed()) return run_knapsack(knapsack);
    if (concordance_cmd->parsed()) return run_concordance(concordance);
    if (aggregate_cmd->parsed()) return run_aggregate(aggregate);
    if (fisher_cmd->parsed()) return run_fisher(fisher);
    if (chi2_cmd->parsed()) return run_chi2_critical(chi2);
  } catch (const opskit::Error& e) {
    std::cerr << "error: " << opskit::errc_name(e.code()) << ": " << e.what() << "\n";
    return opskit::is_domain_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
