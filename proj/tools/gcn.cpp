// gcn: structural-sparsity toolkit front door.
//
// Subcommands: metrics, oracle, greedy-order, order, verify-order, scatter,
// splitter, augment, verify-claims, gen, gen-corpus, suite. Every JSON output
// is validated against the shipped schemas before it is written; identical
// flags and seeds produce byte-identical artifacts.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gcn/acceptance.hpp"
#include "gcn/exact.hpp"
#include "gcn/generators.hpp"
#include "gcn/json_io.hpp"
#include "gcn/json_schema.hpp"
#include "gcn/oracles.hpp"
#include "gcn/reach.hpp"
#include "gcn/scatter.hpp"
#include "gcn/schemas.hpp"
#include "gcn/splitter.hpp"
#include "gcn/successor.hpp"
#include "gcn/uniform.hpp"

namespace {

using gcn::Graph;
using gcn::LinearOrder;
using nlohmann::json;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  gcn::ParsedGraph parsed = gcn::parse_graph(in);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  if (parsed.remapped)
    std::cerr << "note: " << path << ": vertex ids were remapped to 0.."
              << parsed.graph.vertex_count() - 1 << "\n";
  return parsed.graph;
}

LinearOrder load_order(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open order file: " + path);
  return gcn::parse_order(in, n);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Validate against the named shipped schema, then write (or print).
void emit_json(const json& j, const std::string& schema_name, const std::string& out_path) {
  std::string error;
  if (!gcn::validate_schema(gcn::schema_by_name(schema_name), j, &error))
    throw std::runtime_error("internal error: output violates the '" + schema_name +
                             "' schema at " + error);
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

int wcol_under(const Graph& g, const LinearOrder& L, int r) {
  int best = 0;
  for (const auto& set : gcn::all_wreach(g, L, r))
    best = std::max(best, static_cast<int>(set.size()));
  return best;
}

// Corpus description: which generators to run, at which sizes, from which
// seed. Radii and the enumeration cap ride along so one config captures a
// whole experiment; every generated file records its seed in a comment.
struct ExperimentConfig {
  std::vector<std::string> families{"path", "cycle", "complete", "star",
                                    "grid", "tree",  "planar",   "gnp"};
  std::vector<int> sizes{16, 64, 200};
  uint32_t seed = 1;
  std::vector<int> radii{1, 2, 3};
  int enumeration_cap = 8;
  std::string out_dir;
  unsigned jobs = 1;

  void validate() const {
    for (int r : radii)
      if (r < 0) throw std::invalid_argument("radii must be >= 0");
    if (enumeration_cap > 9) throw std::invalid_argument("enumeration cap must be <= 9");
    if (out_dir.empty()) throw std::invalid_argument("output directory required");
  }
};

Graph generate_family(const std::string& family, int n, uint32_t seed) {
  if (family == "path") return gcn::path_graph(n);
  if (family == "cycle") return gcn::cycle_graph(std::max(n, 3));
  if (family == "complete") return gcn::complete_graph(std::min(n, 12));
  if (family == "star") return gcn::star_graph(std::max(n - 1, 1));
  if (family == "grid") {
    int side = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
    return gcn::grid_graph(side, side);
  }
  if (family == "tree") return gcn::random_tree(n, seed);
  if (family == "planar") return gcn::random_planar(n, seed);
  if (family == "gnp") return gcn::gnp(n, 2.5 / std::max(n - 1, 1), seed);
  throw std::invalid_argument("unknown family: " + family);
}

std::vector<std::string> generate_corpus(const ExperimentConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.out_dir);
  std::vector<std::string> paths;
  for (const std::string& family : config.families)
    for (int n : config.sizes) {
      Graph g = generate_family(family, n, config.seed);
      std::string name = family + "-" + std::to_string(n) + "-s" +
                         std::to_string(config.seed) + ".el";
      std::string path = config.out_dir + "/" + name;
      std::ostringstream text;
      text << "# family=" << family << " n=" << n << " seed=" << config.seed << "\n"
           << gcn::serialise_graph(g);
      write_text(path, text.str());
      paths.push_back(path);
    }
  return paths;
}

std::string escape_md(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::string report_markdown(const std::vector<gcn::acceptance::CriterionResult>& results) {
  std::ostringstream md;
  md << "# Acceptance report\n\n";
  md << "| # | Criterion | Result | Time (s) | Details |\n";
  md << "|---|-----------|--------|----------|---------|\n";
  bool all = true;
  for (const auto& res : results) {
    all = all && res.pass;
    md.setf(std::ios::fixed);
    md.precision(1);
    md << "| " << res.id << " | " << escape_md(res.name) << " | "
       << (res.pass ? "PASS" : "FAIL") << " | " << res.seconds << " | "
       << escape_md(res.details) << " |\n";
  }
  md << "\nOverall: " << (all ? "PASS" : "FAIL") << "\n";
  return md.str();
}

json report_json(const std::vector<gcn::acceptance::CriterionResult>& results) {
  json criteria = json::array();
  bool all = true;
  for (const auto& res : results) {
    all = all && res.pass;
    criteria.push_back({{"id", res.id},
                        {"name", res.name},
                        {"pass", res.pass},
                        {"details", res.details},
                        {"seconds", res.seconds}});
  }
  return json{{"criteria", criteria}, {"all_pass", all}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural-sparsity toolkit: colouring numbers, scattered sets, "
               "splitter games, uniform orders, successor structures"};
  app.require_subcommand(1);

  // ---- metrics ----
  std::string m_in, m_order, m_out;
  int m_r = 1;
  auto* metrics = app.add_subcommand("metrics", "per-vertex reachability profile under an order");
  metrics->add_option("--in", m_in, "graph edge-list file")->required();
  metrics->add_option("--order", m_order, "order file (default: greedy order for this radius)");
  metrics->add_option("--r", m_r, "radius")->required()->check(CLI::NonNegativeNumber);
  metrics->add_option("--out", m_out, "output JSON path (default: stdout)");

  // ---- oracle ----
  std::string o_in, o_metric = "wcol", o_out;
  int o_r = 1, o_cap = 8;
  auto* oracle = app.add_subcommand("oracle", "exact optimum over all orders (small n)");
  oracle->add_option("--in", o_in, "graph edge-list file")->required();
  oracle->add_option("--r", o_r, "radius")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--metric", o_metric, "wcol | col | adm")
      ->check(CLI::IsMember({"wcol", "col", "adm"}));
  oracle->add_option("--cap", o_cap, "enumeration cap (n must not exceed it, max 9)");
  oracle->add_option("--out", o_out, "output JSON path (default: stdout)");

  // ---- greedy-order ----
  std::string g_in, g_out;
  int g_r = 1;
  auto* greedy = app.add_subcommand("greedy-order", "distance-r degeneracy order");
  greedy->add_option("--in", g_in, "graph edge-list file")->required();
  greedy->add_option("--r", g_r, "radius")->check(CLI::PositiveNumber);
  greedy->add_option("--out", g_out, "order output path (default: stdout)");

  // ---- order ----
  std::string u_in, u_variant = "plain", u_out, u_order_out;
  auto* order = app.add_subcommand("order", "uniform-order construction with trace");
  order->add_option("--in", u_in, "graph edge-list file")->required();
  order->add_option("--variant", u_variant, "plain | successor")
      ->check(CLI::IsMember({"plain", "successor"}));
  order->add_option("--out", u_out, "order+trace JSON path (default: stdout)");
  order->add_option("--order-out", u_order_out, "also write the order in order format");

  // ---- verify-order ----
  std::string v_in, v_trace;
  auto* verify = app.add_subcommand("verify-order", "replay and check a construction trace");
  verify->add_option("--in", v_in, "graph edge-list file")->required();
  verify->add_option("--trace", v_trace, "trace JSON (as written by 'order')")->required();

  // ---- scatter ----
  std::string s_in, s_order, s_out;
  int s_r = 1, s_m = -1;
  auto* scatter = app.add_subcommand("scatter", "scattered-set extraction with audit");
  scatter->add_option("--in", s_in, "graph edge-list file")->required();
  scatter->add_option("--r", s_r, "radius")->required()->check(CLI::PositiveNumber);
  scatter->add_option("--m", s_m, "target exponent (default: largest feasible)");
  scatter->add_option("--order", s_order, "order file (default: greedy order for this radius)");
  scatter->add_option("--out", s_out, "output JSON path (default: stdout)");

  // ---- splitter ----
  std::string p_in, p_order, p_connector = "max-ball", p_out;
  int p_r = 1, p_cap = -1;
  uint32_t p_seed = 1;
  auto* splitter = app.add_subcommand("splitter", "splitter game vs a connector strategy");
  splitter->add_option("--in", p_in, "graph edge-list file")->required();
  splitter->add_option("--r", p_r, "radius")->required()->check(CLI::PositiveNumber);
  splitter->add_option("--order", p_order,
                       "order file for the splitter (default: greedy order at 2r)");
  splitter->add_option("--connector", p_connector, "max-ball | random | first")
      ->check(CLI::IsMember({"max-ball", "random", "first"}));
  splitter->add_option("--seed", p_seed, "seed for the random connector");
  splitter->add_option("--cap", p_cap, "round cap (default: vertex count)");
  splitter->add_option("--out", p_out, "transcript JSON path (default: stdout)");

  // ---- augment ----
  std::string a_in, a_out;
  int a_r = 2;
  auto* augment = app.add_subcommand("augment", "successor structure with spanning tree");
  augment->add_option("--in", a_in, "graph edge-list file")->required();
  augment->add_option("--r", a_r, "radius for the claims report")->check(CLI::PositiveNumber);
  augment->add_option("--out", a_out, "output directory")->required();

  // ---- verify-claims ----
  std::string c_in, c_out;
  int c_r = 2;
  auto* claims = app.add_subcommand("verify-claims", "spanning-tree and budget checks");
  claims->add_option("--in", c_in, "graph edge-list file")->required();
  claims->add_option("--r", c_r, "radius")->check(CLI::PositiveNumber);
  claims->add_option("--out", c_out, "output JSON path (default: stdout)");

  // ---- gen ----
  std::string f_family, f_out;
  int f_n = 16, f_rows = 0, f_cols = 0, f_leaves = 0;
  double f_p = 0.5;
  uint32_t f_seed = 1;
  auto* gen = app.add_subcommand("gen", "generate one graph deterministically");
  gen->add_option("--family", f_family,
                  "path | cycle | complete | star | grid | tree | planar | gnp")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "grid", "tree", "planar",
                             "gnp"}));
  gen->add_option("--n", f_n, "vertex count");
  gen->add_option("--rows", f_rows, "grid rows");
  gen->add_option("--cols", f_cols, "grid cols");
  gen->add_option("--leaves", f_leaves, "star leaves");
  gen->add_option("--p", f_p, "edge probability for gnp");
  gen->add_option("--seed", f_seed, "generator seed");
  gen->add_option("--out", f_out, "output edge-list path (default: stdout)");

  // ---- gen-corpus ----
  ExperimentConfig corpus_config;
  auto* gen_corpus = app.add_subcommand("gen-corpus", "generate the full corpus from one config");
  gen_corpus->add_option("--out", corpus_config.out_dir, "output directory")->required();
  gen_corpus->add_option("--seed", corpus_config.seed, "base seed");
  gen_corpus->add_option("--sizes", corpus_config.sizes, "instance sizes");
  gen_corpus->add_option("--families", corpus_config.families, "generator families");

  // ---- suite ----
  std::string t_out = "suite-out";
  unsigned t_jobs = gcn::acceptance::default_jobs();
  auto* suite = app.add_subcommand("suite", "run the acceptance suite, emit reports");
  suite->add_option("--out", t_out, "report directory");
  suite->add_option("--jobs", t_jobs, "parallel jobs (default: GCN_JOBS or hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (metrics->parsed()) {
      Graph g = load_graph(m_in);
      LinearOrder L = m_order.empty() ? gcn::greedy_order(g, std::max(m_r, 1))
                                      : load_order(m_order, g.vertex_count());
      emit_json(gcn::profile_to_json(gcn::metric_profile(g, L, m_r)), "profile", m_out);
      return 0;
    }

    if (oracle->parsed()) {
      Graph g = load_graph(o_in);
      gcn::ExactResult res = gcn::exact_optimum(g, o_r, gcn::metric_from_name(o_metric), o_cap);
      emit_json(gcn::exact_to_json(res, gcn::metric_from_name(o_metric), o_r), "oracle", o_out);
      return 0;
    }

    if (greedy->parsed()) {
      Graph g = load_graph(g_in);
      std::string text = gcn::serialise_order(gcn::greedy_order(g, g_r));
      if (g_out.empty())
        std::cout << text;
      else
        write_text(g_out, text);
      return 0;
    }

    if (order->parsed()) {
      Graph g = load_graph(u_in);
      auto built = gcn::build_uniform_order(g, gcn::variant_from_name(u_variant));
      json out{{"order", built.order.sequence()}, {"trace", gcn::trace_to_json(built.trace)}};
      emit_json(out, "trace", u_out);
      if (!u_order_out.empty()) write_text(u_order_out, gcn::serialise_order(built.order));
      return 0;
    }

    if (verify->parsed()) {
      Graph g = load_graph(v_in);
      std::ifstream in(v_trace);
      if (!in) throw std::runtime_error("cannot open trace file: " + v_trace);
      json j = json::parse(in);
      gcn::ConstructionTrace trace =
          gcn::trace_from_json(j.contains("trace") ? j.at("trace") : j);
      gcn::InvariantReport rep = gcn::verify_invariant(g, trace);
      if (j.contains("order")) {
        std::vector<int> seq;
        for (const auto& f : trace.fragments)
          seq.insert(seq.end(), f.vertices.begin(), f.vertices.end());
        if (j.at("order").get<std::vector<int>>() != seq) {
          std::cout << "FAIL: order does not match the trace's fragment concatenation\n";
          return 1;
        }
      }
      std::cout << (rep.ok ? "OK" : "FAIL: " + rep.violation) << "\n";
      return rep.ok ? 0 : 1;
    }

    if (scatter->parsed()) {
      Graph g = load_graph(s_in);
      LinearOrder L = s_order.empty() ? gcn::greedy_order(g, s_r)
                                      : load_order(s_order, g.vertex_count());
      gcn::VertexSet all(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
      int m = s_m;
      if (m < 0) {
        int c = 0;
        for (const auto& set : gcn::all_wreach(g, L, s_r))
          c = std::max(c, static_cast<int>(set.size()));
        m = -1;
        while (static_cast<long long>(c + 1) << (m + 1) <= g.vertex_count()) ++m;
        if (m < 0)
          throw std::runtime_error("no feasible m: measured c = " + std::to_string(c) +
                                   " needs (c+1) <= n");
      }
      gcn::ScatterResult res = gcn::scatter_extract(g, L, s_r, all, m);
      gcn::ScatterAudit audit = gcn::audit_scatter(g, L, res);
      emit_json(gcn::scatter_to_json(res, audit), "scatter", s_out);
      if (!audit.ok) std::cerr << "audit failed: " << audit.violation << "\n";
      return audit.ok ? 0 : 1;
    }

    if (splitter->parsed()) {
      Graph g = load_graph(p_in);
      LinearOrder L = p_order.empty() ? gcn::greedy_order(g, 2 * p_r)
                                      : load_order(p_order, g.vertex_count());
      gcn::ConnectorStrategy connector =
          p_connector == "max-ball" ? gcn::max_ball_connector(p_r)
          : p_connector == "random" ? gcn::random_connector(p_seed)
                                    : gcn::first_connector();
      gcn::GameTranscript t =
          gcn::play_game(g, p_r, gcn::wcol_splitter(L), connector, p_cap);
      std::string order_label = p_order.empty() ? "greedy-order@2r" : p_order;
      emit_json(gcn::transcript_to_json(t, order_label), "transcript", p_out);
      std::string why;
      bool valid = gcn::replay_game(g, t, &why);
      if (!valid) std::cerr << "replay failed: " << why << "\n";
      int bound = wcol_under(g, L, 2 * p_r);
      std::cerr << "rounds=" << t.rounds_used << " wcol_2r=" << bound << "\n";
      return (valid && t.splitter_won) ? 0 : 1;
    }

    if (augment->parsed()) {
      Graph g = load_graph(a_in);
      gcn::AugmentedGraph aug = gcn::build_augmented(g);
      std::filesystem::create_directories(a_out);
      write_text(a_out + "/h.el", gcn::serialise_graph(aug.h));
      std::ostringstream added;
      added << "# edges of H(G) absent from G (chains and bridges)\n";
      added << "p " << aug.h.vertex_count() << " " << aug.added_edges.size() << "\n";
      for (auto [u, v] : aug.added_edges)
        added << std::min(u, v) << " " << std::max(u, v) << "\n";
      write_text(a_out + "/added.el", added.str());
      write_text(a_out + "/order.txt", gcn::serialise_order(aug.order));
      {
        json out{{"order", aug.order.sequence()}, {"trace", gcn::trace_to_json(aug.trace)}};
        std::string err;
        if (!gcn::validate_schema(gcn::schema_by_name("trace"), out, &err))
          throw std::runtime_error("internal error: trace schema: " + err);
        write_text(a_out + "/trace.json", out.dump(2) + "\n");
      }
      emit_json(gcn::spanning_to_json(gcn::extract_spanning_tree(aug)), "spanning",
                a_out + "/spanning.json");
      emit_json(gcn::charges_to_json(aug), "charges", a_out + "/charges.json");
      gcn::ClaimsReport rep = gcn::verify_claims(aug, a_r);
      emit_json(gcn::claims_to_json(rep), "claims", a_out + "/claims.json");
      if (!rep.ok) std::cerr << "claims failed: " << rep.violation << "\n";
      return rep.ok ? 0 : 1;
    }

    if (claims->parsed()) {
      Graph g = load_graph(c_in);
      gcn::AugmentedGraph aug = gcn::build_augmented(g);
      gcn::ClaimsReport rep = gcn::verify_claims(aug, c_r);
      emit_json(gcn::claims_to_json(rep), "claims", c_out);
      if (!rep.ok) std::cerr << "claims failed: " << rep.violation << "\n";
      return rep.ok ? 0 : 1;
    }

    if (gen->parsed()) {
      Graph g = [&] {
        if (f_family == "grid" && f_rows > 0 && f_cols > 0)
          return gcn::grid_graph(f_rows, f_cols);
        if (f_family == "star" && f_leaves > 0) return gcn::star_graph(f_leaves);
        if (f_family == "gnp") return gcn::gnp(f_n, f_p, f_seed);
        return generate_family(f_family, f_n, f_seed);
      }();
      std::ostringstream text;
      text << "# family=" << f_family << " seed=" << f_seed << "\n" << gcn::serialise_graph(g);
      if (f_out.empty())
        std::cout << text.str();
      else
        write_text(f_out, text.str());
      return 0;
    }

    if (gen_corpus->parsed()) {
      auto paths = generate_corpus(corpus_config);
      for (const auto& p : paths) std::cout << p << "\n";
      return 0;
    }

    if (suite->parsed()) {
      auto results = gcn::acceptance::run_all(t_jobs);
      std::string md = report_markdown(results);
      std::filesystem::create_directories(t_out);
      write_text(t_out + "/report.md", md);
      emit_json(report_json(results), "report", t_out + "/report.json");
      std::cout << md;
      bool all = true;
      for (const auto& res : results) all = all && res.pass;
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
