#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "gcn/exact.hpp"
#include "gcn/generators.hpp"
#include "gcn/oracles.hpp"
#include "gcn/reach.hpp"
#include "gcn/scatter.hpp"
#include "gcn/splitter.hpp"
#include "gcn/successor.hpp"
#include "gcn/uniform.hpp"

namespace gcn::acceptance {

// Pinned tolerances and sample sizes. Changing any of these changes what the
// suite certifies; they are deliberately kept in one place.
inline constexpr int kChainGraphs = 100;        // criterion 1 sample size
inline constexpr int kChainSeedBase = 1000;     // criterion 1 seed base
inline constexpr int kOracleOrders = 50;        // criterion 2 orders per graph
inline constexpr int kScatterRadii[] = {1, 2, 3};
inline constexpr int kGameRadii[] = {1, 2};
inline constexpr int kRandomConnectorSeeds = 10;
inline constexpr int kUniformityMaxRadius = 8;
inline constexpr int kTripwireFactor = 3;       // criterion 6 regression tripwire
inline constexpr int kClaimGraphs = 100;        // criterion 7 sample size
inline constexpr double kBuildTimeLimit = 60.0; // criterion 8 wall-clock bound, seconds
inline constexpr double kSlopeLimit = 5.5;      // criterion 8 log-log growth bound

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct CorpusGraph {
  std::string name;
  Graph graph;
};

// Stars, random trees, grids up to 6x6 and stacked planar triangulations up
// to n = 200: the shared property-testing corpus.
inline std::vector<CorpusGraph> property_corpus() {
  std::vector<CorpusGraph> corpus;
  corpus.push_back({"star-5", star_graph(5)});
  corpus.push_back({"star-12", star_graph(12)});
  corpus.push_back({"star-50", star_graph(50)});
  corpus.push_back({"tree-30", random_tree(30, 1)});
  corpus.push_back({"tree-75", random_tree(75, 2)});
  corpus.push_back({"tree-150", random_tree(150, 3)});
  corpus.push_back({"tree-200", random_tree(200, 4)});
  for (int k = 2; k <= 6; ++k)
    corpus.push_back({"grid-" + std::to_string(k) + "x" + std::to_string(k),
                      grid_graph(k, k)});
  corpus.push_back({"grid-3x5", grid_graph(3, 5)});
  corpus.push_back({"planar-50", random_planar(50, 7)});
  corpus.push_back({"planar-120", random_planar(120, 8)});
  corpus.push_back({"planar-200", random_planar(200, 9)});
  return corpus;
}

inline std::vector<CorpusGraph> small_named_graphs() {
  return {{"p2", path_graph(2)},      {"p4", path_graph(4)},
          {"p5", path_graph(5)},      {"c4", cycle_graph(4)},
          {"c5", cycle_graph(5)},     {"c6", cycle_graph(6)},
          {"k3", complete_graph(3)},  {"k4", complete_graph(4)},
          {"k5", complete_graph(5)},  {"star-4", star_graph(4)},
          {"grid-2x3", grid_graph(2, 3)}};
}

// The criterion-1/2 sample: seeded G(n, 1/2) over n in 4..7.
inline std::vector<CorpusGraph> chain_sample() {
  std::vector<CorpusGraph> sample;
  for (int i = 0; i < kChainGraphs; ++i) {
    int n = 4 + i % 4;
    sample.push_back({"gnp-" + std::to_string(n) + "-s" + std::to_string(i),
                      gnp(n, 0.5, static_cast<uint32_t>(kChainSeedBase + i))});
  }
  return sample;
}

namespace detail {

inline long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1LL << 56)) return 1LL << 60;  // saturate, avoids overflow
    out *= base;
  }
  return out;
}

template <typename Item, typename Fn>
void parallel_for(const std::vector<Item>& items, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || items.size() <= 1) {
    for (size_t i = 0; i < items.size(); ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(items.size()));
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

template <typename Fn>
CriterionResult timed(int id, const std::string& name, Fn&& body) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(res);
  } catch (const std::exception& e) {
    res.pass = false;
    res.details = std::string("exception: ") + e.what();
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail

// Criterion 1: exact optima satisfy adm_r <= col_r <= wcol_r <= adm_r^r.
inline CriterionResult criterion_1(unsigned jobs = 1) {
  return detail::timed(1, "inequality chain on exact optima", [&](CriterionResult& res) {
    auto sample = chain_sample();
    std::vector<std::string> bad(sample.size());
    detail::parallel_for(sample, jobs, [&](size_t i) {
      const auto& [name, g] = sample[i];
      for (int r : {1, 2, 3}) {
        int adm = exact_optimum(g, r, Metric::adm, 7).value;
        int col = exact_optimum(g, r, Metric::col, 7).value;
        int wcol = exact_optimum(g, r, Metric::wcol, 7).value;
        if (!(adm <= col && col <= wcol &&
              static_cast<long long>(wcol) <= detail::ipow(adm, r))) {
          bad[i] = name + " r=" + std::to_string(r) + ": adm=" + std::to_string(adm) +
                   " col=" + std::to_string(col) + " wcol=" + std::to_string(wcol);
          return;
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(sample.size()) + " graphs (n 4..7), r in {1,2,3}, " +
                  std::to_string(violations) + " violations" +
                  (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 2: flow-based admissibility versus brute-force path enumeration.
inline CriterionResult criterion_2(unsigned jobs = 1) {
  return detail::timed(2, "admissibility flow vs enumeration", [&](CriterionResult& res) {
    auto sample = chain_sample();
    for (auto& g : small_named_graphs())
      if (g.graph.vertex_count() <= 7) sample.push_back(g);
    std::vector<std::string> bad(sample.size());
    std::atomic<long long> checks{0};
    detail::parallel_for(sample, jobs, [&](size_t i) {
      const auto& [name, g] = sample[i];
      std::mt19937 rng(17 + static_cast<uint32_t>(i));
      for (int k = 0; k < kOracleOrders && bad[i].empty(); ++k) {
        LinearOrder L = random_order(g.vertex_count(), rng);
        for (int v = 0; v < g.vertex_count() && bad[i].empty(); ++v) {
          for (int r : {1, 2, 3}) {
            AdmBounds got = vertex_admissibility(g, L, v, r);
            int want = oracle_adm(g, L, v, r);
            ++checks;
            bool ok = r <= 2 ? (got.exact && got.lower == want && got.upper == want)
                             : (got.lower <= want && want <= got.upper);
            if (!ok) {
              bad[i] = name + " v=" + std::to_string(v) + " r=" + std::to_string(r) +
                       ": flow [" + std::to_string(got.lower) + "," +
                       std::to_string(got.upper) + "] vs enumeration " +
                       std::to_string(want);
              break;
            }
          }
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(sample.size()) + " graphs x " +
                  std::to_string(kOracleOrders) + " orders, " +
                  std::to_string(checks.load()) + " vertex checks, " +
                  std::to_string(violations) + " mismatches" +
                  (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 3: scattered-set extraction honours every audited guarantee.
inline CriterionResult criterion_3(unsigned jobs = 1) {
  return detail::timed(3, "scattered-set extraction guarantees", [&](CriterionResult& res) {
    auto corpus = property_corpus();
    std::vector<std::string> bad(corpus.size());
    std::atomic<int> runs{0};
    detail::parallel_for(corpus, jobs, [&](size_t i) {
      const auto& [name, g] = corpus[i];
      int n = g.vertex_count();
      VertexSet all(n);
      for (int v = 0; v < n; ++v) all[v] = v;
      for (int r : kScatterRadii) {
        if (!bad[i].empty()) return;
        LinearOrder L = greedy_order(g, r);
        auto wr = all_wreach(g, L, r);
        int c = 0;
        for (const auto& set : wr) c = std::max(c, static_cast<int>(set.size()));
        for (int m = 0; static_cast<long long>(c + 1) << m <= n; ++m) {
          ScatterResult out = scatter_extract(g, L, r, all, m);
          ScatterAudit audit = audit_scatter(g, L, out);
          ++runs;
          if (!audit.ok) {
            bad[i] = name + " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                     ": " + audit.violation;
            return;
          }
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(corpus.size()) + " graphs, " + std::to_string(runs.load()) +
                  " extractions audited, " + std::to_string(violations) + " violations" +
                  (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 4: the order-guided splitter beats every connector within
// wcol_{2r}(G, L) rounds, transcripts replay-validated.
inline CriterionResult criterion_4(unsigned jobs = 1) {
  return detail::timed(4, "splitter game within wcol_2r rounds", [&](CriterionResult& res) {
    auto corpus = property_corpus();
    std::vector<std::string> bad(corpus.size());
    std::atomic<int> games{0};
    detail::parallel_for(corpus, jobs, [&](size_t i) {
      const auto& [name, g] = corpus[i];
      for (int r : kGameRadii) {
        if (!bad[i].empty()) return;
        LinearOrder L = greedy_order(g, 2 * r);
        auto wr = all_wreach(g, L, 2 * r);
        int bound = 0;
        for (const auto& set : wr) bound = std::max(bound, static_cast<int>(set.size()));
        std::vector<std::pair<std::string, ConnectorStrategy>> connectors;
        connectors.emplace_back("max-ball", max_ball_connector(r));
        connectors.emplace_back("first", first_connector());
        for (int s = 1; s <= kRandomConnectorSeeds; ++s)
          connectors.emplace_back("random-" + std::to_string(s), random_connector(s));
        for (auto& [cname, connector] : connectors) {
          GameTranscript t = play_game(g, r, wcol_splitter(L), connector);
          ++games;
          std::string why;
          if (!t.splitter_won || t.rounds_used > bound || !replay_game(g, t, &why)) {
            bad[i] = name + " r=" + std::to_string(r) + " vs " + cname + ": rounds=" +
                     std::to_string(t.rounds_used) + " bound=" + std::to_string(bound) +
                     (t.splitter_won ? "" : " (splitter lost)") +
                     (why.empty() ? "" : " replay: " + why);
            return;
          }
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(corpus.size()) + " graphs x r in {1,2} x " +
                  std::to_string(2 + kRandomConnectorSeeds) + " connectors, " +
                  std::to_string(games.load()) + " games, " + std::to_string(violations) +
                  " violations" + (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 5: construction invariants hold on every corpus graph.
inline CriterionResult criterion_5(unsigned jobs = 1) {
  return detail::timed(5, "construction invariants", [&](CriterionResult& res) {
    auto corpus = property_corpus();
    for (auto& g : small_named_graphs()) corpus.push_back(g);
    corpus.push_back({"two-k2", disjoint_union(complete_graph(2), complete_graph(2))});
    corpus.push_back({"k2-plus-tree", disjoint_union(complete_graph(2), random_tree(9, 5))});
    std::vector<std::string> bad(corpus.size());
    std::atomic<int> checked{0};
    detail::parallel_for(corpus, jobs, [&](size_t i) {
      const auto& [name, g] = corpus[i];
      for (OrderVariant variant : {OrderVariant::plain, OrderVariant::successor}) {
        if (variant == OrderVariant::successor && connected_components(g).size() > 1)
          continue;
        auto built = build_uniform_order(g, variant);
        InvariantReport rep = verify_invariant(g, built.trace);
        ++checked;
        if (!rep.ok) {
          bad[i] = name + " (" +
                   std::string(variant == OrderVariant::plain ? "plain" : "successor") +
                   "): " + rep.violation;
          return;
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(corpus.size()) + " graphs, " + std::to_string(checked.load()) +
                  " builds verified step-by-step, " + std::to_string(violations) +
                  " violations" + (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 6: one order certifies adm_r/r bounded across r = 1..8; on tiny
// graphs the uniform order stays within a factor 3 of the exact optimum.
inline CriterionResult criterion_6(unsigned jobs = 1) {
  return detail::timed(6, "uniform-order quality across radii", [&](CriterionResult& res) {
    struct FamilyInstance {
      std::string family;
      std::string name;
      Graph graph;
    };
    std::vector<FamilyInstance> instances;
    for (int k : {4, 8, 15, 22})
      instances.push_back({"grid", "grid-" + std::to_string(k) + "x" + std::to_string(k),
                           grid_graph(k, k)});
    for (auto [n, seed] : {std::pair{100, 11}, {300, 12}, {500, 13}})
      instances.push_back({"planar", "planar-" + std::to_string(n),
                           random_planar(n, static_cast<uint32_t>(seed))});

    std::vector<double> ratios(instances.size(), 0.0);
    detail::parallel_for(instances, jobs, [&](size_t i) {
      const Graph& g = instances[i].graph;
      LinearOrder L = build_uniform_order(g, OrderVariant::plain).order;
      for (int r = 1; r <= kUniformityMaxRadius; ++r) {
        int adm_upper = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
          adm_upper = std::max(adm_upper, vertex_admissibility(g, L, v, r).upper);
        ratios[i] = std::max(ratios[i], static_cast<double>(adm_upper) / r);
      }
    });
    std::map<std::string, double> family_constant;
    for (size_t i = 0; i < instances.size(); ++i)
      family_constant[instances[i].family] =
          std::max(family_constant[instances[i].family], ratios[i]);

    // regression tripwire (not a structural guarantee): uniform-order adm
    // within factor 3 of the exact optimum on tiny instances
    std::vector<CorpusGraph> tiny;
    for (auto& g : small_named_graphs())
      if (g.graph.vertex_count() <= 7) tiny.push_back(g);
    for (int s = 0; s < 10; ++s)
      tiny.push_back({"gnp-7-s" + std::to_string(s), gnp(7, 0.5, 400 + s)});
    std::string trip;
    for (auto& [name, g] : tiny) {
      LinearOrder L = build_uniform_order(g, OrderVariant::plain).order;
      for (int r : {1, 2, 3}) {
        int uniform_adm = order_value_exact(g, L, r, Metric::adm);
        int best = exact_optimum(g, r, Metric::adm, 7).value;
        if (uniform_adm > kTripwireFactor * best) {
          trip = name + " r=" + std::to_string(r) + ": uniform adm " +
                 std::to_string(uniform_adm) + " > " + std::to_string(kTripwireFactor) +
                 "x exact " + std::to_string(best);
          break;
        }
      }
      if (!trip.empty()) break;
    }

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "max adm_r/r over r=1..8:";
    for (auto& [family, constant] : family_constant) out << " " << family << "=" << constant;
    out << "; factor-" << kTripwireFactor << " tripwire on " << tiny.size()
        << " tiny graphs: " << (trip.empty() ? "clean" : trip);
    res.pass = trip.empty();
    res.details = out.str();
  });
}

// Criterion 7: spanning-tree facts, the degree ledger and the admissibility
// transfer bound for the augmented structure.
inline CriterionResult criterion_7(unsigned jobs = 1) {
  return detail::timed(7, "augmentation spanning tree and budgets", [&](CriterionResult& res) {
    std::vector<CorpusGraph> sample;
    sample.push_back({"k1", complete_graph(1)});
    sample.push_back({"k2", complete_graph(2)});
    sample.push_back({"two-k2", disjoint_union(complete_graph(2), complete_graph(2))});
    for (int i = 0; i < kClaimGraphs; ++i) {
      int n = 8 + (i * 5) % 33;  // 8..40
      uint32_t seed = static_cast<uint32_t>(2000 + i);
      switch (i % 4) {
        case 0:
          sample.push_back({"tree-" + std::to_string(n) + "-s" + std::to_string(i),
                            random_tree(n, seed)});
          break;
        case 1:
          sample.push_back({"planar-" + std::to_string(n) + "-s" + std::to_string(i),
                            random_planar(n, seed)});
          break;
        case 2:
          sample.push_back({"gnp-" + std::to_string(n) + "-s" + std::to_string(i),
                            gnp(n, 0.3, seed)});
          break;
        default:
          sample.push_back(
              {"disc-" + std::to_string(n) + "-s" + std::to_string(i),
               disjoint_union(random_tree(n / 2, seed), random_planar(n - n / 2, seed + 1))});
      }
    }
    std::vector<std::string> bad(sample.size());
    std::atomic<int> reports{0};
    detail::parallel_for(sample, jobs, [&](size_t i) {
      const auto& [name, g] = sample[i];
      AugmentedGraph aug = build_augmented(g);
      for (int r : {1, 2, 3}) {
        ClaimsReport rep = verify_claims(aug, r);
        ++reports;
        if (!rep.ok) {
          bad[i] = name + " r=" + std::to_string(r) + ": " + rep.violation;
          return;
        }
      }
    });
    int violations = 0;
    std::string first;
    for (const auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    res.pass = violations == 0;
    res.details = std::to_string(sample.size()) + " graphs (n <= 40, disconnected included), " +
                  std::to_string(reports.load()) + " claim reports, " +
                  std::to_string(violations) + " violations" +
                  (first.empty() ? "" : "; first: " + first);
  });
}

// Criterion 8: construction time on growing planar instances stays under the
// wall-clock bound and grows polynomially.
inline CriterionResult criterion_8(unsigned /*jobs*/ = 1) {
  return detail::timed(8, "construction runtime growth", [&](CriterionResult& res) {
    std::vector<int> sizes{50, 100, 200, 300};
    std::vector<double> seconds;
    for (int n : sizes) {
      Graph g = random_planar(n, 7);
      auto start = std::chrono::steady_clock::now();
      auto built = build_uniform_order(g, OrderVariant::plain);
      double t =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (built.order.sequence().size() != static_cast<size_t>(n))
        throw std::runtime_error("construction dropped vertices");
      seconds.push_back(std::max(t, 1e-6));
    }
    // least-squares slope of ln(t) against ln(n)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = static_cast<int>(sizes.size());
    for (int i = 0; i < k; ++i) {
      double x = std::log(static_cast<double>(sizes[i])), y = std::log(seconds[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    for (int i = 0; i < k; ++i) out << "n=" << sizes[i] << ": " << seconds[i] << "s; ";
    out << "log-log slope " << slope << " (limit " << kSlopeLimit << "), n=300 limit "
        << kBuildTimeLimit << "s";
    res.pass = seconds.back() < kBuildTimeLimit && slope < kSlopeLimit;
    res.details = out.str();
  });
}

inline std::vector<CriterionResult> run_all(unsigned jobs = 1) {
  return {criterion_1(jobs), criterion_2(jobs), criterion_3(jobs), criterion_4(jobs),
          criterion_5(jobs), criterion_6(jobs), criterion_7(jobs), criterion_8(jobs)};
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("GCN_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace gcn::acceptance
