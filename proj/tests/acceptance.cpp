// Acceptance suite: one pass/fail line per criterion, exit status = number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "irgc/multilabel_graph.hpp"
#include "irgc/runner.hpp"
#include "irgc/solvers.hpp"
#include "irgc/vision.hpp"
#include "oracles.hpp"

using namespace irgc;
using irgc_test::draw_int;
using irgc_test::draw_unit;

namespace {

int g_checks_failed = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::printf("    check failed: %s\n", what);
    ++g_checks_failed;
  }
}

std::vector<PriorSpec> prior_suite() {
  return {PriorSpec::truncated_linear(2.0),  PriorSpec::truncated_quadratic(2.0),
          PriorSpec::cauchy(2.0),            PriorSpec::corrupted_gaussian(0.75, 50.0),
          PriorSpec::convex_linear(),        PriorSpec::convex_quadratic()};
}

// ---------------------------------------------------------------------------
// 1. Ishikawa exactness: multi-label graph cut equals exhaustive surrogate
//    minimization on 200 seeded random models.
bool criterion_exactness() {
  std::mt19937 rng(1001);
  auto specs = prior_suite();
  std::vector<std::shared_ptr<const PriorDecomposition>> priors;
  for (const auto& s : specs) priors.push_back(decompose(s));
  for (int trial = 0; trial < 200; ++trial) {
    auto prior = priors[static_cast<std::size_t>(trial) % priors.size()];
    int width = draw_int(rng, 1, 3);
    int height = draw_int(rng, 1, 2);
    int labels = draw_int(rng, 2, 4);
    MRFModel model = irgc_test::random_grid_model(rng, width, height, labels, 10, 3.0, prior);
    EdgeWeights w(model.edges().size());
    for (double& wi : w) wi = 2.0 * draw_unit(rng);
    auto [x, value] = MultiLabelGraph(model, w).solve();
    auto [bx, bvalue] = irgc_test::brute_force_surrogate_min(model, w);
    expect(std::abs(value - bvalue) <= 1e-6, "solve value == brute-force surrogate minimum");
    if (std::abs(value - bvalue) > 1e-6) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2 & 5 share the same seeded suite: 100 random models per prior kind,
// n <= 20, L <= 8, solved with both irgc and irgc_hybrid.
struct SuiteRun {
  SolveTrace irgc_trace;
  SolveTrace hybrid_trace;
  double irgc_energy;
  double hybrid_energy;
};

const std::vector<SuiteRun>& descent_suite() {
  static std::vector<SuiteRun> runs = [] {
    std::vector<SuiteRun> out;
    std::mt19937 rng(2002);
    for (const PriorSpec& spec : prior_suite()) {
      auto prior = decompose(spec);
      for (int trial = 0; trial < 100; ++trial) {
        int width = draw_int(rng, 2, 5);
        int height = draw_int(rng, 1, 4);  // n <= 20
        int labels = draw_int(rng, 2, 8);
        MRFModel model =
            irgc_test::random_grid_model(rng, width, height, labels, 10, 3.0, prior);
        SuiteRun run;
        auto plain = irgc_solve(model);
        auto hybrid = irgc_hybrid(model);
        run.irgc_trace = std::move(plain.trace);
        run.hybrid_trace = std::move(hybrid.trace);
        run.irgc_energy = energy(model, plain.labeling);
        run.hybrid_energy = energy(model, hybrid.labeling);
        out.push_back(std::move(run));
      }
    }
    return out;
  }();
  return runs;
}

bool criterion_monotonicity() {
  for (const SuiteRun& run : descent_suite()) {
    for (const SolveTrace* trace : {&run.irgc_trace, &run.hybrid_trace}) {
      expect(!trace->empty() && trace->back().iteration < 100, "terminates within 100 iterations");
      for (std::size_t i = 1; i < trace->size(); ++i) {
        bool ok = (*trace)[i].energy <= (*trace)[i - 1].energy + 1e-9;
        expect(ok, "E(x^{t+1}) <= E(x^t) + 1e-9");
        if (!ok) return false;
      }
    }
  }
  return g_checks_failed == 0;
}

// ---------------------------------------------------------------------------
// 3. Decomposition suite over the parameter grid.
bool criterion_decomposition() {
  bool ok = true;
  std::vector<PriorSpec> specs;
  for (double lambda : {1.0, 2.0, 4.0, 8.0}) {
    specs.push_back(PriorSpec::truncated_linear(lambda));
    specs.push_back(PriorSpec::truncated_quadratic(lambda));
    specs.push_back(PriorSpec::cauchy(lambda));
  }
  specs.push_back(PriorSpec::corrupted_gaussian(0.75, 50.0));
  specs.push_back(PriorSpec::convex_linear());
  specs.push_back(PriorSpec::convex_quadratic());

  for (const PriorSpec& spec : specs) {
    PriorDecomposition dec(spec);
    for (int z = 0; z <= 256; ++z) {
      if (std::abs(dec.h(dec.g(z)) - dec.theta(z)) > 1e-9) {
        expect(false, "|h(g(z)) - theta(z)| <= 1e-9");
        ok = false;
      }
      if (dec.second_difference(z) < -1e-12) {
        expect(false, "g''(z) >= -1e-12");
        ok = false;
      }
    }
    bool truncating = spec.kind == PriorKind::kTruncatedLinear ||
                      spec.kind == PriorKind::kTruncatedQuadratic ||
                      spec.kind == PriorKind::kCauchy;
    if (truncating) {
      for (int z = static_cast<int>(spec.lambda) + 1; z <= 256; ++z) {
        if (dec.second_difference(z) != 0.0) {
          expect(false, "g''(z) = 0 for z >= lambda + 1");
          ok = false;
        }
      }
    }
    // supergradient inequality on a 100x100 sample grid of (c, d)
    double y_max = dec.g(100.0);
    for (int i = 0; i < 100; ++i) {
      double c = y_max * i / 99.0;
      double hc = dec.h(c);
      double sc = dec.supergradient(c);
      for (int j = 0; j < 100; ++j) {
        double d = y_max * j / 99.0;
        if (dec.h(d) > hc + (d - c) * sc + 1e-9) {
          expect(false, "h(d) <= h(c) + (d - c) h^s(c) + 1e-9");
          ok = false;
        }
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Memory-scaling claim: linear-g arc counts grow linearly in L, the
//    quadratic-g case quadratically.
std::vector<double> least_squares(const std::vector<std::vector<double>>& cols,
                                  const std::vector<double>& y) {
  // tiny dense normal equations (at most 3 unknowns)
  std::size_t k = cols.size();
  std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < y.size(); ++t) a[i][j] += cols[i][t] * cols[j][t];
    for (std::size_t t = 0; t < y.size(); ++t) a[i][k] += cols[i][t] * y[t];
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pivot = i;
    for (std::size_t r = i + 1; r < k; ++r)
      if (std::abs(a[r][i]) > std::abs(a[pivot][i])) pivot = r;
    std::swap(a[i], a[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == i) continue;
      double f = a[r][i] / a[i][i];
      for (std::size_t c = i; c <= k; ++c) a[r][c] -= f * a[i][c];
    }
  }
  std::vector<double> coef(k);
  for (std::size_t i = 0; i < k; ++i) coef[i] = a[i][k] / a[i][i];
  return coef;
}

bool criterion_memory_scaling() {
  std::vector<int> label_counts = {8, 16, 32, 64};
  auto counts_for = [&](const PriorSpec& spec) {
    std::vector<double> counts;
    for (int labels : label_counts) {
      MRFModel model(100, labels, decompose(spec));
      for (auto [p, q] : grid_edges(10, 10, 4)) model.add_edge(p, q, 1.0);
      counts.push_back(static_cast<double>(MultiLabelGraph::estimate_memory(model)));
    }
    return counts;
  };
  std::vector<double> ls(label_counts.size()), ones(label_counts.size(), 1.0),
      ls2(label_counts.size());
  for (std::size_t i = 0; i < label_counts.size(); ++i) {
    ls[i] = label_counts[i];
    ls2[i] = static_cast<double>(label_counts[i]) * label_counts[i];
  }

  bool ok = true;
  {
    std::vector<double> y = counts_for(PriorSpec::truncated_linear(4.0));
    auto coef = least_squares({ls, ones}, y);
    for (std::size_t i = 0; i < y.size(); ++i) {
      double fit = coef[0] * ls[i] + coef[1];
      if (std::abs(fit - y[i]) >= 0.01 * y[i]) {
        expect(false, "truncated-linear arc count fits a*L + b within 1%");
        ok = false;
      }
    }
  }
  {
    std::vector<double> y = counts_for(PriorSpec::corrupted_gaussian(0.75, 50.0));
    auto coef = least_squares({ls2, ls, ones}, y);
    for (std::size_t i = 0; i < y.size(); ++i) {
      double fit = coef[0] * ls2[i] + coef[1] * ls[i] + coef[2];
      if (std::abs(fit - y[i]) >= 0.01 * y[i]) {
        expect(false, "quadratic-g arc count fits a*L^2 within 1%");
        ok = false;
      }
    }
    // and it genuinely needs the quadratic term
    auto lin = least_squares({ls, ones}, y);
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
      worst = std::max(worst, std::abs(lin[0] * ls[i] + lin[1] - y[i]) / y[i]);
    if (worst <= 0.01) {
      expect(false, "quadratic-g arc count is not linear in L");
      ok = false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Hybrid dominance on the criterion-2 suite.
bool criterion_hybrid_dominance() {
  int strict = 0;
  bool ok = true;
  for (const SuiteRun& run : descent_suite()) {
    if (run.hybrid_energy > run.irgc_energy + 1e-9) {
      expect(false, "hybrid final energy <= irgc final energy");
      ok = false;
    }
    if (run.hybrid_energy < run.irgc_energy - 1e-9) ++strict;
  }
  if (strict < 1) {
    expect(false, "hybrid strictly better in at least one case");
    ok = false;
  }
  std::printf("    hybrid strictly better on %d of %zu runs\n", strict, descent_suite().size());
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Scaled stereo smoke test on a synthetic 64x64 fronto-parallel scene.
bool criterion_stereo_smoke() {
  constexpr int kSize = 64;
  constexpr int kLabels = 8;
  std::mt19937 rng(6006);

  GrayImage right = make_image(kSize, kSize);
  for (auto& px : right.pixels) px = static_cast<std::uint8_t>(draw_int(rng, 0, 255));

  // ground-truth disparity: background 2, one fronto-parallel square at 5
  std::vector<int> truth(kSize * kSize, 2);
  for (int r = 16; r < 48; ++r)
    for (int c = 16; c < 48; ++c) truth[static_cast<std::size_t>(r) * kSize + c] = 5;

  GrayImage left = make_image(kSize, kSize);
  for (int r = 0; r < kSize; ++r) {
    for (int c = 0; c < kSize; ++c) {
      int d = truth[static_cast<std::size_t>(r) * kSize + c];
      left.at(r, c) = right.at(r, std::max(c - d, 0));
    }
  }

  std::vector<double> unary = stereo_unaries(left, right, kLabels, StereoMatcher::kAbsoluteDifference);
  std::vector<double> gammas = stereo_gammas(left, {10, 30.0, 10.0}, 4);
  std::size_t next = 0;
  MRFModel model = build_grid(kSize, kSize, 4, kLabels, unary,
                              [&gammas, &next](int, int) { return gammas[next++]; },
                              decompose(PriorSpec::truncated_linear(2.0)));

  auto hybrid = irgc_hybrid(model);
  auto expansion = expansion_solve(model);
  double e_hybrid = energy(model, hybrid.labeling);
  double e_expansion = energy(model, expansion.labeling);

  int correct = 0;
  for (std::size_t i = 0; i < hybrid.labeling.size(); ++i)
    if (hybrid.labeling[i] == truth[i]) ++correct;
  double accuracy = static_cast<double>(correct) / static_cast<double>(truth.size());

  std::printf("    hybrid energy %.1f, expansion energy %.1f, accuracy %.1f%%\n", e_hybrid,
              e_expansion, 100.0 * accuracy);
  bool ok = true;
  if (e_hybrid > e_expansion + 1e-6) {
    expect(false, "hybrid energy <= expansion-alone energy");
    ok = false;
  }
  if (accuracy < 0.9) {
    expect(false, ">= 90% of pixels match the true disparity");
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Quality metric reproduces the published relative gap.
bool criterion_quality() {
  double published_energy = 2399.9e3;
  double published_quality = 0.0058;
  double implied_bound = published_energy / (1.0 + published_quality / 100.0);
  double q = quality(published_energy, implied_bound);
  bool ok = std::abs(q - published_quality) <= 0.0005;
  if (!ok) expect(false, "quality reproduces 0.0058% within 0.0005 points");
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Max-flow against brute-force min-cut enumeration.
bool criterion_maxflow_oracle() {
  std::mt19937 rng(8008);
  for (int trial = 0; trial < 500; ++trial) {
    int nodes = draw_int(rng, 3, 8);
    FlowNetwork net;
    net.add_nodes(nodes);
    net.set_terminals(0, 1);
    std::vector<irgc_test::RawArc> arcs;
    int arc_count = draw_int(rng, 1, 2 * nodes);
    for (int a = 0; a < arc_count; ++a) {
      int u = draw_int(rng, 0, nodes - 1);
      int v = draw_int(rng, 0, nodes - 1);
      if (u == v) continue;
      double cap = draw_int(rng, 0, 10);
      double rev = draw_int(rng, 0, 10);
      net.add_arc(u, v, cap, rev);
      arcs.push_back({u, v, cap, rev});
    }
    double flow = net.max_flow();
    double cut = irgc_test::brute_force_min_cut(nodes, 0, 1, arcs);
    if (std::abs(flow - cut) > 1e-9) {
      expect(false, "max_flow equals brute-force min cut exactly");
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double time_limit;
    std::function<bool()> run;
  };
  std::vector<Criterion> criteria = {
      {"1 Ishikawa exactness (200 random models vs brute force)", 30.0, criterion_exactness},
      {"2 Monotone descent and termination (irgc & hybrid)", 60.0, criterion_monotonicity},
      {"3 Prior decomposition suite", 10.0, criterion_decomposition},
      {"4 Arc-count scaling (linear vs quadratic g)", 5.0, criterion_memory_scaling},
      {"5 Hybrid dominance", 60.0, criterion_hybrid_dominance},
      {"6 Synthetic stereo smoke test", 60.0, criterion_stereo_smoke},
      {"7 Quality metric vs published value", 5.0, criterion_quality},
      {"8 Max-flow oracle (500 random graphs)", 10.0, criterion_maxflow_oracle},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    g_checks_failed = 0;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run() && g_checks_failed == 0;
    } catch (const std::exception& ex) {
      std::printf("    exception: %s\n", ex.what());
      ok = false;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit) {
      std::printf("    exceeded time limit: %.1fs > %.1fs\n", seconds, c.time_limit);
      ok = false;
    }
    std::printf("[%s] criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.name, seconds);
    if (!ok) ++failed;
  }
  return failed;
}
