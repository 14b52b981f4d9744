#include "gapnn/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"

namespace gapnn {

double estimate_gap(const LabeledDataset& d) {
  const auto& m = d.matrix();
  const auto& a = d.class_indices(d.label_a());
  const auto& b = d.class_indices(d.label_b());

  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i : a) {
    for (std::size_t j : b) {
      gap = std::min(gap, std::min(m(i, j), m(j, i)));
    }
  }
  if (gap == 0.0) {
    throw std::runtime_error(
        "zero cross-class dissimilarity: objects of different classes must "
        "be strictly apart, no gap exists");
  }
  return gap;
}

namespace {

// Bottleneck edge of a minimum spanning tree over the symmetrized
// within-class dissimilarities, by Prim's algorithm. members.size() >= 2.
double mst_bottleneck(const DissimilarityMatrix& m,
                      const std::vector<std::size_t>& members) {
  const std::size_t k = members.size();
  std::vector<double> best(k, std::numeric_limits<double>::infinity());
  std::vector<bool> in_tree(k, false);

  auto weight = [&](std::size_t u, std::size_t v) {
    return std::min(m(members[u], members[v]), m(members[v], members[u]));
  };

  std::size_t current = 0;
  in_tree[0] = true;
  double bottleneck = 0.0;
  for (std::size_t added = 1; added < k; ++added) {
    for (std::size_t v = 0; v < k; ++v) {
      if (!in_tree[v]) best[v] = std::min(best[v], weight(current, v));
    }
    std::size_t next = k;
    for (std::size_t v = 0; v < k; ++v) {
      if (!in_tree[v] && (next == k || best[v] < best[next])) next = v;
    }
    bottleneck = std::max(bottleneck, best[next]);
    in_tree[next] = true;
    current = next;
  }
  return bottleneck;
}

} // namespace

double estimate_connectivity(const LabeledDataset& d, const std::string& class_token) {
  const auto& members = d.class_indices(class_token);
  if (members.size() < 2) return 0.0;
  return mst_bottleneck(d.matrix(), members);
}

MetricityReport metricity_report(const DissimilarityMatrix& m) {
  if (!m.is_square_training()) {
    throw std::invalid_argument("metricity report needs a square training matrix");
  }
  const std::size_t n = m.rows();
  constexpr double tol = MetricityReport::kTriangleTolerance;
  constexpr std::size_t cap = MetricityReport::kTripleCap;

  MetricityReport report;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      report.symmetry_max_abs_diff =
          std::max(report.symmetry_max_abs_diff, std::abs(m(i, j) - m(j, i)));
    }
  }

  // Ordered-triple scan, parallel over the outer index. With a zero diagonal
  // and non-negative entries the degenerate k == i and k == j cases can never
  // compare as violations, so the inner loop runs unconditionally over all k.
  struct Chunk {
    std::size_t count = 0;
    std::vector<TriangleViolation> triples;
  };
  const std::size_t budget = detail::thread_budget();
  std::vector<Chunk> chunks(std::min(budget, n > 0 ? n : std::size_t{1}));

  detail::parallel_chunks(n, budget, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Chunk& local = chunks[c];
    for (std::size_t i = begin; i < end; ++i) {
      const double* ri = m.row(i).data();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double* rj = m.row(j).data();
        const double detour_base = ri[j] + tol;
        std::size_t found = 0;
        for (std::size_t k = 0; k < n; ++k) {
          found += ri[k] > detour_base + rj[k];
        }
        local.count += found;
        if (found > 0 && local.triples.size() < cap) {
          for (std::size_t k = 0; k < n && local.triples.size() < cap; ++k) {
            if (k != i && k != j && ri[k] > detour_base + rj[k]) {
              local.triples.push_back({i, j, k, ri[k], ri[j] + rj[k]});
            }
          }
        }
      }
    }
  });

  for (const auto& chunk : chunks) {
    report.triangle_violation_count += chunk.count;
    for (const auto& t : chunk.triples) {
      if (report.violating_triples.size() >= cap) break;
      report.violating_triples.push_back(t);
    }
  }
  return report;
}

std::size_t zero_offdiagonal_count(const DissimilarityMatrix& m) {
  if (!m.is_square_training()) {
    throw std::invalid_argument("off-diagonal census needs a square training matrix");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) == 0.0) ++count;
    }
  }
  return count;
}

SeparabilityReport analyze(const LabeledDataset& d) {
  SeparabilityReport report;
  report.delta_hat = estimate_gap(d);
  report.eps_conn_a = estimate_connectivity(d, d.label_a());
  report.eps_conn_b = estimate_connectivity(d, d.label_b());
  report.separable = report.delta_hat > std::max(report.eps_conn_a, report.eps_conn_b);

  const MetricityReport metricity = metricity_report(d.matrix());
  report.symmetry_max_abs_diff = metricity.symmetry_max_abs_diff;
  report.triangle_violation_count = metricity.triangle_violation_count;
  report.zero_offdiag_count = zero_offdiagonal_count(d.matrix());
  return report;
}

} // namespace gapnn
