#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gapnn/dataset.hpp"
#include "gapnn/dissimilarity_matrix.hpp"

namespace gapnn {

/// One ordered triple (i,j,k) where the direct dissimilarity D(i,k) exceeds
/// the detour D(i,j) + D(j,k) by more than the tolerance.
struct TriangleViolation {
  std::size_t i, j, k;
  double direct; // D(i,k)
  double detour; // D(i,j) + D(j,k)
};

/// Symmetry deviation and triangle-inequality census of a square training
/// matrix. A dissimilarity measure is free to fail both; this report just
/// quantifies by how much.
struct MetricityReport {
  double symmetry_max_abs_diff = 0.0;
  std::size_t triangle_violation_count = 0;
  /// First violations in lexicographic (i,j,k) order, capped.
  std::vector<TriangleViolation> violating_triples;

  static constexpr std::size_t kTripleCap = 100;
  /// Absolute slack so float round-off is not counted as non-metricity.
  static constexpr double kTriangleTolerance = 1e-12;
};

/// Everything `analyze` knows about a labeled dataset: the cross-class gap,
/// per-class connectivity radii, and how (non-)metric the matrix is.
struct SeparabilityReport {
  double delta_hat = 0.0;    // minimum cross-class dissimilarity, both directions
  double eps_conn_a = 0.0;   // within-class connectivity threshold, class A
  double eps_conn_b = 0.0;
  bool separable = false;    // delta_hat > max(eps_conn_a, eps_conn_b)
  double symmetry_max_abs_diff = 0.0;
  std::size_t triangle_violation_count = 0;
  std::size_t zero_offdiag_count = 0; // duplicate objects show up here
};

/// Minimum of D(i,j) over all ordered pairs with differing labels.
/// Deterministic exact scan. Throws when the minimum is zero: a cross-class
/// dissimilarity of zero means two objects of different classes are
/// indistinguishable and no gap exists.
double estimate_gap(const LabeledDataset& d);

/// Smallest radius t at which the class's proximity graph — edges between
/// members i,j with min(D(i,j), D(j,i)) <= t — is one connected component.
/// Computed as the bottleneck (largest edge) of a minimum spanning tree over
/// the symmetrized within-class dissimilarities. A singleton class is
/// connected by convention and yields 0.
double estimate_connectivity(const LabeledDataset& d, const std::string& class_token);

/// Scans all ordered triples (i,j,k), all distinct, for
/// D(i,k) > D(i,j) + D(j,k) + tol, and all ordered pairs for asymmetry.
/// Requires a square training matrix that passed validate_matrix. The scan
/// is internally parallelized over i; count and the capped triple list are
/// schedule-independent (triples kept in lexicographic order).
MetricityReport metricity_report(const DissimilarityMatrix& m);

/// Number of ordered off-diagonal entries that are exactly zero.
std::size_t zero_offdiagonal_count(const DissimilarityMatrix& m);

/// Runs gap, connectivity and metricity estimation and assembles the report.
/// Assumes validate_matrix passed.
SeparabilityReport analyze(const LabeledDataset& d);

} // namespace gapnn
