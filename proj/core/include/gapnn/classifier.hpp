#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapnn/dataset.hpp"
#include "gapnn/dissimilarity_matrix.hpp"

namespace gapnn {

enum class Outcome {
  class_a,
  class_b,
  reject_outlier,   // far from both classes
  reject_ambiguous, // close to both classes
};

/// Stable text token for report files ("class_a", "reject_outlier", ...).
const char* outcome_token(Outcome o);

struct Decision {
  Outcome outcome;
  double d_a; // min dissimilarity to the class-A prototypes
  double d_b; // min dissimilarity to the class-B prototypes
  std::optional<double> score; // exponential-sum value, smooth mode only
};

enum class PredictMode { rules, nearest, smooth };

/// A fitted prototype classifier: per-class prototype row indices whose
/// eps-balls cover their class, the recorded gap estimate, and the smoothing
/// scale for the exponential-sum decision function.
struct PrototypeModel {
  std::vector<std::size_t> prototypes_a; // sorted, non-empty
  std::vector<std::size_t> prototypes_b; // sorted, non-empty, disjoint from a
  double eps = 0.0;       // cover radius; must stay below delta_hat
  double delta_hat = 0.0; // estimated cross-class gap
  double s = 0.0;         // smoothing scale, > 0
  std::string label_a;
  std::string label_b;
};

/// Greedy set cover of one class: scan its members in ascending row order,
/// select a member as prototype if no earlier prototype is within eps of it,
/// and mark everything with min(D(i,p), D(p,i)) < eps (strict) as covered.
/// Every class member ends up within eps of a same-class prototype or is one.
/// The result is deterministic and not necessarily of minimum size.
std::vector<std::size_t> greedy_cover(const LabeledDataset& d,
                                      const std::string& class_token, double eps);

/// Four-branch neighbourhood rule on the two min-distances:
///   1. both >= eps            -> reject_outlier
///   2. only class B far away  -> class_a
///   3. only class A far away  -> class_b
///   4. both < eps             -> reject_ambiguous
/// Branches are tested in exactly this order.
Decision classify_rules(std::span<const double> distances_to_a,
                        std::span<const double> distances_to_b, double eps);

/// Nearest-prototype rule. An exact tie is reject_ambiguous: with a
/// zero-error contract a coin flip is worse than an honest reject.
Decision classify_1nn(std::span<const double> distances_to_a,
                      std::span<const double> distances_to_b);

/// Exponential-sum decision value
///   f = sum_a exp(-d/s) - sum_b exp(-d/s),
/// summed in ascending prototype order within each class so the result is
/// bit-reproducible. Positive favours class A.
double smooth_score(std::span<const double> distances_to_a,
                    std::span<const double> distances_to_b, double s);

/// Wraps smooth_score into a Decision: f > 0 -> class_a, otherwise class_b
/// (ties go to B; the smooth rule never rejects).
Decision classify_smooth(std::span<const double> distances_to_a,
                         std::span<const double> distances_to_b, double s);

/// Upper bound on the smoothing scale below which the nearest prototype's
/// term dominates the opposing sum: (delta - eps) / ln(max(size_a, size_b)).
/// With a single prototype on each side the constraint is vacuous and the
/// bound is +infinity. Throws when delta <= eps ("no margin").
double s_bound(double delta, double eps, std::size_t size_a, std::size_t size_b);

struct FitOptions {
  std::optional<double> epsilon;      // explicit cover radius
  std::optional<double> epsilon_frac; // cover radius as a fraction of delta_hat
  std::optional<double> s;            // explicit smoothing scale
};

/// Pipeline: estimate the gap, pick the cover radius (default half the gap),
/// greedily cover both classes, and pick the smoothing scale (default 0.9x
/// the s bound, or 0.9x (delta - eps) when the bound is unbounded).
PrototypeModel fit(const LabeledDataset& d, const FitOptions& options = {});

/// One Decision per test row. Reads only the columns named by the model's
/// prototype index sets; everything else in the row is ignored, garbage
/// included. Rows may be processed in parallel; outputs are order-preserving
/// and bit-reproducible.
std::vector<Decision> predict_batch(const PrototypeModel& model,
                                    const DissimilarityMatrix& test_rows,
                                    PredictMode mode);

} // namespace gapnn
