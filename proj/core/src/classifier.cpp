#include "gapnn/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gapnn/separability.hpp"
#include "parallel.hpp"

namespace gapnn {

const char* outcome_token(Outcome o) {
  switch (o) {
    case Outcome::class_a: return "class_a";
    case Outcome::class_b: return "class_b";
    case Outcome::reject_outlier: return "reject_outlier";
    case Outcome::reject_ambiguous: return "reject_ambiguous";
  }
  return "unknown";
}

std::vector<std::size_t> greedy_cover(const LabeledDataset& d,
                                      const std::string& class_token, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("cover radius must be positive");
  }
  const auto& members = d.class_indices(class_token);
  const auto& m = d.matrix();

  std::vector<std::size_t> prototypes;
  std::vector<bool> covered(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (covered[i]) continue;
    prototypes.push_back(members[i]);
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (covered[j]) continue;
      const double w = std::min(m(members[i], members[j]), m(members[j], members[i]));
      if (w < eps) covered[j] = true;
    }
  }
  return prototypes;
}

namespace {

double min_of(std::span<const double> values) {
  double best = std::numeric_limits<double>::infinity();
  for (double v : values) best = std::min(best, v);
  return best;
}

void require_nonempty(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("distance sequences must be non-empty");
  }
}

} // namespace

Decision classify_rules(std::span<const double> distances_to_a,
                        std::span<const double> distances_to_b, double eps) {
  require_nonempty(distances_to_a, distances_to_b);
  if (!(eps > 0.0)) {
    throw std::invalid_argument("neighbourhood radius must be positive");
  }
  const double d_a = min_of(distances_to_a);
  const double d_b = min_of(distances_to_b);

  Outcome outcome;
  if (d_a >= eps && d_b >= eps) {
    outcome = Outcome::reject_outlier;
  } else if (d_b >= eps) {
    outcome = Outcome::class_a;
  } else if (d_a >= eps) {
    outcome = Outcome::class_b;
  } else {
    outcome = Outcome::reject_ambiguous;
  }
  return {outcome, d_a, d_b, std::nullopt};
}

Decision classify_1nn(std::span<const double> distances_to_a,
                      std::span<const double> distances_to_b) {
  require_nonempty(distances_to_a, distances_to_b);
  const double d_a = min_of(distances_to_a);
  const double d_b = min_of(distances_to_b);

  Outcome outcome;
  if (d_a < d_b) {
    outcome = Outcome::class_a;
  } else if (d_a > d_b) {
    outcome = Outcome::class_b;
  } else {
    outcome = Outcome::reject_ambiguous;
  }
  return {outcome, d_a, d_b, std::nullopt};
}

double smooth_score(std::span<const double> distances_to_a,
                    std::span<const double> distances_to_b, double s) {
  require_nonempty(distances_to_a, distances_to_b);
  if (!(s > 0.0)) {
    throw std::invalid_argument("smoothing scale must be positive");
  }
  double sum_a = 0.0;
  for (double d : distances_to_a) sum_a += std::exp(-d / s);
  double sum_b = 0.0;
  for (double d : distances_to_b) sum_b += std::exp(-d / s);
  return sum_a - sum_b;
}

Decision classify_smooth(std::span<const double> distances_to_a,
                         std::span<const double> distances_to_b, double s) {
  const double f = smooth_score(distances_to_a, distances_to_b, s);
  return {f > 0.0 ? Outcome::class_a : Outcome::class_b, min_of(distances_to_a),
          min_of(distances_to_b), f};
}

double s_bound(double delta, double eps, std::size_t size_a, std::size_t size_b) {
  if (!(eps > 0.0) || !(delta > eps)) {
    throw std::invalid_argument("no margin: the bound needs delta > eps > 0");
  }
  if (size_a == 0 || size_b == 0) {
    throw std::invalid_argument("prototype sets must be non-empty");
  }
  const std::size_t largest = std::max(size_a, size_b);
  if (largest == 1) {
    // ln 1 = 0: a single prototype per side never gets outvoted, any scale works.
    return std::numeric_limits<double>::infinity();
  }
  return (delta - eps) / std::log(static_cast<double>(largest));
}

PrototypeModel fit(const LabeledDataset& d, const FitOptions& options) {
  const double delta_hat = estimate_gap(d);

  double eps;
  if (options.epsilon) {
    eps = *options.epsilon;
  } else if (options.epsilon_frac) {
    eps = *options.epsilon_frac * delta_hat;
  } else {
    eps = 0.5 * delta_hat;
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("cover radius must be positive");
  }
  if (eps >= delta_hat) {
    throw std::invalid_argument("cover radius must be below the class gap");
  }

  PrototypeModel model;
  model.delta_hat = delta_hat;
  model.eps = eps;
  model.label_a = d.label_a();
  model.label_b = d.label_b();
  model.prototypes_a = greedy_cover(d, d.label_a(), eps);
  model.prototypes_b = greedy_cover(d, d.label_b(), eps);

  if (options.s) {
    if (!(*options.s > 0.0)) {
      throw std::invalid_argument("smoothing scale must be positive");
    }
    model.s = *options.s;
  } else {
    const double bound =
        s_bound(delta_hat, eps, model.prototypes_a.size(), model.prototypes_b.size());
    model.s = std::isinf(bound) ? 0.9 * (delta_hat - eps) : 0.9 * bound;
  }
  return model;
}

std::vector<Decision> predict_batch(const PrototypeModel& model,
                                    const DissimilarityMatrix& test_rows,
                                    PredictMode mode) {
  if (model.prototypes_a.empty() || model.prototypes_b.empty()) {
    throw std::invalid_argument("model has an empty prototype set");
  }
  std::size_t max_index = 0;
  for (std::size_t p : model.prototypes_a) max_index = std::max(max_index, p);
  for (std::size_t p : model.prototypes_b) max_index = std::max(max_index, p);
  if (max_index >= test_rows.cols()) {
    throw std::invalid_argument(
        "column count mismatch: test rows have " + std::to_string(test_rows.cols()) +
        " columns but the model references training column " + std::to_string(max_index));
  }

  // Only prototype columns are ever read; the rest of a row may hold anything.
  auto check_value = [](double v, std::size_t row, std::size_t col) {
    if (std::isnan(v) || std::isinf(v) || v < 0.0) {
      throw std::runtime_error("invalid dissimilarity at row " + std::to_string(row) +
                               ", column " + std::to_string(col) +
                               ": values must be finite and non-negative");
    }
  };
  for (std::size_t r = 0; r < test_rows.rows(); ++r) {
    for (std::size_t p : model.prototypes_a) check_value(test_rows(r, p), r, p);
    for (std::size_t p : model.prototypes_b) check_value(test_rows(r, p), r, p);
  }

  std::vector<Decision> decisions(test_rows.rows());
  detail::parallel_chunks(
      test_rows.rows(), detail::thread_budget(),
      [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<double> to_a(model.prototypes_a.size());
        std::vector<double> to_b(model.prototypes_b.size());
        for (std::size_t r = begin; r < end; ++r) {
          for (std::size_t k = 0; k < model.prototypes_a.size(); ++k) {
            to_a[k] = test_rows(r, model.prototypes_a[k]);
          }
          for (std::size_t k = 0; k < model.prototypes_b.size(); ++k) {
            to_b[k] = test_rows(r, model.prototypes_b[k]);
          }
          switch (mode) {
            case PredictMode::rules:
              decisions[r] = classify_rules(to_a, to_b, model.eps);
              break;
            case PredictMode::nearest:
              decisions[r] = classify_1nn(to_a, to_b);
              break;
            case PredictMode::smooth:
              decisions[r] = classify_smooth(to_a, to_b, model.s);
              break;
          }
        }
      });
  return decisions;
}

} // namespace gapnn
