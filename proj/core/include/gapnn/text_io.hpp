#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gapnn/classifier.hpp"
#include "gapnn/dissimilarity_matrix.hpp"
#include "gapnn/separability.hpp"

namespace gapnn {

/// Parse failure with the 1-based line number it was found on.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// --- matrix files -----------------------------------------------------------
//
// First non-comment line: "<rows> <cols>". Then exactly <rows> lines of
// <cols> whitespace-separated decimal values. Lines starting with '#' and
// blank lines are ignored. Values are emitted in the shortest form that
// parses back to the identical double, so emit(parse(text)) is a fixpoint.

DissimilarityMatrix parse_matrix(std::string_view text);
std::string emit_matrix(const DissimilarityMatrix& m);

/// Re-tags a parsed matrix as a square training matrix. Throws when the
/// shape is not square.
DissimilarityMatrix as_square_training(const DissimilarityMatrix& m);

// --- label files ------------------------------------------------------------
//
// One label token per line; '#' comments and blank lines are ignored.

std::vector<std::string> parse_labels(std::string_view text);
std::string emit_labels(const std::vector<std::string>& labels);

// --- model files ------------------------------------------------------------
//
// Line-oriented, fixed order, reals carrying 17 significant digits:
//
//   GAPNN-MODEL v1
//   epsilon <decimal>
//   delta_hat <decimal>
//   s <decimal>
//   label_a <token>
//   label_b <token>
//   prototypes_a <space-separated 0-based indices>
//   prototypes_b <space-separated 0-based indices>

PrototypeModel parse_model(std::string_view text);
std::string emit_model(const PrototypeModel& model);

// --- reports ----------------------------------------------------------------

/// Key-value lines in fixed order: delta_hat, eps_conn_a, eps_conn_b,
/// separable, symmetry_max_abs_diff, triangle_violation_count,
/// zero_offdiag_count.
std::string emit_report(const SeparabilityReport& report);

/// Per-decision lines plus summary counts. Decision lines are
/// "<index> <outcome> <d_a> <d_b>" with the score appended in smooth mode.
/// The four outcome counts always sum to the number of rows; error_count is
/// present only when ground truth was supplied and counts accepted rows
/// whose class disagrees with it.
struct RunReport {
  PredictMode mode = PredictMode::rules;
  std::vector<Decision> decisions;
  std::size_t count_class_a = 0;
  std::size_t count_class_b = 0;
  std::size_t count_reject_outlier = 0;
  std::size_t count_reject_ambiguous = 0;
  std::optional<std::size_t> error_count;
};

RunReport make_run_report(const PrototypeModel& model,
                          std::vector<Decision> decisions, PredictMode mode,
                          const std::optional<std::vector<std::string>>& truth);
std::string emit_run_report(const RunReport& report);

// --- whole-file helpers -------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

} // namespace gapnn
