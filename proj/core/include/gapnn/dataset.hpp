#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gapnn/dissimilarity_matrix.hpp"

namespace gapnn {

/// A square training matrix together with two-class labels, one per row.
///
/// Exactly two distinct label tokens must occur and each must occur at least
/// once; anything else is rejected with "need two classes". label_a() is the
/// token of the first row, label_b() the other token, so the class identity
/// of a dataset is stable under everything except reordering its rows.
class LabeledDataset {
public:
  LabeledDataset(DissimilarityMatrix matrix, std::vector<std::string> labels);

  const DissimilarityMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  const std::string& label_a() const { return label_a_; }
  const std::string& label_b() const { return label_b_; }

  /// Row indices of the given class, ascending. Throws on an unknown token.
  const std::vector<std::size_t>& class_indices(const std::string& token) const;

  /// True when row i carries label_a.
  bool is_class_a(std::size_t i) const { return labels_[i] == label_a_; }

private:
  DissimilarityMatrix matrix_;
  std::vector<std::string> labels_;
  std::string label_a_;
  std::string label_b_;
  std::vector<std::size_t> indices_a_;
  std::vector<std::size_t> indices_b_;
};

} // namespace gapnn
