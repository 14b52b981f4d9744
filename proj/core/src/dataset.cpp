#include "gapnn/dataset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapnn {

LabeledDataset::LabeledDataset(DissimilarityMatrix matrix,
                               std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (!matrix_.is_square_training()) {
    throw std::invalid_argument("labeled dataset needs a square training matrix");
  }
  if (labels_.size() != matrix_.rows()) {
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                " does not match matrix rows " +
                                std::to_string(matrix_.rows()));
  }
  if (labels_.empty()) {
    throw std::invalid_argument("need two classes, got an empty label list");
  }

  label_a_ = labels_.front();
  for (const auto& l : labels_) {
    if (l != label_a_) {
      if (label_b_.empty()) {
        label_b_ = l;
      } else if (l != label_b_) {
        throw std::invalid_argument("need two classes, found a third label '" + l + "'");
      }
    }
  }
  if (label_b_.empty()) {
    throw std::invalid_argument("need two classes, all rows are '" + label_a_ + "'");
  }

  for (std::size_t i = 0; i < labels_.size(); ++i) {
    (labels_[i] == label_a_ ? indices_a_ : indices_b_).push_back(i);
  }
}

const std::vector<std::size_t>&
LabeledDataset::class_indices(const std::string& token) const {
  if (token == label_a_) return indices_a_;
  if (token == label_b_) return indices_b_;
  throw std::invalid_argument("unknown class token '" + token + "'");
}

} // namespace gapnn
