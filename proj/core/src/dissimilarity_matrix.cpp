#include "gapnn/dissimilarity_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gapnn {

DissimilarityMatrix::DissimilarityMatrix(std::size_t rows, std::size_t cols,
                                         std::vector<double> values,
                                         bool square_training)
    : rows_(rows), cols_(cols), square_training_(square_training),
      values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix value count " + std::to_string(values_.size()) +
                                " does not match shape " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  if (square_training_ && rows_ != cols_) {
    throw std::invalid_argument("a square training matrix needs rows == cols, got " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

DissimilarityMatrix DissimilarityMatrix::square_training(std::size_t n,
                                                         std::vector<double> values) {
  return DissimilarityMatrix(n, n, std::move(values), true);
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::empty_matrix:
      out << "matrix has no entries";
      break;
    case ViolationKind::negative_value:
      out << "negative value " << value << " at (" << row << "," << col
          << "): dissimilarities must be non-negative";
      break;
    case ViolationKind::not_finite:
      out << "non-finite value at (" << row << "," << col
          << "): dissimilarities must be finite";
      break;
    case ViolationKind::nonzero_diagonal:
      out << "nonzero diagonal " << value << " at (" << row << "," << col
          << "): an object must have zero dissimilarity to itself";
      break;
  }
  return out.str();
}

std::vector<Violation> validate_matrix(const DissimilarityMatrix& m) {
  std::vector<Violation> violations;
  if (m.empty()) {
    violations.push_back({ViolationKind::empty_matrix, 0, 0, 0.0});
    return violations;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (std::isnan(v) || std::isinf(v)) {
        violations.push_back({ViolationKind::not_finite, i, j, v});
      } else if (v < 0.0) {
        violations.push_back({ViolationKind::negative_value, i, j, v});
      } else if (m.is_square_training() && i == j && v != 0.0) {
        violations.push_back({ViolationKind::nonzero_diagonal, i, j, v});
      }
    }
  }
  return violations;
}

bool neighbourhood_contains(const DissimilarityMatrix& m, std::size_t center_row,
                            std::size_t other_col, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("neighbourhood radius must be positive");
  }
  if (center_row >= m.rows() || other_col >= m.cols()) {
    throw std::invalid_argument("neighbourhood index out of range");
  }
  return m(center_row, other_col) < eps;
}

} // namespace gapnn
