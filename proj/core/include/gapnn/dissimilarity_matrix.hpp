#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gapnn {

/// Rectangular table of pairwise dissimilarities D(row, col).
///
/// This is the sole object representation the library works with: rows are
/// the objects being looked at, columns are the objects they are compared
/// against. A square training matrix (rows and columns index the same object
/// list) is marked with the `square_training` flag and is expected to carry
/// an exactly zero diagonal. Symmetry is never required; D(x,y) and D(y,x)
/// are independent entries.
///
/// Value requirements (finite, non-negative, non-NaN, zero diagonal) are not
/// enforced on construction. validate_matrix() is the gate everything else
/// assumes; it reports violations instead of throwing so that callers can
/// show all of them at once.
class DissimilarityMatrix {
public:
  DissimilarityMatrix() = default;

  /// General rectangular matrix. Throws std::invalid_argument if
  /// values.size() != rows * cols, or if square_training is requested
  /// for a non-square shape.
  DissimilarityMatrix(std::size_t rows, std::size_t cols,
                      std::vector<double> values, bool square_training = false);

  /// Convenience constructor for an n x n training matrix.
  static DissimilarityMatrix square_training(std::size_t n,
                                             std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square_training() const { return square_training_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t row, std::size_t col) const {
    return values_[row * cols_ + col];
  }
  double& operator()(std::size_t row, std::size_t col) {
    return values_[row * cols_ + col];
  }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }

  const std::vector<double>& values() const { return values_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool square_training_ = false;
  std::vector<double> values_;
};

/// What a single matrix entry (or the matrix as a whole) does wrong.
enum class ViolationKind {
  empty_matrix,     // no rows or no columns
  negative_value,   // D < 0
  not_finite,       // NaN or infinity
  nonzero_diagonal, // D(x,x) != 0 on a square training matrix
};

struct Violation {
  ViolationKind kind;
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  /// Human-readable one-liner, e.g. "negative value -0.5 at (0,1)".
  std::string describe() const;
};

/// Checks every entry against the value requirements: finite, non-negative,
/// not NaN, and (for square training matrices) an exactly zero diagonal.
/// Returns an empty vector when the matrix is acceptable. An empty matrix is
/// itself a violation. Violations are listed in row-major entry order.
std::vector<Violation> validate_matrix(const DissimilarityMatrix& m);

/// True iff D(center_row, other_col) < eps. The inequality is strict: an
/// object exactly eps away is outside the neighbourhood. Throws
/// std::invalid_argument when eps <= 0 or an index is out of range.
bool neighbourhood_contains(const DissimilarityMatrix& m, std::size_t center_row,
                            std::size_t other_col, double eps);

} // namespace gapnn
