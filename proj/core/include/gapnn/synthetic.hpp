#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gapnn/dataset.hpp"
#include "gapnn/dissimilarity_matrix.hpp"

namespace gapnn {

/// Bounded box in parameter space: the generating parameters of every object
/// of a family live inside it.
struct ParamSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  bool contains(std::span<const double> params) const;
};

/// An object drawn from a parametric family. `params` generate it; shape
/// families additionally carry the planar point set those parameters produce.
struct SyntheticObject {
  std::vector<double> params;
  std::vector<std::array<double, 2>> geometry; // empty for the box family
  std::string true_label;                      // "A" or "B"
};

enum class Family { box, shapes };
enum class Measure { euclidean_params, modified_hausdorff };

Family family_from_token(const std::string& token);
Measure measure_from_token(const std::string& token);
const char* family_token(Family f);
const char* measure_token(Measure m);

/// Default pairing: the box family with Euclidean distance on parameters,
/// the shape family with the modified Hausdorff distance on vertex sets.
Measure default_measure(Family f);

struct FamilySpec {
  Family family = Family::box;
  std::size_t per_class = 1;
  std::uint64_t seed = 0;
  Measure measure = Measure::euclidean_params;
};

/// Two planar point classes with disjoint parameter supports:
///   class A uniform over [0, 0.4] x [0, 1],
///   class B uniform over [0.6, 1] x [0, 1].
/// Under Euclidean distance on the parameters the support gap is exactly 0.2.
/// Class A objects come first, then class B; identical seeds reproduce
/// identical objects bit for bit (see README for the generator contract).
std::vector<SyntheticObject> generate_box_family(std::size_t per_class,
                                                 std::uint64_t seed);

/// Squares against equilateral triangles, as exact vertex coordinates:
///   class A: 4-vertex squares, side in [0.8, 1.2], rotation in [0, pi/2),
///   class B: 3-vertex triangles, circumradius in [0.8, 1.2],
///            rotation in [0, 2*pi/3),
/// all centred at the origin. The differing vertex counts are deliberate:
/// mean-of-min measures misbehave metrically on point sets of different
/// cardinality.
std::vector<SyntheticObject> generate_shape_family(std::size_t per_class,
                                                   std::uint64_t seed);

/// A train/test split drawn from one seeded stream: train class A, train
/// class B, test class A, test class B, in that order. Calling with
/// test_per_class == 0 reproduces generate_*_family exactly.
struct FamilySample {
  std::vector<SyntheticObject> train;
  std::vector<SyntheticObject> test;
};
FamilySample sample_family(const FamilySpec& spec, std::size_t test_per_class);

/// Parameter-space box of one class of a family (class A when `class_a`).
ParamSpace family_param_space(Family f, bool class_a);

/// max( mean_{a in p} min_{b in q} |a-b| , mean_{b in q} min_{a in p} |a-b| ).
/// Symmetric by construction, zero for identical sets, and famously not a
/// metric. Throws on an empty point set.
double modified_hausdorff(std::span<const std::array<double, 2>> p,
                          std::span<const std::array<double, 2>> q);

/// Pairwise dissimilarity of one object list under the given measure;
/// diagonal entries are exactly zero. Throws when the measure does not fit
/// the objects (modified_hausdorff needs geometry, euclidean_params needs
/// parameters).
LabeledDataset build_dissimilarity(const std::vector<SyntheticObject>& objects,
                                   Measure measure);

/// Rectangular test-by-train matrix under the same measure: one row per test
/// object, one column per training object.
DissimilarityMatrix cross_dissimilarity(const std::vector<SyntheticObject>& train,
                                        const std::vector<SyntheticObject>& test,
                                        Measure measure);

/// Empirical modulus of continuity of the measure along a parameter-space
/// segment, against a fixed reference object of the other class. Level k
/// (k = 1..steps) walks the segment in 2^k equal steps; max_diffs[k-1] is the
/// largest |D(x_{j+1}, y) - D(x_j, y)| seen at that level and step_sizes[k-1]
/// the parameter-space step length. For a continuous measure the max diff
/// shrinks with the step.
struct ContinuityProbe {
  std::vector<double> step_sizes;
  std::vector<double> max_diffs;
  /// max_diffs.back() / step_sizes.back(); for euclidean_params this is
  /// bounded by 1 (reverse triangle inequality).
  double max_ratio = 0.0;
};

/// Probes the family's class-A parameter box corner to corner. steps >= 2.
ContinuityProbe continuity_probe(const FamilySpec& spec, std::size_t steps);

/// Same probe along an explicit segment. Throws on a degenerate (zero
/// length) segment or a dimension mismatch.
ContinuityProbe continuity_probe_segment(const FamilySpec& spec,
                                         std::span<const double> from,
                                         std::span<const double> to,
                                         std::size_t steps);

} // namespace gapnn
