#pragma once

#include <vector>

namespace manyopt {

/// A point on the unit simplex: components are non-negative and sum to 1.
struct WeightVector {
  std::vector<double> components;
};

/// A set of weight vectors, one subproblem each, with optional per-vector
/// neighbor lists (filled in by build_neighborhoods).
struct WeightSet {
  std::vector<WeightVector> vectors;
  /// neighborhoods[i] holds neighborhood_size indices into `vectors`, sorted
  /// by ascending included angle to vector i (ties by ascending index).
  /// Vector i is always its own first neighbor. Empty until built.
  std::vector<std::vector<int>> neighborhoods;
  int objectives = 0;
  int neighborhood_size = 0;

  int size() const { return static_cast<int>(vectors.size()); }
};

/// Systematic sampling on the unit simplex: every vector whose components are
/// multiples of 1/divisions and sum to 1, enumerated in ascending
/// lexicographic order of the component tuple. Produces
/// C(divisions + objectives - 1, objectives - 1) vectors.
WeightSet generate_simplex_lattice(int objectives, int divisions);

/// Two-layer construction for high objective counts: a boundary lattice kept
/// as-is, followed by an inside lattice with every component shrunk toward
/// the simplex centroid: v = (1 - shrinkage)/objectives + shrinkage * w.
WeightSet generate_two_layer(int objectives, int boundary_divisions,
                             int inside_divisions, double shrinkage);

/// Included angle between the neighborhood owner and a candidate vector, in
/// radians. Computed as atan2 of the projection residual against the
/// projection length, which stays well-defined at orthogonal pairs.
double included_angle(const WeightVector& owner, const WeightVector& candidate);

/// Attach neighbor lists to every vector: the neighborhood_size indices with
/// the smallest included angle, ties broken by ascending index.
WeightSet build_neighborhoods(WeightSet set, int neighborhood_size);

}  // namespace manyopt
