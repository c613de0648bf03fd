#pragma once

#include <compare>
#include <string>
#include <vector>

#include "feec/form.hpp"

namespace feec {

/// Fixes variable `axis` (0-based) to `value` (+1 or -1).
struct FaceConstraint {
  int axis;
  int value;
  auto operator<=>(const FaceConstraint&) const = default;
};

/// A face of the cube [-1,1]^n given by the coordinates it pins.  No
/// constraints means the cube itself.
class Face {
 public:
  Face() = default;
  Face(int n, std::vector<FaceConstraint> constraints);
  static Face interior(int n) { return Face(n, {}); }

  int ambient_dim() const { return n_; }
  int dim() const { return n_ - static_cast<int>(constraints_.size()); }
  const std::vector<FaceConstraint>& constraints() const { return constraints_; }
  bool fixes(int axis) const;
  /// Axes left free on this face, ascending.
  std::vector<int> free_axes() const;

  /// "{y=1, z=-1}" style label, "interior" for the whole cube.
  std::string to_string() const;

  auto operator<=>(const Face&) const = default;

 private:
  int n_ = 0;
  std::vector<FaceConstraint> constraints_;  // sorted by axis
};

/// Faces of dimension `dim`: fixed-axis sets ascending lexicographically, then
/// sign patterns with +1 before -1 (first fixed axis varies slowest).
std::vector<Face> faces_of_cube(int n, int dim);

/// Pullback onto f, kept in the n ambient variables.
DifferentialForm trace(const DifferentialForm& w, const Face& f);

/// Smallest face dimension carrying a nonzero trace.  Throws std::domain_error
/// for the zero form.
int min_trace_dim(const DifferentialForm& w);

/// Faces of the given dimension on which w has nonzero trace.
std::vector<Face> supporting_faces(const DifferentialForm& w, int dim);

}  // namespace feec
