#include "feec/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace feec {

namespace {

std::string axis_name(int axis, int n) {
  if (n <= 3) return std::string(1, static_cast<char>('x' + axis));
  return "x" + std::to_string(axis + 1);
}

}  // namespace

Face::Face(int n, std::vector<FaceConstraint> constraints) : n_(n), constraints_(std::move(constraints)) {
  std::sort(constraints_.begin(), constraints_.end());
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    if (c.axis < 0 || c.axis >= n) throw std::invalid_argument("face constraint axis out of range");
    if (c.value != 1 && c.value != -1) throw std::invalid_argument("face constraint value must be +1 or -1");
    if (i > 0 && constraints_[i - 1].axis == c.axis)
      throw std::invalid_argument("face constrains the same axis twice");
  }
}

bool Face::fixes(int axis) const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [axis](const FaceConstraint& c) { return c.axis == axis; });
}

std::vector<int> Face::free_axes() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (!fixes(i)) out.push_back(i);
  return out;
}

std::string Face::to_string() const {
  if (constraints_.empty()) return "interior";
  std::string s = "{";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (i) s += ", ";
    s += axis_name(constraints_[i].axis, n_) + "=" + std::to_string(constraints_[i].value);
  }
  return s + "}";
}

std::vector<Face> faces_of_cube(int n, int dim) {
  if (n < 0 || dim < 0 || dim > n) throw std::invalid_argument("face dimension out of range");
  const int fixed = n - dim;
  std::vector<Face> out;
  for (const Alternator& axes : Alternator::all(fixed, n)) {
    for (int pattern = 0; pattern < (1 << fixed); ++pattern) {
      std::vector<FaceConstraint> cs;
      for (int p = 0; p < fixed; ++p) {
        const bool minus = (pattern >> (fixed - 1 - p)) & 1;
        cs.push_back({axes.axes()[p], minus ? -1 : 1});
      }
      out.emplace_back(n, std::move(cs));
    }
  }
  return out;
}

DifferentialForm trace(const DifferentialForm& w, const Face& f) {
  if (w.ambient_dim() != f.ambient_dim()) throw std::invalid_argument("face and form ambient dimension differ");
  DifferentialForm result(w.ambient_dim(), w.order());
  for (const auto& [sigma, p] : w.components()) {
    bool dropped = false;
    Polynomial q = p;
    for (const auto& c : f.constraints()) {
      if (sigma.contains(c.axis)) {
        dropped = true;
        break;
      }
      q = q.substitute(c.axis, c.value);
    }
    if (!dropped) result.add_component(sigma, q);
  }
  return result;
}

std::vector<Face> supporting_faces(const DifferentialForm& w, int dim) {
  std::vector<Face> out;
  for (const Face& f : faces_of_cube(w.ambient_dim(), dim))
    if (!trace(w, f).is_zero()) out.push_back(f);
  return out;
}

int min_trace_dim(const DifferentialForm& w) {
  if (w.is_zero()) throw std::domain_error("minimum trace dimension undefined for the zero form");
  for (int d = std::min(w.order(), w.ambient_dim()); d <= w.ambient_dim(); ++d)
    if (!supporting_faces(w, d).empty()) return d;
  return w.ambient_dim();
}

}  // namespace feec
