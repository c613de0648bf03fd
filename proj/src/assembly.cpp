#include "feec/assembly.hpp"

#include <algorithm>
#include <stdexcept>

namespace feec {

std::string to_string(Family family) {
  switch (family) {
    case Family::Q_minus: return "q-";
    case Family::S: return "s";
    case Family::S_minus: return "s-";
  }
  return "?";
}

Family parse_family(const std::string& token) {
  if (token == "q-") return Family::Q_minus;
  if (token == "s") return Family::S;
  if (token == "s-") return Family::S_minus;
  throw std::invalid_argument("unknown family \"" + token + "\" (expected q-, s or s-)");
}

std::string to_string(const FamilyId& id) {
  static const char* names[] = {"Q-", "S", "S-"};
  return std::string(names[static_cast<int>(id.family)]) + "_" + std::to_string(id.r) + " Lambda^" +
         std::to_string(id.k) + "(cube_" + std::to_string(id.n) + ")";
}

void validate(const FamilyId& id) {
  if (id.n != 2 && id.n != 3) throw std::invalid_argument("n must be 2 or 3");
  if (id.k < 0 || id.k > id.n) throw std::invalid_argument("k must lie in 0.." + std::to_string(id.n));
  if (id.r < 1) throw std::invalid_argument("r must be at least 1");
}

std::vector<Summand> table_cell(const FamilyId& id) {
  validate(id);
  using K = SubspaceKind;
  const int r = id.r;
  const int n = id.n;
  const int k = id.k;
  switch (id.family) {
    case Family::Q_minus:
      if (n == 2) {
        if (k == 0) return {{0, K::V, 0, 0}, {1, K::E, 0, r - 2}, {2, K::F_tensor, 1, r - 1}};
        if (k == 1) return {{1, K::E, 0, r - 1}, {2, K::F_tensor, 1, r - 1}};
        return {{2, K::F_tensor, 1, r}};
      }
      if (k == 0)
        return {{0, K::V, 0, 0}, {1, K::E, 0, r - 2}, {2, K::F_tensor, 1, r - 1}, {3, K::I_tensor, 1, r - 1}};
      if (k == 1) return {{1, K::E, 0, r - 1}, {2, K::F_tensor, 1, r - 1}, {3, K::I_tensor, 1, r - 1}};
      if (k == 2) return {{2, K::F_tensor, 1, r}, {3, K::I_tensor, 1, r - 1}};
      return {{3, K::I_tensor, 1, r}};
    case Family::S:
    case Family::S_minus: {
      const bool trimmed = id.family == Family::S_minus;
      if (n == 2) {
        if (k == 0) return {{0, K::V, 0, 0}, {1, K::E, 0, r - 2}, {2, K::F, 4, r}};
        if (k == 1) {
          if (trimmed) return {{1, K::E, 0, r - 1}, {2, K::F, 2, r - 1}, {2, K::F_tilde, r, r}};
          return {{1, K::E, 0, r - 1}, {1, K::E_tilde, r, r}, {2, K::F, 2, r}};
        }
        return {{2, K::F, 0, trimmed ? r - 1 : r}};
      }
      if (k == 0) return {{0, K::V, 0, 0}, {1, K::E, 0, r - 2}, {2, K::F, 4, r}, {3, K::I, 6, r}};
      if (k == 1) {
        if (trimmed)
          return {{1, K::E, 0, r - 1}, {2, K::F, 2, r - 1}, {2, K::F_tilde, r, r}, {3, K::I, 4, r - 1},
                  {3, K::I_tilde, r, r}};
        return {{1, K::E, 0, r - 1}, {1, K::E_tilde, r, r}, {2, K::F, 2, r - 1}, {2, K::F_hat, r, r},
                {3, K::I, 4, r}};
      }
      if (k == 2) {
        if (trimmed) return {{2, K::F, 0, r - 1}, {3, K::I, 2, r - 1}, {3, K::I_tilde, r, r}};
        return {{2, K::F, 0, r - 1}, {2, K::F_tilde, r, r}, {3, K::I, 2, r}};
      }
      return {{3, K::I, 0, trimmed ? r - 1 : r}};
    }
  }
  return {};
}

namespace {

std::size_t face_index(const Face& f) {
  const auto faces = faces_of_cube(f.ambient_dim(), f.dim());
  return static_cast<std::size_t>(std::find(faces.begin(), faces.end(), f) - faces.begin());
}

}  // namespace

AssociatedBasis assemble(const FamilyId& id) {
  AssociatedBasis basis{id, {}};
  for (const Summand& s : table_cell(id)) {
    const int lo = std::max(s.lo, min_grade(s.kind, id.k, id.n));
    std::vector<BasisElement> part;
    for (int i = lo; i <= s.hi; ++i) {
      auto elems = subspace({s.kind, i, id.k, id.n});
      part.insert(part.end(), std::make_move_iterator(elems.begin()), std::make_move_iterator(elems.end()));
    }
    std::stable_sort(part.begin(), part.end(), [](const BasisElement& a, const BasisElement& b) {
      return face_index(a.face) < face_index(b.face);
    });
    basis.elements.insert(basis.elements.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  }
  return basis;
}

Face associate_face(const DifferentialForm& w) {
  if (w.is_zero()) throw std::domain_error("not a computational basis element: zero form");
  const int m = min_trace_dim(w);
  const auto faces = supporting_faces(w, m);
  if (faces.size() != 1)
    throw std::domain_error("not a computational basis element: " + std::to_string(faces.size()) +
                            " faces of dimension " + std::to_string(m) + " carry a nonzero trace");
  return faces.front();
}

SpanningSet standard_span(const FamilyId& id) {
  validate(id);
  switch (id.family) {
    case Family::Q_minus: return q_minus_span(id.r, id.k, id.n);
    case Family::S: return s_span(id.r, id.k, id.n);
    case Family::S_minus: return s_minus_span(id.r, id.k, id.n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace feec
