#include <doctest.h>

#include <map>

#include "feec/assembly.hpp"
#include "feec/form_io.hpp"
#include "support/spans.hpp"

using namespace feec;
using namespace feec::testing;

namespace {

DifferentialForm f3(const std::string& text) { return parse_form(text, 3); }

std::vector<DifferentialForm> forms_of(const std::vector<BasisElement>& elements) {
  std::vector<DifferentialForm> out;
  for (const auto& e : elements) out.push_back(e.form);
  return out;
}

std::size_t count_from(const AssociatedBasis& b, SubspaceKind kind) {
  return static_cast<std::size_t>(
      std::count_if(b.elements.begin(), b.elements.end(), [&](const auto& e) { return e.source.kind == kind; }));
}

// {trace(w, f)} for w in the 3D subspace, against the 2D subspace carried onto f's free axes.
bool trace_matches(const SubspaceId& cube, const SubspaceId& square, const Face& f) {
  SpanningSet traced{3, cube.k, {}, {}};
  for (const auto& e : subspace(cube)) traced.push(trace(e.form, f), "");
  SpanningSet carried{3, cube.k, {}, {}};
  const auto axes = f.free_axes();
  for (const auto& e : subspace(square)) carried.push(embed(e.form, 3, axes), "");
  return same_span(traced, carried);
}

}  // namespace

TEST_CASE("vertex functions") {
  const auto v = subspace({SubspaceKind::V, 0, 0, 3});
  CHECK(v.size() == 8);
  std::set<DifferentialForm> expected;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1}) {
        const auto lin = [](int axis, int s) {
          return Polynomial::variable(3, axis) + Polynomial::constant(3, s);
        };
        expected.insert(DifferentialForm::function(lin(0, a) * lin(1, b) * lin(2, c)));
      }
  CHECK(as_set(forms_of(v)) == expected);
  CHECK(v.front().form == f3("(x+1)(y+1)(z+1)"));
  CHECK(v.front().face == Face(3, {{0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("subspace sizes") {
  for (int r = 0; r <= 4; ++r) {
    CHECK(subspace({SubspaceKind::E_tilde, r, 1, 2}).size() == 4);
    CHECK(subspace({SubspaceKind::E_tilde, r, 1, 3}).size() == 12);
  }
  CHECK(subspace({SubspaceKind::F_tilde, 1, 2, 3}).size() == 12);
  CHECK(subspace({SubspaceKind::E, 0, 1, 3}).size() == 12);
}

TEST_CASE("edge functions of the lowest order serendipity 1-forms") {
  const auto e0 = forms_of(subspace({SubspaceKind::E, 0, 1, 3}));
  std::set<DifferentialForm> expected;
  for (const char* t : {"(y+1)(z+1) dx", "(y+1)(z-1) dx", "(y-1)(z+1) dx", "(y-1)(z-1) dx", "(x+1)(z+1) dy",
                        "(x+1)(z-1) dy", "(x-1)(z+1) dy", "(x-1)(z-1) dy", "(x+1)(y+1) dz", "(x+1)(y-1) dz",
                        "(x-1)(y+1) dz", "(x-1)(y-1) dz"})
    expected.insert(f3(t));
  CHECK(as_set(e0) == expected);
  CHECK(as_set(forms_of(subspace({SubspaceKind::E_tilde, 1, 1, 3})))
            .count(f3("2x(y+1)(z+1) dx + (z+1)(x^2-1) dy + (y+1)(x^2-1) dz")) == 1);
}

TEST_CASE("the omitted row of I_tilde 5 would make it dependent") {
  const SubspaceId id{SubspaceKind::I_tilde, 5, 1, 3};
  const auto set = make_set(3, 1, forms_of(subspace(id)));
  CHECK(span_rank(set) == set.size());
  auto with_row = set;
  with_row.push(f3("y(x^2-1)(z^2-1) dy - z(x^2-1)(y^2-1) dz"), "");
  CHECK(span_rank(with_row) < with_row.size());
  for (int i = 4; i <= 7; ++i) {
    const auto s = make_set(3, 1, forms_of(subspace({SubspaceKind::I_tilde, i, 1, 3})));
    CHECK(span_rank(s) == s.size());
  }
}

TEST_CASE("bubble subspaces vanish on the boundary") {
  for (int k = 0; k <= 3; ++k)
    for (auto kind : {SubspaceKind::I, SubspaceKind::I_tilde, SubspaceKind::I_tensor}) {
      if (!subspace_exists(kind, k, 3)) continue;
      for (int i = min_grade(kind, k, 3); i <= min_grade(kind, k, 3) + 3; ++i)
        for (const auto& e : subspace({kind, i, k, 3})) {
          CHECK(e.face == Face::interior(3));
          for (const auto& f : faces_of_cube(3, 2)) CHECK(trace(e.form, f).is_zero());
        }
    }
}

TEST_CASE("subspace validation") {
  CHECK(!subspace_exists(SubspaceKind::F_hat, 0, 3));
  CHECK(subspace_exists(SubspaceKind::F_hat, 1, 3));
  CHECK(!subspace_exists(SubspaceKind::I_tilde, 0, 3));
  CHECK(!subspace_exists(SubspaceKind::I, 1, 2));
  CHECK(min_grade(SubspaceKind::F, 0, 2) == 4);
  CHECK(min_grade(SubspaceKind::F, 1, 2) == 2);
  CHECK(min_grade(SubspaceKind::F, 2, 2) == 0);
  CHECK_THROWS_AS(subspace({SubspaceKind::F_hat, 3, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subspace({SubspaceKind::F, 3, 0, 2}), std::invalid_argument);
  CHECK(parse_subspace_kind("F_tilde") == SubspaceKind::F_tilde);
  CHECK_THROWS_AS(parse_subspace_kind("G"), std::invalid_argument);
}

TEST_CASE("trace restriction identities on the faces of the cube") {
  using K = SubspaceKind;
  for (const auto& f : faces_of_cube(3, 2)) {
    CAPTURE(f.to_string());
    for (int i = 0; i <= 4; ++i) {
      CAPTURE(i);
      CHECK(trace_matches({K::E, i, 1, 3}, {K::E, i, 1, 2}, f));
      CHECK(trace_matches({K::E_tilde, i, 1, 3}, {K::E_tilde, i, 1, 2}, f));
    }
    for (int r = 2; r <= 4; ++r) {
      CAPTURE(r);
      CHECK(trace_matches({K::F_hat, r, 1, 3}, {K::F, r, 1, 2}, f));
      CHECK(trace_matches({K::F_tilde, r, 1, 3}, {K::F_tilde, r, 1, 2}, f));
    }
  }
}

TEST_CASE("assembled sizes") {
  const auto s1 = assemble({Family::S, 1, 1, 3});
  CHECK(s1.elements.size() == 24);
  CHECK(count_from(s1, SubspaceKind::E) == 12);
  CHECK(count_from(s1, SubspaceKind::E_tilde) == 12);
  CHECK(assemble({Family::S, 2, 1, 3}).elements.size() == 48);
  const auto s22 = assemble({Family::S, 2, 2, 3});
  CHECK(s22.elements.size() == 39);
  CHECK(count_from(s22, SubspaceKind::F_tilde) == 18);
  CHECK(count_from(s22, SubspaceKind::I) == 3);
  CHECK(count_from(s22, SubspaceKind::F) == 18);
  CHECK(assemble({Family::Q_minus, 1, 0, 2}).elements.size() == 4);
  CHECK(assemble({Family::S_minus, 1, 2, 3}).elements.size() == 6);
}

TEST_CASE("assembled bases match the rank of their standard span") {
  for (auto family : {Family::Q_minus, Family::S, Family::S_minus})
    for (int n = 2; n <= 3; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = 1; r <= (n == 2 ? 3 : 2); ++r) {
          const FamilyId id{family, r, k, n};
          CAPTURE(to_string(id));
          CHECK(assemble(id).elements.size() == span_rank(standard_span(id)));
        }
}

TEST_CASE("element faces follow the table cell") {
  for (auto family : {Family::Q_minus, Family::S, Family::S_minus})
    for (int n = 2; n <= 3; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = 1; r <= 3; ++r) {
          const FamilyId id{family, r, k, n};
          CAPTURE(to_string(id));
          const auto cell = table_cell(id);
          const auto basis = assemble(id);
          int last_m = -1;
          for (const auto& e : basis.elements) {
            const auto s = std::find_if(cell.begin(), cell.end(), [&](const Summand& s) {
              return s.kind == e.source.kind && e.source.grade >= s.lo && e.source.grade <= s.hi;
            });
            REQUIRE(s != cell.end());
            CHECK(e.face.dim() == s->m);
            CHECK(s->m >= last_m);
            last_m = s->m;
          }
        }
}

TEST_CASE("every face of a given dimension carries the same number of elements") {
  for (auto family : {Family::Q_minus, Family::S, Family::S_minus})
    for (int n = 2; n <= 3; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = 1; r <= 3; ++r) {
          const FamilyId id{family, r, k, n};
          CAPTURE(to_string(id));
          std::map<Face, int> per_face;
          for (const auto& e : assemble(id).elements) ++per_face[associate_face(e.form)];
          for (int d = 0; d <= n; ++d) {
            std::set<int> counts;
            for (const auto& f : faces_of_cube(n, d)) counts.insert(per_face[f]);
            CHECK(counts.size() == 1);
          }
        }
}

TEST_CASE("hierarchical families") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::vector<FamilyId> ids;
      for (int k = 0; k <= n; ++k) ids.push_back({Family::Q_minus, r, k, n});
      ids.push_back({Family::S, r, 0, n});
      ids.push_back({Family::S, r, n, n});
      for (const auto& id : ids) {
        CAPTURE(to_string(id));
        const auto lower = as_set(forms_of(assemble(id).elements));
        const auto upper = as_set(forms_of(assemble({id.family, r + 1, id.k, n}).elements));
        CHECK(std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()));
      }
    }
}

TEST_CASE("associate face") {
  CHECK(associate_face(f3("(y+1)(z+1) dx")) == Face(3, {{1, 1}, {2, 1}}));
  CHECK(associate_face(f3("2x(y+1)(z+1) dx + (z+1)(x^2-1) dy + (y+1)(x^2-1) dz")) == Face(3, {{1, 1}, {2, 1}}));
  CHECK(associate_face(f3("(x^2-1)(y^2-1)(z^2-1)")) == Face::interior(3));
  CHECK_THROWS_WITH_AS(associate_face(f3("dx")), doctest::Contains("not a computational basis element"),
                       std::domain_error);
  CHECK_THROWS_AS(associate_face(DifferentialForm(3, 1)), std::domain_error);
}

TEST_CASE("family ids") {
  CHECK(to_string(Family::S_minus) == "s-");
  CHECK(parse_family("q-") == Family::Q_minus);
  CHECK_THROWS_AS(parse_family("t"), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::S, 1, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::S, 1, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::S, 0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(assemble({Family::S, 1, -1, 3}), std::invalid_argument);
  const FamilyId id{Family::S_minus, 3, 1, 3};
  CHECK(forms_of(assemble(id).elements) == forms_of(assemble(id).elements));
}
