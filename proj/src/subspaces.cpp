#include "feec/subspaces.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace feec {

namespace {

constexpr int X = 0, Y = 1, Z = 2;

// One summand of a table row:
//   coeff * x^exps * prod_{b in bubbles} (x_b^2 - 1) * prod_{a in linear} (x_a +- 1) dx_alt
// A negative exponent makes the summand vanish.
struct Piece {
  long coeff;
  std::vector<int> exps;
  std::vector<int> bubbles;
  std::vector<int> linear;
  Alternator alt;
};

// A concrete row.  Every (v +- 1) factor with the same v shares one sign.
using Row = std::vector<Piece>;

Piece p(long coeff, std::vector<int> exps, std::vector<int> bubbles, std::vector<int> linear, Alternator alt) {
  return {coeff, std::move(exps), std::move(bubbles), std::move(linear), std::move(alt)};
}

// Index tuples in [0, bound]^count, lexicographic, filtered by `keep`.
std::vector<std::vector<int>> tuples(int count, int bound, const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(count, 0);
  if (bound < 0) return out;
  while (true) {
    if (keep(t)) out.push_back(t);
    int i = count - 1;
    while (i >= 0 && t[i] == bound) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

int sum(const std::vector<int>& t) {
  int s = 0;
  for (int v : t) s += v;
  return s;
}

// max over t with entry `dec` (if >= 0) reduced by one.
int shifted_max(const std::vector<int>& t, std::initializer_list<int> dec) {
  int m = -1;
  for (std::size_t a = 0; a < t.size(); ++a) {
    int v = t[a];
    for (int d : dec)
      if (d == static_cast<int>(a)) --v;
    m = std::max(m, v);
  }
  return m;
}

using Template = std::function<Row(const std::vector<int>&)>;

void expand(std::vector<Row>& rows, int count, int bound, const std::function<bool(const std::vector<int>&)>& keep,
            const Template& make) {
  for (const auto& t : tuples(count, bound, keep)) rows.push_back(make(t));
}

std::vector<Row> rows_2d(SubspaceKind kind, int k, int i) {
  const Alternator A0, DX{X}, DY{Y}, DXDY{X, Y};
  std::vector<Row> rows;
  const int bound = i + 1;
  switch (k) {
    case 0:
      switch (kind) {
        case SubspaceKind::V:
          rows.push_back({p(1, {0, 0}, {}, {X, Y}, A0)});
          break;
        case SubspaceKind::E:
          rows.push_back({p(1, {0, i}, {Y}, {X}, A0)});
          rows.push_back({p(1, {i, 0}, {X}, {Y}, A0)});
          break;
        case SubspaceKind::F:
        case SubspaceKind::F_tensor: {
          const bool tensor = kind == SubspaceKind::F_tensor;
          expand(rows, 2, bound,
                 [&](const auto& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i - 4; },
                 [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {X, Y}, {}, A0)}; });
          break;
        }
        default:
          break;
      }
      break;
    case 1:
      switch (kind) {
        case SubspaceKind::E:
          rows.push_back({p(1, {i, 0}, {}, {Y}, DX)});
          rows.push_back({p(1, {0, i}, {}, {X}, DY)});
          break;
        case SubspaceKind::E_tilde:
          rows.push_back({p(i + 1, {i, 0}, {}, {Y}, DX), p(1, {i - 1, 0}, {X}, {}, DY)});
          rows.push_back({p(1, {0, i - 1}, {Y}, {}, DX), p(i + 1, {0, i}, {}, {X}, DY)});
          break;
        case SubspaceKind::F:
          expand(rows, 2, bound, [&](const auto& t) { return sum(t) == i - 2; },
                 [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {Y}, {}, DX)}; });
          expand(rows, 2, bound, [&](const auto& t) { return sum(t) == i - 2; },
                 [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {X}, {}, DY)}; });
          break;
        case SubspaceKind::F_tensor:
          expand(rows, 2, bound, [&](const auto& t) { return shifted_max(t, {X}) == i - 1; },
                 [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {Y}, {}, DX)}; });
          expand(rows, 2, bound, [&](const auto& t) { return shifted_max(t, {Y}) == i - 1; },
                 [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {X}, {}, DY)}; });
          break;
        case SubspaceKind::F_tilde:
          rows.push_back({p(1, {0, i - 2}, {Y}, {}, DX)});
          rows.push_back({p(1, {i - 2, 0}, {X}, {}, DY)});
          for (int j = 1; j <= i - 2; ++j)
            rows.push_back({p(1, {j, i - j - 2}, {Y}, {}, DX), p(-1, {j - 1, i - j - 1}, {X}, {}, DY)});
          break;
        default:
          break;
      }
      break;
    case 2:
      if (kind == SubspaceKind::F || kind == SubspaceKind::F_tensor) {
        const bool tensor = kind == SubspaceKind::F_tensor;
        expand(rows, 2, bound, [&](const auto& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i; },
               [&](const auto& t) { return Row{p(1, {t[0], t[1]}, {}, {}, DXDY)}; });
      }
      break;
  }
  return rows;
}

std::vector<Row> rows_3d_k0(SubspaceKind kind, int i) {
  const Alternator A0;
  std::vector<Row> rows;
  const int bound = i + 1;
  switch (kind) {
    case SubspaceKind::V:
      rows.push_back({p(1, {0, 0, 0}, {}, {X, Y, Z}, A0)});
      break;
    case SubspaceKind::E:
      rows.push_back({p(1, {0, 0, i}, {Z}, {X, Y}, A0)});
      rows.push_back({p(1, {0, i, 0}, {Y}, {X, Z}, A0)});
      rows.push_back({p(1, {i, 0, 0}, {X}, {Y, Z}, A0)});
      break;
    case SubspaceKind::F:
    case SubspaceKind::F_tensor: {
      const bool tensor = kind == SubspaceKind::F_tensor;
      auto keep = [&](const std::vector<int>& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i - 4; };
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], t[1], 0}, {X, Y}, {Z}, A0)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], 0, t[1]}, {X, Z}, {Y}, A0)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {0, t[0], t[1]}, {Y, Z}, {X}, A0)}; });
      break;
    }
    case SubspaceKind::I:
    case SubspaceKind::I_tensor: {
      const bool tensor = kind == SubspaceKind::I_tensor;
      expand(rows, 3, bound, [&](const auto& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i - 6; },
             [&](const auto& t) { return Row{p(1, {t[0], t[1], t[2]}, {X, Y, Z}, {}, A0)}; });
      break;
    }
    default:
      break;
  }
  return rows;
}

std::vector<Row> rows_3d_k1(SubspaceKind kind, int i) {
  const Alternator DX{X}, DY{Y}, DZ{Z};
  std::vector<Row> rows;
  const int bound = i + 1;

  // Face rows shared by F_hat and F_tilde.
  auto face_rows = [&] {
    rows.push_back({p(1, {0, i - 2, 0}, {Y}, {Z}, DX)});
    rows.push_back({p(1, {0, 0, i - 2}, {Z}, {Y}, DX)});
    rows.push_back({p(1, {i - 2, 0, 0}, {X}, {Z}, DY)});
    rows.push_back({p(1, {0, 0, i - 2}, {Z}, {X}, DY)});
    rows.push_back({p(1, {i - 2, 0, 0}, {X}, {Y}, DZ)});
    rows.push_back({p(1, {0, i - 2, 0}, {Y}, {X}, DZ)});
  };

  switch (kind) {
    case SubspaceKind::E:
      rows.push_back({p(1, {i, 0, 0}, {}, {Y, Z}, DX)});
      rows.push_back({p(1, {0, i, 0}, {}, {X, Z}, DY)});
      rows.push_back({p(1, {0, 0, i}, {}, {X, Y}, DZ)});
      break;
    case SubspaceKind::E_tilde:
      rows.push_back({p(i + 1, {i, 0, 0}, {}, {Y, Z}, DX), p(1, {i - 1, 0, 0}, {X}, {Z}, DY),
                      p(1, {i - 1, 0, 0}, {X}, {Y}, DZ)});
      rows.push_back({p(1, {0, i - 1, 0}, {Y}, {Z}, DX), p(i + 1, {0, i, 0}, {}, {X, Z}, DY),
                      p(1, {0, i - 1, 0}, {Y}, {X}, DZ)});
      rows.push_back({p(1, {0, 0, i - 1}, {Z}, {Y}, DX), p(1, {0, 0, i - 1}, {Z}, {X}, DY),
                      p(i + 1, {0, 0, i}, {}, {X, Y}, DZ)});
      break;
    case SubspaceKind::F:
    case SubspaceKind::F_tensor: {
      // t[0] is the exponent of the alternator variable, t[1] of the other one.
      const bool tensor = kind == SubspaceKind::F_tensor;
      auto keep = [&](const std::vector<int>& t) { return tensor ? shifted_max(t, {0}) == i - 1 : sum(t) == i - 2; };
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], t[1], 0}, {Y}, {Z}, DX)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], 0, t[1]}, {Z}, {Y}, DX)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[1], t[0], 0}, {X}, {Z}, DY)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {0, t[0], t[1]}, {Z}, {X}, DY)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[1], 0, t[0]}, {X}, {Y}, DZ)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {0, t[1], t[0]}, {Y}, {X}, DZ)}; });
      break;
    }
    case SubspaceKind::F_hat: {
      face_rows();
      const long c = i + 1;
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(c, {j, i - j - 2, 0}, {Y}, {Z}, DX), p(1, {j - 1, i - j - 2, 0}, {X, Y}, {}, DZ)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(c, {j, 0, i - j - 2}, {Z}, {Y}, DX), p(1, {j - 1, 0, i - j - 2}, {X, Z}, {}, DY)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {0, j - 1, i - j - 2}, {Y, Z}, {}, DX), p(c, {0, j, i - j - 2}, {Z}, {X}, DY)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(c, {i - j - 2, j, 0}, {X}, {Z}, DY), p(1, {i - j - 2, j - 1, 0}, {X, Y}, {}, DZ)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {i - j - 2, 0, j - 1}, {X, Z}, {}, DY), p(c, {i - j - 2, 0, j}, {X}, {Y}, DZ)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {0, i - j - 2, j - 1}, {Y, Z}, {}, DX), p(c, {0, i - j - 2, j}, {Y}, {X}, DZ)});
      break;
    }
    case SubspaceKind::F_tilde:
      face_rows();
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {j, i - j - 2, 0}, {Y}, {Z}, DX), p(-1, {j - 1, i - j - 1, 0}, {X}, {Z}, DY)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {j, 0, i - j - 2}, {Z}, {Y}, DX), p(-1, {j - 1, 0, i - j - 1}, {X}, {Y}, DZ)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {0, j, i - j - 2}, {Z}, {X}, DY), p(-1, {0, j - 1, i - j - 1}, {Y}, {X}, DZ)});
      break;
    case SubspaceKind::I:
    case SubspaceKind::I_tensor: {
      const bool tensor = kind == SubspaceKind::I_tensor;
      auto keep_for = [&](int axis) {
        return [&, axis](const std::vector<int>& t) {
          return tensor ? shifted_max(t, {axis}) == i - 1 : sum(t) == i - 4;
        };
      };
      expand(rows, 3, bound, keep_for(X), [&](const auto& t) { return Row{p(1, t, {Y, Z}, {}, DX)}; });
      expand(rows, 3, bound, keep_for(Y), [&](const auto& t) { return Row{p(1, t, {X, Z}, {}, DY)}; });
      expand(rows, 3, bound, keep_for(Z), [&](const auto& t) { return Row{p(1, t, {X, Y}, {}, DZ)}; });
      break;
    }
    case SubspaceKind::I_tilde:
      rows.push_back({p(1, {0, i - 4, 0}, {Y, Z}, {}, DX)});
      rows.push_back({p(1, {0, 0, i - 4}, {Y, Z}, {}, DX)});
      rows.push_back({p(1, {i - 4, 0, 0}, {X, Z}, {}, DY)});
      rows.push_back({p(1, {0, 0, i - 4}, {X, Z}, {}, DY)});
      rows.push_back({p(1, {i - 4, 0, 0}, {X, Y}, {}, DZ)});
      rows.push_back({p(1, {0, i - 4, 0}, {X, Y}, {}, DZ)});
      for (int j = 1; j <= i - 4; ++j)
        rows.push_back({p(1, {j, i - j - 4, 0}, {Y, Z}, {}, DX), p(-1, {j - 1, i - j - 3, 0}, {X, Z}, {}, DY)});
      for (int j = 1; j <= i - 4; ++j)
        rows.push_back({p(1, {j, 0, i - j - 4}, {Y, Z}, {}, DX), p(-1, {j - 1, 0, i - j - 3}, {X, Y}, {}, DZ)});
      if (i != 5)
        for (int j = 1; j <= i - 4; ++j)
          rows.push_back({p(1, {0, j, i - j - 4}, {X, Z}, {}, DY), p(-1, {0, j - 1, i - j - 3}, {X, Y}, {}, DZ)});
      break;
    default:
      break;
  }
  return rows;
}

std::vector<Row> rows_3d_k2(SubspaceKind kind, int i) {
  const Alternator DYDZ{Y, Z}, DXDZ{X, Z}, DXDY{X, Y};
  std::vector<Row> rows;
  const int bound = i + 1;
  switch (kind) {
    case SubspaceKind::F:
    case SubspaceKind::F_tensor: {
      const bool tensor = kind == SubspaceKind::F_tensor;
      auto keep = [&](const std::vector<int>& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i; };
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {0, t[0], t[1]}, {}, {X}, DYDZ)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], 0, t[1]}, {}, {Y}, DXDZ)}; });
      expand(rows, 2, bound, keep, [&](const auto& t) { return Row{p(1, {t[0], t[1], 0}, {}, {Z}, DXDY)}; });
      break;
    }
    case SubspaceKind::F_tilde: {
      const long c = i + 1, c2 = i + 2;
      rows.push_back({p(c, {0, i, 0}, {}, {X}, DYDZ), p(1, {0, i - 1, 0}, {Y}, {}, DXDZ)});
      rows.push_back({p(c, {0, 0, i}, {}, {X}, DYDZ), p(-1, {0, 0, i - 1}, {Z}, {}, DXDY)});
      rows.push_back({p(1, {i - 1, 0, 0}, {X}, {}, DYDZ), p(c, {i, 0, 0}, {}, {Y}, DXDZ)});
      rows.push_back({p(c, {0, 0, i}, {}, {Y}, DXDZ), p(1, {0, 0, i - 1}, {Z}, {}, DXDY)});
      rows.push_back({p(-1, {i - 1, 0, 0}, {X}, {}, DYDZ), p(c, {i, 0, 0}, {}, {Z}, DXDY)});
      rows.push_back({p(1, {0, i - 1, 0}, {Y}, {}, DXDZ), p(c, {0, i, 0}, {}, {Z}, DXDY)});
      for (int j = 1; j <= i - 1; ++j)
        rows.push_back({p(c2, {0, j, i - j}, {}, {X}, DYDZ), p(1, {0, j - 1, i - j}, {Y}, {}, DXDZ),
                        p(-1, {0, j, i - j - 1}, {Z}, {}, DXDY)});
      for (int j = 1; j <= i - 1; ++j)
        rows.push_back({p(1, {j - 1, 0, i - j}, {X}, {}, DYDZ), p(c2, {j, 0, i - j}, {}, {Y}, DXDZ),
                        p(1, {j, 0, i - j - 1}, {Z}, {}, DXDY)});
      for (int j = 1; j <= i - 1; ++j)
        rows.push_back({p(-1, {j - 1, i - j, 0}, {X}, {}, DYDZ), p(1, {j, i - j - 1, 0}, {Y}, {}, DXDZ),
                        p(c2, {j, i - j, 0}, {}, {Z}, DXDY)});
      break;
    }
    case SubspaceKind::I:
    case SubspaceKind::I_tensor: {
      const bool tensor = kind == SubspaceKind::I_tensor;
      auto keep_for = [&](std::initializer_list<int> dec) {
        std::vector<int> d(dec);
        return [&, d](const std::vector<int>& t) {
          if (!tensor) return sum(t) == i - 2;
          int m = -1;
          for (int a = 0; a < 3; ++a) m = std::max(m, t[a] - static_cast<int>(std::count(d.begin(), d.end(), a)));
          return m == i - 1;
        };
      };
      expand(rows, 3, bound, keep_for({Y, Z}), [&](const auto& t) { return Row{p(1, t, {X}, {}, DYDZ)}; });
      expand(rows, 3, bound, keep_for({X, Z}), [&](const auto& t) { return Row{p(1, t, {Y}, {}, DXDZ)}; });
      expand(rows, 3, bound, keep_for({X, Y}), [&](const auto& t) { return Row{p(1, t, {Z}, {}, DXDY)}; });
      break;
    }
    case SubspaceKind::I_tilde:
      rows.push_back({p(1, {i - 2, 0, 0}, {X}, {}, DYDZ)});
      rows.push_back({p(1, {0, i - 2, 0}, {Y}, {}, DXDZ)});
      rows.push_back({p(1, {0, 0, i - 2}, {Z}, {}, DXDY)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {i - j - 2, j, 0}, {X}, {}, DYDZ), p(-1, {i - j - 1, j - 1, 0}, {Y}, {}, DXDZ)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {i - j - 2, 0, j}, {X}, {}, DYDZ), p(1, {i - j - 1, 0, j - 1}, {Z}, {}, DXDY)});
      for (int j = 1; j <= i - 2; ++j)
        rows.push_back({p(1, {0, i - j - 2, j}, {Y}, {}, DXDZ), p(-1, {0, i - j - 1, j - 1}, {Z}, {}, DXDY)});
      expand(rows, 3, bound, [&](const auto& t) { return t[1] >= 1 && t[2] >= 1 && sum(t) == i - 2; },
             [&](const auto& t) {
               return Row{p(1, {t[0], t[1], t[2]}, {X}, {}, DYDZ),
                          p(-1, {t[0] + 1, t[1] - 1, t[2]}, {Y}, {}, DXDZ),
                          p(1, {t[0] + 1, t[1], t[2] - 1}, {Z}, {}, DXDY)};
             });
      break;
    default:
      break;
  }
  return rows;
}

std::vector<Row> rows_3d_k3(SubspaceKind kind, int i) {
  const Alternator DXDYDZ{X, Y, Z};
  std::vector<Row> rows;
  if (kind == SubspaceKind::I || kind == SubspaceKind::I_tensor) {
    const bool tensor = kind == SubspaceKind::I_tensor;
    expand(rows, 3, i + 1, [&](const auto& t) { return tensor ? shifted_max(t, {}) == i - 1 : sum(t) == i; },
           [&](const auto& t) { return Row{p(1, t, {}, {}, DXDYDZ)}; });
  }
  return rows;
}

// Expands one row into its sign variants.
void instantiate(const Row& row, int n, int k, const SubspaceId& id, std::vector<BasisElement>& out) {
  std::vector<int> slots;
  for (const Piece& piece : row)
    for (int a : piece.linear)
      if (std::find(slots.begin(), slots.end(), a) == slots.end()) slots.push_back(a);
  std::sort(slots.begin(), slots.end());
  const int s = static_cast<int>(slots.size());
  for (int pattern = 0; pattern < (1 << s); ++pattern) {
    std::vector<int> sign(n, 0);
    std::vector<FaceConstraint> constraints;
    for (int t = 0; t < s; ++t) {
      const int v = ((pattern >> (s - 1 - t)) & 1) ? -1 : 1;
      sign[slots[t]] = v;
      constraints.push_back({slots[t], v});
    }
    DifferentialForm w(n, k);
    for (const Piece& piece : row) {
      if (std::any_of(piece.exps.begin(), piece.exps.end(), [](int e) { return e < 0; })) continue;
      Polynomial poly = Polynomial::monomial(ExponentVector(piece.exps), piece.coeff);
      for (int b : piece.bubbles) poly *= Polynomial::power(n, b, 2) - Polynomial::constant(n, 1);
      for (int a : piece.linear) poly *= Polynomial::variable(n, a) + Polynomial::constant(n, sign[a]);
      w.add_component(piece.alt, poly);
    }
    if (!w.is_zero()) out.push_back({std::move(w), Face(n, std::move(constraints)), id});
  }
}

}  // namespace

std::string to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::V: return "V";
    case SubspaceKind::E: return "E";
    case SubspaceKind::E_tilde: return "E_tilde";
    case SubspaceKind::F: return "F";
    case SubspaceKind::F_hat: return "F_hat";
    case SubspaceKind::F_tilde: return "F_tilde";
    case SubspaceKind::F_tensor: return "F_tensor";
    case SubspaceKind::I: return "I";
    case SubspaceKind::I_tilde: return "I_tilde";
    case SubspaceKind::I_tensor: return "I_tensor";
  }
  return "?";
}

SubspaceKind parse_subspace_kind(const std::string& name) {
  for (auto kind : {SubspaceKind::V, SubspaceKind::E, SubspaceKind::E_tilde, SubspaceKind::F, SubspaceKind::F_hat,
                    SubspaceKind::F_tilde, SubspaceKind::F_tensor, SubspaceKind::I, SubspaceKind::I_tilde,
                    SubspaceKind::I_tensor})
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown subspace kind \"" + name + "\"");
}

std::string to_string(const SubspaceId& id) {
  std::string s = to_string(id.kind);
  if (id.kind != SubspaceKind::V) s += "_" + std::to_string(id.grade);
  return s + " Lambda^" + std::to_string(id.k) + "(cube_" + std::to_string(id.n) + ")";
}

bool subspace_exists(SubspaceKind kind, int k, int n) {
  using K = SubspaceKind;
  if (n == 2) {
    switch (k) {
      case 0: return kind == K::V || kind == K::E || kind == K::F || kind == K::F_tensor;
      case 1: return kind == K::E || kind == K::E_tilde || kind == K::F || kind == K::F_tensor || kind == K::F_tilde;
      case 2: return kind == K::F || kind == K::F_tensor;
      default: return false;
    }
  }
  if (n == 3) {
    switch (k) {
      case 0:
        return kind == K::V || kind == K::E || kind == K::F || kind == K::F_tensor || kind == K::I ||
               kind == K::I_tensor;
      case 1: return kind != K::V;
      case 2:
        return kind == K::F || kind == K::F_tensor || kind == K::F_tilde || kind == K::I || kind == K::I_tensor ||
               kind == K::I_tilde;
      case 3: return kind == K::I || kind == K::I_tensor;
      default: return false;
    }
  }
  return false;
}

int min_grade(SubspaceKind kind, int k, int n) {
  if (!subspace_exists(kind, k, n))
    throw std::invalid_argument("no subspace " + to_string(kind) + " for k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  switch (kind) {
    case SubspaceKind::V:
    case SubspaceKind::E:
    case SubspaceKind::E_tilde: return 0;
    case SubspaceKind::F_tensor:
    case SubspaceKind::I_tensor: return 1;
    case SubspaceKind::F_hat: return 2;
    case SubspaceKind::F: return k == 0 ? 4 : k == 1 ? 2 : 0;
    case SubspaceKind::F_tilde: return k == 1 ? 2 : 1;
    case SubspaceKind::I: return k == 0 ? 6 : k == 1 ? 4 : k == 2 ? 2 : 0;
    case SubspaceKind::I_tilde: return k == 1 ? 4 : 2;
  }
  return 0;
}

std::vector<BasisElement> subspace(const SubspaceId& id) {
  if (id.grade < min_grade(id.kind, id.k, id.n))
    throw std::invalid_argument("grade " + std::to_string(id.grade) + " below the minimum for " +
                                to_string(id.kind));
  std::vector<Row> rows;
  if (id.n == 2) {
    rows = rows_2d(id.kind, id.k, id.grade);
  } else {
    switch (id.k) {
      case 0: rows = rows_3d_k0(id.kind, id.grade); break;
      case 1: rows = rows_3d_k1(id.kind, id.grade); break;
      case 2: rows = rows_3d_k2(id.kind, id.grade); break;
      default: rows = rows_3d_k3(id.kind, id.grade); break;
    }
  }
  std::vector<BasisElement> raw;
  for (const Row& row : rows) instantiate(row, id.n, id.k, id, raw);
  std::vector<BasisElement> out;
  std::set<DifferentialForm> seen;
  for (auto& e : raw)
    if (seen.insert(e.form).second) out.push_back(std::move(e));
  return out;
}

}  // namespace feec
