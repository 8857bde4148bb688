#include "alcoved/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace alcoved {

Family parse_family(const std::string& name) {
  if (name.size() == 1) {
    switch (name[0]) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'E': return Family::E;
      case 'F': return Family::F;
      case 'G': return Family::G;
      default: break;
    }
  }
  throw InputError("unknown root system family '" + name + "'");
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string RootSystemData::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

bool valid_type(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

// Symmetric Gram matrix of the simple roots, scaled to integers.
std::vector<IntVector> simple_gram(Family f, int n) {
  std::vector<IntVector> g(n, IntVector(n, 0));
  auto link = [&](int i, int j, long v) { g[i][j] = g[j][i] = v; };
  switch (f) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystemData build_root_system(Family family, int rank) {
  if (!valid_type(family, rank)) {
    throw DomainError("unsupported type " + std::string(1, family_letter(family)) +
                      std::to_string(rank));
  }
  const int n = rank;
  RootSystemData rs;
  rs.family = family;
  rs.rank = n;

  auto gram = simple_gram(family, n);
  rs.cartan.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rs.cartan[i][j] = 2 * gram[i][j] / gram[j][j];
  }
  const auto& C = rs.cartan;

  // Closure of the simple roots under simple reflections, tracking the coroot
  // coefficients alongside the root coefficients.
  std::map<IntVector, IntVector> coroot_of;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    coroot_of[e] = e;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector c = queue.front();
    queue.pop_front();
    const IntVector cv = coroot_of[c];
    for (int i = 0; i < n; ++i) {
      long pair = 0;  // (alpha, alpha_i^vee)
      for (int j = 0; j < n; ++j) pair += c[j] * C[j][i];
      long copair = 0;  // (alpha^vee, alpha_i)
      for (int j = 0; j < n; ++j) copair += C[i][j] * cv[j];
      IntVector c2 = c, cv2 = cv;
      c2[i] -= pair;
      cv2[i] -= copair;
      if (std::any_of(c2.begin(), c2.end(), [](long v) { return v < 0; })) continue;
      if (std::all_of(c2.begin(), c2.end(), [](long v) { return v == 0; })) continue;
      if (coroot_of.emplace(c2, cv2).second) queue.push_back(c2);
    }
  }

  for (const auto& [c, cv] : coroot_of) {
    PosRoot r;
    r.c = c;
    r.d.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r.d[i] += C[i][j] * cv[j];
    }
    r.height = std::accumulate(c.begin(), c.end(), 0L);
    rs.positive_roots.push_back(std::move(r));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const PosRoot& a, const PosRoot& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.c > b.c;
            });

  rs.theta_index = rs.positive_roots.size() - 1;
  rs.marks = rs.theta().c;
  rs.ell.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) rs.ell[i + 1] = rs.marks[i];
  rs.h_dual = 1 + std::accumulate(rs.marks.begin(), rs.marks.end(), 0L);
  return rs;
}

Rational eval_form(const PosRoot& root, const Point& p) { return dot(root.c, p); }

Point reflect(const Point& p, const PosRoot& root, long level) {
  Rational shift = dot(root.c, p) - level;
  Point out = p;
  if (shift == 0) return out;
  for (size_t i = 0; i < out.size(); ++i) {
    if (root.d[i] != 0) out[i] -= shift * root.d[i];
  }
  return out;
}

int euclidean_dimension(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return rank;
    case Family::G: return 3;
    default: break;
  }
  throw DomainError("no Euclidean embedding for family " + std::string(1, family_letter(family)));
}

Point to_omega_coords(Family family, int rank, const Point& p) {
  const int dim = euclidean_dimension(family, rank);
  if (static_cast<int>(p.size()) != dim) {
    throw DomainError("expected " + std::to_string(dim) + " Euclidean coordinates, got " +
                      std::to_string(p.size()));
  }
  Point x(rank);
  if (family == Family::G) {
    x[0] = (p[0] - 2 * p[1] + p[2]) / 3;
    x[1] = p[1] - p[2];
    return x;
  }
  for (int i = 0; i + 1 < rank; ++i) x[i] = p[i] - p[i + 1];
  const int n = rank - 1;
  switch (family) {
    case Family::A: x[n] = p[n] - p[n + 1]; break;
    case Family::B: x[n] = p[n]; break;
    case Family::C: x[n] = 2 * p[n]; break;
    case Family::D: x[n] = p[n - 1] + p[n]; break;
    default: break;
  }
  return x;
}

}  // namespace alcoved
