#include "alcoved/alcove.hpp"

#include <optional>

namespace alcoved {

Point Alcove::barycenter() const {
  Point b(vertices.front().size(), Rational(0));
  for (const auto& v : vertices) {
    for (size_t i = 0; i < b.size(); ++i) b[i] += v[i];
  }
  for (auto& x : b) x /= static_cast<long>(vertices.size());
  return b;
}

Alcove fundamental_alcove(const RootSystemData& rs) {
  const int n = rs.rank;
  Alcove a;
  a.vertices.assign(n + 1, Point(n, Rational(0)));
  for (int i = 0; i < n; ++i) a.vertices[i + 1][i] = Rational(1, rs.marks[i]);
  a.m.assign(rs.positive_roots.size(), 0);
  return a;
}

IntVector m_vector_of(const RootSystemData& rs, const std::vector<Point>& vertices) {
  Alcove tmp{vertices, {}};
  Point b = tmp.barycenter();
  IntVector m(rs.positive_roots.size());
  for (size_t r = 0; r < m.size(); ++r) {
    m[r] = floor_of(eval_form(rs.positive_roots[r], b)).get_si();
  }
  return m;
}

FacetSupport facet_support(const RootSystemData& rs, const Alcove& a, int opposite_type) {
  const int n = rs.rank;
  if (opposite_type < 0 || opposite_type > n) throw DomainError("vertex type out of range");
  const int first = opposite_type == 0 ? 1 : 0;
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& root = rs.positive_roots[r];
    Rational level = eval_form(root, a.vertices[first]);
    if (!is_integer(level)) continue;
    bool on_plane = true;
    for (int t = 0; t <= n && on_plane; ++t) {
      if (t == opposite_type || t == first) continue;
      on_plane = eval_form(root, a.vertices[t]) == level;
    }
    if (!on_plane) continue;
    if (eval_form(root, a.vertices[opposite_type]) == level) continue;
    return FacetSupport{r, level.get_num().get_si(), opposite_type};
  }
  throw DomainError("malformed alcove: no supporting wall opposite vertex type " +
                    std::to_string(opposite_type));
}

Alcove neighbor(const RootSystemData& rs, const Alcove& a, int opposite_type) {
  FacetSupport f = facet_support(rs, a, opposite_type);
  Alcove b;
  b.vertices = a.vertices;
  b.vertices[opposite_type] = reflect(a.vertices[opposite_type], rs.positive_roots[f.root_index], f.level);
  b.m = m_vector_of(rs, b.vertices);
  return b;
}

bool on_wall(const RootSystemData& rs, const Point& p) {
  for (const auto& root : rs.positive_roots) {
    if (is_integer(eval_form(root, p))) return true;
  }
  return false;
}

namespace {

// Walks from `start` (interior of the fundamental alcove) toward p. Returns
// nullopt if the segment meets a face of codimension >= 2.
std::optional<Alcove> walk(const RootSystemData& rs, const Point& start, const Point& p,
                           std::vector<WalkStep>* trace) {
  const int n = rs.rank;
  Point dir(n);
  for (int i = 0; i < n; ++i) dir[i] = p[i] - start[i];
  Alcove a = fundamental_alcove(rs);
  Rational s_cur = 0;
  std::vector<WalkStep> steps;
  for (;;) {
    std::optional<Rational> best;
    int best_type = -1;
    bool tie = false;
    FacetSupport best_facet;
    int best_dir = 0;
    for (int t = 0; t <= n; ++t) {
      FacetSupport f = facet_support(rs, a, t);
      const auto& root = rs.positive_roots[f.root_index];
      Rational rate = dot(root.c, dir);
      if (rate == 0) continue;
      Rational s = (f.level - dot(root.c, start)) / rate;
      if (s <= s_cur) continue;
      if (!best || s < *best) {
        best = s;
        best_type = t;
        best_facet = f;
        best_dir = rate > 0 ? 1 : -1;
        tie = false;
      } else if (s == *best) {
        tie = true;
      }
    }
    if (!best || *best > 1) break;
    if (tie || *best == 1) return std::nullopt;
    steps.push_back({best_facet, best_dir});
    a = neighbor(rs, a, best_type);
    s_cur = *best;
  }
  if (trace) *trace = std::move(steps);
  return a;
}

}  // namespace

Alcove locate(const RootSystemData& rs, const Point& p, std::vector<WalkStep>* trace) {
  const int n = rs.rank;
  if (static_cast<int>(p.size()) != n) throw DomainError("dimension mismatch");
  if (on_wall(rs, p)) throw DomainError("point on wall " + to_string(p));
  const Alcove base = fundamental_alcove(rs);
  // Start points: weighted vertex averages with weights 3^{-r*type}.
  for (int attempt = 0; attempt <= n + 2; ++attempt) {
    Point start(n, Rational(0));
    Rational total = 0, w = 1;
    const Rational ratio(1, 3);
    Rational step = 1;
    for (int r = 0; r < attempt; ++r) step *= ratio;
    for (int t = 0; t <= n; ++t) {
      for (int i = 0; i < n; ++i) start[i] += w * base.vertices[t][i];
      total += w;
      w *= step;
    }
    for (auto& x : start) x /= total;
    if (auto found = walk(rs, start, p, trace)) return *found;
  }
  throw DomainError("alcove walk degenerate for point " + to_string(p));
}

Point generic_nearby(const RootSystemData& rs, const Point& p) {
  long max_height = 1;
  for (const auto& root : rs.positive_roots) max_height = std::max(max_height, root.height);
  Rational eps(1, 2 * max_height);
  for (const auto& root : rs.positive_roots) {
    Rational v = eval_form(root, p);
    if (is_integer(v)) continue;
    Rational below = v - Rational(floor_of(v));
    Rational gap = below < 1 - below ? below : 1 - below;
    Rational bound = gap / (2 * root.height);
    if (bound < eps) eps = bound;
  }
  Point q = p;
  for (auto& x : q) x += eps;
  return q;
}

}  // namespace alcoved
