#include "alcoved/polytope.hpp"

#include <deque>
#include <set>

namespace alcoved {

namespace {

void validate(const AlcovedPolytope& p) {
  const auto& rs = p.rs;
  if (p.bounds.size() != rs.positive_roots.size()) throw DomainError("bounds size mismatch");
  for (int i = 0; i < rs.rank; ++i) {
    if (!p.bounds[rs.simple_index(i)]) {
      throw DomainError("possibly unbounded: no bound on simple root " + std::to_string(i + 1));
    }
  }
  for (size_t r = 0; r < p.bounds.size(); ++r) {
    if (p.bounds[r] && p.bounds[r]->lo >= p.bounds[r]->hi) {
      throw DomainError("empty or lower-dimensional: bound [" + std::to_string(p.bounds[r]->lo) +
                        ", " + std::to_string(p.bounds[r]->hi) + "] on root " + std::to_string(r));
    }
  }
}

}  // namespace

size_t root_index(const RootSystemData& rs, const IntVector& c) {
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    if (rs.positive_roots[r].c == c) return r;
  }
  std::string s;
  for (long v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
  throw DomainError("[" + s + "] is not a positive root of " + rs.name());
}

AlcovedPolytope from_bounds(const RootSystemData& rs, std::vector<std::optional<Bound>> bounds) {
  AlcovedPolytope p{rs, std::move(bounds), {}};
  validate(p);
  return p;
}

AlcovedPolytope from_bounds(const RootSystemData& rs, const std::vector<RootBound>& bounds) {
  std::vector<std::optional<Bound>> b(rs.positive_roots.size());
  for (const auto& rb : bounds) {
    size_t r = root_index(rs, rb.c);
    if (b[r]) throw DomainError("duplicate bound for root " + std::to_string(r));
    b[r] = rb.bound;
  }
  return from_bounds(rs, std::move(b));
}

AlcovedPolytope from_vertices(const RootSystemData& rs, const std::vector<Point>& vertices) {
  if (vertices.empty()) throw DomainError("empty vertex list");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != rs.rank) throw DomainError("vertex dimension mismatch");
  }
  std::vector<std::optional<Bound>> b(rs.positive_roots.size());
  for (size_t r = 0; r < b.size(); ++r) {
    Rational lo = eval_form(rs.positive_roots[r], vertices[0]), hi = lo;
    for (const auto& v : vertices) {
      Rational x = eval_form(rs.positive_roots[r], v);
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    b[r] = Bound{floor_of(lo).get_si(), ceil_of(hi).get_si()};
  }
  AlcovedPolytope p{rs, std::move(b), vertices};
  validate(p);
  return p;
}

AlcovedPolytope hypersimplex(int k, int n) {
  if (n < 3 || k < 1 || k > n - 1) {
    throw DomainError("hypersimplex needs n >= 3 and 1 <= k <= n-1");
  }
  auto rs = build_root_system(Family::A, n - 1);
  std::vector<Point> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Point v(n - 1);
    for (int i = 0; i + 1 < n; ++i) v[i] = (mask >> i) & 1u;
    verts.push_back(std::move(v));
  }
  return from_vertices(rs, verts);
}

AlcovedPolytope hypercube(int n) {
  if (n < 2) throw DomainError("hypercube needs n >= 2");
  auto rs = build_root_system(Family::A, n);
  std::vector<Point> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Point v(n);
    long prev = 0;
    for (int i = 0; i < n; ++i) {
      long y = (mask >> i) & 1u;
      v[i] = y - prev;
      prev = y;
    }
    verts.push_back(std::move(v));
  }
  return from_vertices(rs, verts);
}

AlcovedPolytope fundamental_polytope(const RootSystemData& rs) {
  return from_vertices(rs, fundamental_alcove(rs).vertices);
}

bool contains_alcove(const AlcovedPolytope& p, const IntVector& m) {
  for (size_t r = 0; r < p.bounds.size(); ++r) {
    if (!p.bounds[r]) continue;
    if (m[r] < p.bounds[r]->lo || m[r] + 1 > p.bounds[r]->hi) return false;
  }
  return true;
}

Alcove default_seed_alcove(const AlcovedPolytope& p, size_t cap) {
  const auto& rs = p.rs;
  const int n = rs.rank;
  if (!p.vertices.empty()) {
    Point c(n, Rational(0));
    for (const auto& v : p.vertices) {
      for (int i = 0; i < n; ++i) c[i] += v[i];
    }
    for (auto& x : c) x /= static_cast<long>(p.vertices.size());
    Alcove a = locate(rs, generic_nearby(rs, c));
    if (contains_alcove(p, a.m)) return a;
  }
  // Breadth-first search through the simple-root box for an alcove of P.
  AlcovedPolytope box{rs, std::vector<std::optional<Bound>>(rs.positive_roots.size()), {}};
  Point c(n);
  for (int i = 0; i < n; ++i) {
    const auto& b = *p.bounds[rs.simple_index(i)];
    box.bounds[rs.simple_index(i)] = b;
    c[i] = Rational(b.lo + b.hi, 2);
  }
  Alcove start = locate(rs, generic_nearby(rs, c));
  std::set<IntVector> seen{start.m};
  std::deque<Alcove> queue{start};
  while (!queue.empty()) {
    Alcove a = std::move(queue.front());
    queue.pop_front();
    if (contains_alcove(p, a.m)) return a;
    for (int t = 0; t <= n; ++t) {
      Alcove b = neighbor(rs, a, t);
      if (!contains_alcove(box, b.m) || !seen.insert(b.m).second) continue;
      if (seen.size() > cap) throw DomainError("polytope too large");
      queue.push_back(std::move(b));
    }
  }
  throw DomainError("no alcove inside polytope");
}

}  // namespace alcoved
