#include "alcoved/oracle.hpp"

#include <algorithm>
#include <functional>

namespace alcoved {

namespace {

// Calls visit(x) for every integer vector x with lo[i] <= x[i] <= hi[i].
void for_each_in_box(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& visit) {
  const size_t n = lo.size();
  for (size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return;
  }
  IntVector x = lo;
  for (;;) {
    visit(x);
    size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++x[i];
  }
}

}  // namespace

Integer count_points(const AlcovedPolytope& p, long t) {
  if (t < 0) throw DomainError("dilation must be >= 0");
  const auto& rs = p.rs;
  IntVector lo(rs.rank), hi(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    const auto& b = *p.bounds[rs.simple_index(i)];
    lo[i] = t * b.lo;
    hi[i] = t * b.hi;
  }
  std::vector<std::pair<const IntVector*, Bound>> checks;
  for (size_t r = 0; r < p.bounds.size(); ++r) {
    if (p.bounds[r] && rs.positive_roots[r].height > 1) {
      checks.push_back({&rs.positive_roots[r].c, Bound{t * p.bounds[r]->lo, t * p.bounds[r]->hi}});
    }
  }
  long count = 0;
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    for (const auto& [c, b] : checks) {
      long v = dot(*c, x);
      if (v < b.lo || v > b.hi) return;
    }
    ++count;
  });
  return Integer(count);
}

Integer count_half_open_fundamental(const RootSystemData& rs, const std::set<int>& removed_types, long t) {
  if (t < 0) throw DomainError("dilation must be >= 0");
  for (int i : removed_types) {
    if (i < 0 || i > rs.rank) throw DomainError("vertex type out of range");
  }
  const auto& theta = rs.theta().c;
  IntVector lo(rs.rank, 0), hi(rs.rank);
  for (int i = 0; i < rs.rank; ++i) hi[i] = t / rs.marks[i];
  long count = 0;
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    long top = dot(theta, x);
    if (top > t) return;
    if (removed_types.count(0) && top == t) return;
    for (int i = 0; i < rs.rank; ++i) {
      if (x[i] == 0 && removed_types.count(i + 1)) return;
    }
    ++count;
  });
  return Integer(count);
}

bool CountReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.match; });
}

CountReport verify(const AlcovedPolytope& p, const RationalSeries& series, long T) {
  auto coeffs = expand(series, T);
  CountReport report;
  for (long t = 0; t <= T; ++t) {
    CountRow row{t, count_points(p, t), coeffs[t], false};
    row.match = row.oracle == row.series;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CountReport verify(const AlcovedPolytope& p, const std::optional<Point>& seed, long T) {
  if (T < 0) throw DomainError("T must be >= 0");
  return verify(p, ehrhart_series(p, seed), T);
}

PartitionResult partition_check(const AlcovedPolytope& p, const DualGraph& g, long t) {
  if (t < 0) throw DomainError("dilation must be >= 0");
  if (g.nodes.empty()) throw DomainError("partition check needs a graph with alcoves");
  const auto& rs = p.rs;
  const auto removed = half_open_decomposition(g);
  IntVector lo(rs.rank), hi(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    const auto& b = *p.bounds[rs.simple_index(i)];
    lo[i] = t * b.lo;
    hi[i] = t * b.hi;
  }
  PartitionResult result;
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    if (!result.ok) return;
    IntVector forms(rs.positive_roots.size());
    for (size_t r = 0; r < forms.size(); ++r) {
      forms[r] = dot(rs.positive_roots[r].c, x);
      if (p.bounds[r] && (forms[r] < t * p.bounds[r]->lo || forms[r] > t * p.bounds[r]->hi)) return;
    }
    ++result.points;
    long holders = 0;
    for (size_t v = 0; v < g.size(); ++v) {
      const auto& m = g.nodes[v].m;
      bool closed = true;
      for (size_t r = 0; r < forms.size() && closed; ++r) {
        closed = forms[r] >= t * m[r] && forms[r] <= t * (m[r] + 1);
      }
      if (!closed) continue;
      bool on_removed = std::any_of(removed[v].begin(), removed[v].end(), [&](const FacetSupport& f) {
        return forms[f.root_index] == t * f.level;
      });
      if (!on_removed) ++holders;
    }
    if (holders != 1) {
      result.ok = false;
      result.bad_point = x;
      result.bad_count = holders;
    }
  });
  return result;
}

}  // namespace alcoved
