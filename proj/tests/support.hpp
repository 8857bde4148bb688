// Independent reference computations used by the tests. Nothing here calls
// into the library except for plain data types.
#ifndef ALCOVED_TESTS_SUPPORT_HPP
#define ALCOVED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>
#include <vector>

#include "alcoved/rational.hpp"

namespace testsupport {

using alcoved::Integer;

/// A(n, k): permutations of [n] with k descents.
inline Integer eulerian(int n, int k) {
  std::vector<std::vector<Integer>> a(n + 1, std::vector<Integer>(n + 1, 0));
  a[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 0; j < m; ++j) {
      a[m][j] = (j + 1) * a[m - 1][j];
      if (j > 0) a[m][j] += (m - j) * a[m - 1][j - 1];
    }
  }
  return (k < 0 || k > n) ? Integer(0) : a[n][k];
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Stirling numbers of the second kind.
inline Integer stirling2(int n, int k) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return s[n][k];
}

/// Number of y in Z_{>=0}^w.size() with sum w_i y_i == t and y_i >= lower_i.
inline Integer weighted_compositions(const std::vector<long>& w, const std::vector<long>& lower, long t) {
  long rest = t;
  for (size_t i = 0; i < w.size(); ++i) rest -= w[i] * lower[i];
  if (rest < 0) return 0;
  std::vector<Integer> ways(rest + 1, 0);
  ways[0] = 1;
  for (long wi : w) {
    for (long s = wi; s <= rest; ++s) ways[s] += ways[s - wi];
  }
  return ways[rest];
}

/// Lattice points of t * Delta_{k,n}: x in [0,t]^n with sum kt.
inline Integer hypersimplex_points(int k, int n, long t) {
  std::vector<Integer> ways(k * t + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(k * t + 1, 0);
    for (long s = 0; s <= k * t; ++s) {
      if (ways[s] == 0) continue;
      for (long x = 0; x <= t && s + x <= k * t; ++x) next[s + x] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[k * t];
}

/// h* coefficients of a lattice polytope of dimension dim, from L(0..dim).
inline std::vector<Integer> h_star_from_counts(const std::vector<Integer>& counts, int dim) {
  std::vector<Integer> h(dim + 1, 0);
  for (int d = 0; d <= dim; ++d) {
    for (int j = 0; j <= d; ++j) {
      Integer term = binomial(dim + 1, j) * counts[d - j];
      h[d] += (j % 2 == 0) ? term : Integer(-term);
    }
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

/// Unweighted single-source distances; -1 where unreachable.
inline std::vector<long> bfs_distances(const std::vector<std::vector<size_t>>& adj, size_t src) {
  std::vector<long> d(adj.size(), -1);
  std::queue<size_t> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    size_t u = q.front();
    q.pop();
    for (size_t v : adj[u]) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

struct WEdge {
  size_t u, v;
  long w;
};

/// Brute-force isomorphism of small edge-weighted graphs.
inline bool weighted_isomorphic(size_t n, const std::vector<WEdge>& a, const std::vector<WEdge>& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const std::vector<WEdge>& es, const std::vector<size_t>& perm) {
    std::vector<std::tuple<size_t, size_t, long>> out;
    for (const auto& e : es) {
      size_t x = perm[e.u], y = perm[e.v];
      out.emplace_back(std::min(x, y), std::max(x, y), e.w);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<size_t> id(n), perm(n);
  std::iota(id.begin(), id.end(), 0);
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = key(b, id);
  do {
    if (key(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testsupport

#endif  // ALCOVED_TESTS_SUPPORT_HPP
