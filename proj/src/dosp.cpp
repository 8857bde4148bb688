#include "alcoved/dosp.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace alcoved {

Dosp::Dosp(std::vector<std::vector<int>> bl, IntVector dec) : blocks(std::move(bl)), decorations(std::move(dec)) {
  if (blocks.empty() || blocks.size() != decorations.size()) {
    throw DomainError("a DOSP needs one decoration per block");
  }
  int total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError("DOSP blocks must be nonempty");
    std::sort(b.begin(), b.end());
    total += static_cast<int>(b.size());
  }
  std::vector<bool> seen(total + 1, false);
  size_t first = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) {
      if (x < 1 || x > total || seen[x]) throw DomainError("DOSP blocks must partition [n]");
      seen[x] = true;
      if (x == 1) first = i;
    }
  }
  for (long s : decorations) {
    if (s < 1) throw DomainError("DOSP decorations must be >= 1");
  }
  std::rotate(blocks.begin(), blocks.begin() + first, blocks.end());
  std::rotate(decorations.begin(), decorations.begin() + first, decorations.end());
}

int Dosp::n() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

long Dosp::k() const { return std::accumulate(decorations.begin(), decorations.end(), 0L); }

bool Dosp::is_hypersimplicial() const {
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (decorations[i] > static_cast<long>(blocks[i].size()) - 1) return false;
  }
  return true;
}

std::string Dosp::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (size_t j = 0; j < blocks[i].size(); ++j) out += (j ? "," : "") + std::to_string(blocks[i][j]);
    out += "}_" + std::to_string(decorations[i]);
  }
  return out;
}

Dosp two_block(const std::vector<int>& block, int n) {
  std::vector<bool> in(n + 1, false);
  for (int x : block) {
    if (x < 1 || x > n) throw DomainError("element out of range");
    in[x] = true;
  }
  std::vector<int> a, b;
  for (int x = 1; x <= n; ++x) (in[x] ? a : b).push_back(x);
  if (a.empty() || b.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return Dosp({all}, {2});
  }
  return Dosp({a, b}, {1, 1});
}

WindingData winding(const Dosp& p) {
  const int n = p.n();
  const long k = p.k();
  std::vector<size_t> block_of(n + 1);
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (int x : p.blocks[i]) block_of[x] = i;
  }
  IntVector offset(p.blocks.size() + 1, 0);
  for (size_t i = 0; i < p.blocks.size(); ++i) offset[i + 1] = offset[i] + p.decorations[i];
  WindingData w;
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    size_t from = block_of[i], to = block_of[i % n + 1];
    long d = offset[to] - offset[from];
    if (d < 0) d += k;
    w.vector.push_back(d);
    total += d;
  }
  if (total % k != 0) throw DomainError("winding sum not divisible by k");
  w.number = total / k;
  return w;
}

std::vector<Dosp> enumerate_dosps(int k, int n, bool hypersimplicial_only) {
  if (n < 3 || n > 10 || k < 1 || k > n - 1) {
    throw DomainError("DOSP enumeration needs 3 <= n <= 10 and 1 <= k <= n-1");
  }
  std::vector<Dosp> out;
  std::vector<int> rgs(n, 0);  // restricted growth string: block of element i+1

  auto emit_partition = [&](int p) {
    std::vector<std::vector<int>> parts(p);
    for (int i = 0; i < n; ++i) parts[rgs[i]].push_back(i + 1);
    if (hypersimplicial_only) {
      for (const auto& b : parts) {
        if (b.size() < 2) return;
      }
    }
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::vector<int>> blocks;
      for (int i : order) blocks.push_back(parts[i]);
      // Compositions of k into p positive parts, capped at |S_i| - 1 if required.
      IntVector dec(p, 1);
      std::function<void(int, long)> fill = [&](int i, long left) {
        if (i == p - 1) {
          long cap = hypersimplicial_only ? static_cast<long>(blocks[i].size()) - 1 : left;
          if (left >= 1 && left <= cap) {
            dec[i] = left;
            out.emplace_back(blocks, dec);
          }
          return;
        }
        long cap = hypersimplicial_only ? static_cast<long>(blocks[i].size()) - 1 : left;
        for (long s = 1; s <= std::min(cap, left - (p - 1 - i)); ++s) {
          dec[i] = s;
          fill(i + 1, left - s);
        }
      };
      fill(0, k);
    } while (std::next_permutation(order.begin() + 1, order.end()));
  };

  std::function<void(int, int)> grow = [&](int i, int used) {
    if (i == n) {
      emit_partition(used);
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      rgs[i] = b;
      grow(i + 1, std::max(used, b + 1));
    }
  };
  rgs[0] = 0;
  grow(1, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<long, long> winding_histogram(const std::vector<Dosp>& ps) {
  std::map<long, long> h;
  for (const auto& p : ps) ++h[winding(p).number];
  return h;
}

Dosp psi(const std::vector<Dosp>& inputs, int n) {
  std::vector<bool> acc(n + 1, false);
  for (const auto& p : inputs) {
    if (p.n() != n || p.blocks.size() != 2 || p.decorations != IntVector{1, 1}) {
      throw DomainError("psi expects two-block (1,1)-decorated DOSPs of [n]: got " + p.to_string());
    }
    for (int x : p.blocks[0]) acc[x] = !acc[x];
  }
  std::vector<int> block;
  for (int x = 1; x <= n; ++x) {
    if (acc[x]) block.push_back(x);
  }
  return two_block(block, n);
}

Dosp facet_label(const RootSystemData& rs, const FacetSupport& facet, int n) {
  if (rs.family != Family::A || rs.rank != n - 1) throw DomainError("facet labels need type A_{n-1}");
  const auto& c = rs.positive_roots.at(facet.root_index).c;
  auto first = std::find(c.begin(), c.end(), 1);
  auto last = std::find(first, c.end(), 0);
  if (std::find(last, c.end(), 1) != c.end()) throw DomainError("root is not a consecutive sum");
  // Form x_{p+1} + ... + x_{q+1} is y_{q+1} - y_p, so i = p and j = q + 1.
  const int i = static_cast<int>(first - c.begin());
  const int j = static_cast<int>(last - c.begin());
  const int span = j - i;
  if (facet.level != 1 || span == 1 || span == n - 1) {
    throw DomainError("not an interior Delta_{2,n} wall: y_" + std::to_string(j) + " - y_" + std::to_string(i) +
                      " = " + std::to_string(facet.level));
  }
  std::vector<int> block;
  for (int x = i; x < j; ++x) block.push_back(x == 0 ? n : x);
  return two_block(block, n);
}

HypersimplexGraph hypersimplex_graph(int n) {
  HypersimplexGraph h;
  h.n = n;
  h.polytope = hypersimplex(2, n);
  h.graph = dual_graph(h.polytope);
  for (const auto& e : h.graph.edges) h.edge_labels.push_back(facet_label(h.polytope.rs, e.facet, n));
  return h;
}

bool adjacent(const HypersimplexGraph& h, const Dosp& a, const Dosp& b) {
  for (size_t v = 0; v < h.graph.size(); ++v) {
    bool has_a = false, has_b = false;
    for (size_t e : h.graph.incident[v]) {
      has_a = has_a || h.edge_labels[e] == a;
      has_b = has_b || h.edge_labels[e] == b;
    }
    if (has_a && has_b) return true;
  }
  return false;
}

bool adjacent(const Dosp& a, const Dosp& b, int n) { return adjacent(hypersimplex_graph(n), a, b); }

namespace {

std::vector<Dosp> cover_labels(const HypersimplexGraph& h, const DualGraph& rooted, size_t v) {
  std::vector<Dosp> labels;
  for (size_t u : rooted.covers[v]) {
    for (size_t e : rooted.incident[v]) {
      const Edge& ed = rooted.edges[e];
      if (ed.u == u || ed.v == u) labels.push_back(h.edge_labels[e]);
    }
  }
  return labels;
}

RootVerdict check_root(const HypersimplexGraph& h, size_t root, const std::map<long, std::vector<Dosp>>& targets) {
  DualGraph rooted = reroot(h.graph, root);
  RootVerdict verdict;
  verdict.root = root;
  std::map<long, std::map<Dosp, size_t>> images;
  for (size_t v = 0; v < rooted.size(); ++v) {
    const long d = static_cast<long>(rooted.covers[v].size());
    ++verdict.histogram[d];
    auto labels = cover_labels(h, rooted, v);
    Dosp image = psi(labels, h.n);
    auto fail = [&](const std::string& kind, size_t other = 0) {
      verdict.failures.push_back({v, d, labels, image, kind, other});
    };
    if (!image.is_hypersimplicial()) fail("not hypersimplicial");
    if (winding(image).number != d) fail("wrong winding");
    auto [it, fresh] = images[d].emplace(image, v);
    if (!fresh) fail("collision", it->second);
  }
  for (const auto& [d, list] : targets) {
    for (const auto& t : list) {
      if (!images[d].count(t)) verdict.failures.push_back({0, d, {}, t, "omission", 0});
    }
  }
  std::set<long> degrees;
  for (const auto& [d, c] : verdict.histogram) degrees.insert(d);
  for (const auto& [d, list] : targets) degrees.insert(d);
  for (long d : degrees) {
    verdict.bijective[d] = std::none_of(verdict.failures.begin(), verdict.failures.end(),
                                        [d](const ConjectureFailure& f) { return f.cover_count == d; });
  }
  return verdict;
}

}  // namespace

std::vector<Dosp> node_labels(const HypersimplexGraph& h, const DualGraph& rooted) {
  std::vector<Dosp> labels;
  for (size_t v = 0; v < rooted.size(); ++v) labels.push_back(psi(cover_labels(h, rooted, v), h.n));
  return labels;
}

bool ConjectureReport::holds() const {
  return std::all_of(roots.begin(), roots.end(), [](const RootVerdict& r) { return r.holds(); });
}

ConjectureReport check_conjecture(int n, const std::vector<size_t>& roots) {
  if (n < 4 || n > 9) throw DomainError("conjecture check needs 4 <= n <= 9");
  const HypersimplexGraph h = hypersimplex_graph(n);
  std::map<long, std::vector<Dosp>> targets;
  for (auto& p : enumerate_dosps(2, n, true)) targets[winding(p).number].push_back(p);

  std::vector<size_t> chosen = roots;
  if (chosen.empty()) {
    chosen.resize(h.graph.size());
    std::iota(chosen.begin(), chosen.end(), 0);
  }
  for (size_t r : chosen) {
    if (r >= h.graph.size()) throw DomainError("root index " + std::to_string(r) + " out of range");
  }

  ConjectureReport report;
  report.n = n;
  report.alcoves = h.graph.size();
  for (const auto& [d, list] : targets) report.expected[d] = static_cast<long>(list.size());
  report.roots.resize(chosen.size());

  // Roots are independent; workers pull indices from a shared counter.
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < chosen.size(); i = next++) report.roots[i] = check_root(h, chosen[i], targets);
  };
  const size_t workers = std::clamp<size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (size_t w = 1; w < std::min(workers, chosen.size()); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace alcoved
