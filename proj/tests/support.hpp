#pragma once

// Small, deliberately plain reference checks used to judge the library.
// None of them call the code under test beyond the basic containers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tripext/detach.hpp"
#include "tripext/hypergraph.hpp"
#include "tripext/list_color.hpp"

namespace support {

using tripext::Color;
using tripext::Coloring;
using tripext::Edge;
using tripext::Hypergraph;
using tripext::VertexId;

inline std::int64_t choose(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// The ten classes {T, complement of T} for the triples T through vertex 1.
inline Coloring complementary_pairs(int k = 10) {
  Coloring c(6, k);
  Color color = 1;
  for (VertexId b = 2; b <= 6; ++b)
    for (VertexId d = b + 1; d <= 6; ++d) {
      std::vector<VertexId> rest;
      for (VertexId v = 2; v <= 6; ++v)
        if (v != b && v != d) rest.push_back(v);
      c.add(color, Edge{1, b, d});
      c.add(color, Edge{rest[0], rest[1], rest[2]});
      ++color;
    }
  return c;
}

// Every class covers each of 1..n exactly once and every triple of 1..n
// appears lambda times overall.
inline bool is_one_factorization_of_triples(const Coloring& c, int n, int lambda) {
  std::map<std::array<int, 3>, int> seen;
  for (Color i = 1; i <= c.k(); ++i) {
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : c.color_class(i).instances()) {
      if (e.size() != 3) return false;
      for (VertexId v : e) {
        if (v < 1 || v > n) return false;
        ++hits[static_cast<std::size_t>(v)];
      }
      ++seen[{e[0], e[1], e[2]}];
    }
    for (int v = 1; v <= n; ++v)
      if (hits[static_cast<std::size_t>(v)] != 1) return false;
  }
  if (static_cast<std::int64_t>(seen.size()) != choose(n, 3)) return false;
  for (const auto& [t, m] : seen) {
    if (t[0] == t[1] || t[1] == t[2] || m != lambda) return false;
  }
  return true;
}

// Classes pairwise disjoint within each color.
inline bool is_proper(const Coloring& c) {
  for (Color i = 1; i <= c.k(); ++i) {
    std::set<VertexId> used;
    for (const Edge& e : c.color_class(i).instances())
      for (VertexId v : e)
        if (!used.insert(v).second) return false;
  }
  return true;
}

// Independent detachment check: degrees, targets, and collapse per class.
inline bool detachment_holds(const tripext::DetachmentTask& task, const Coloring& out) {
  const VertexId a = task.alpha;
  const int m = task.m;
  if (out.k() != task.graph.k()) return false;
  for (Color j = 1; j <= out.k(); ++j) {
    std::map<std::vector<VertexId>, int> collapsed;
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    for (const Edge& e : out.color_class(j).instances()) {
      std::vector<VertexId> v;
      for (VertexId x : e) {
        if (x >= a && x < a + m) {
          ++deg[static_cast<std::size_t>(x - a)];
          v.push_back(a);
        } else {
          v.push_back(x);
        }
      }
      std::sort(v.begin(), v.end());
      ++collapsed[v];
    }
    std::map<std::vector<VertexId>, int> expected;
    for (const auto& [e, mult] : task.graph.color_class(j).edges()) expected[{e.begin(), e.end()}] += mult;
    if (collapsed != expected) return false;
    for (int i = 0; i < m; ++i) {
      const auto& b = task.degree_bounds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      if (deg[static_cast<std::size_t>(i)] < b.lo || deg[static_cast<std::size_t>(i)] > b.hi) return false;
    }
  }
  std::map<Edge, int> total;
  for (Color j = 1; j <= out.k(); ++j)
    for (const auto& [e, mult] : out.color_class(j).edges()) total[e] += mult;
  for (const auto& [e, target] : task.mult_targets) {
    if (total[e] != target) return false;
  }
  return true;
}

// Reference list coloring decision by dynamic programming over colors: each
// color picks one matching of pair types it is allowed on, of size at least
// its quota; the state is the vector of copies still uncolored.
class ListColorOracle {
 public:
  ListColorOracle(const Hypergraph& h, const tripext::ListAssignment& lists, const tripext::QuotaVector& quotas)
      : k_(lists.k()), quotas_(quotas) {
    for (const auto& [e, mult] : h.edges()) {
      types_.push_back(e);
      mult_.push_back(mult);
    }
    const std::size_t t = types_.size();
    allowed_.assign(static_cast<std::size_t>(k_), std::vector<bool>(t, false));
    for (std::size_t i = 0; i < t; ++i)
      for (Color c : lists.of(types_[i])) allowed_[static_cast<std::size_t>(c - 1)][i] = true;
    std::vector<std::size_t> current;
    collect(0, current, 0);
  }

  bool feasible() { return solve(0, mult_); }

 private:
  void collect(std::size_t from, std::vector<std::size_t>& current, std::uint64_t used) {
    matchings_.push_back(current);
    for (std::size_t i = from; i < types_.size(); ++i) {
      std::uint64_t mask = 0;
      for (VertexId v : types_[i]) mask |= std::uint64_t{1} << v;
      if (mask & used) continue;
      current.push_back(i);
      collect(i + 1, current, used | mask);
      current.pop_back();
    }
  }

  bool solve(int color, const std::vector<int>& left) {
    if (color == k_) return std::all_of(left.begin(), left.end(), [](int x) { return x == 0; });
    auto key = std::make_pair(color, left);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    const int need = quotas_[static_cast<std::size_t>(color)];
    for (const auto& matching : matchings_) {
      if (static_cast<int>(matching.size()) < need) continue;
      std::vector<int> next = left;
      bool fits = true;
      for (std::size_t i : matching) {
        if (!allowed_[static_cast<std::size_t>(color)][i] || next[i] == 0) {
          fits = false;
          break;
        }
        --next[i];
      }
      if (fits && solve(color + 1, next)) {
        ok = true;
        break;
      }
    }
    memo_[key] = ok;
    return ok;
  }

  int k_;
  tripext::QuotaVector quotas_;
  std::vector<Edge> types_;
  std::vector<int> mult_;
  std::vector<std::vector<bool>> allowed_;
  std::vector<std::vector<std::size_t>> matchings_;
  std::map<std::pair<int, std::vector<int>>, bool> memo_;
};


// Random proper k-coloring of lambda*C({1..n},3): each triple copy takes a
// uniformly random color among those where it still fits. Returns false if
// some copy fits nowhere.
template <typename Rng>
bool random_proper_coloring(int n, int lambda, int k, Rng& rng, Coloring& out) {
  out = Coloring(n, k);
  std::vector<Edge> copies;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        for (int i = 0; i < lambda; ++i) copies.push_back(Edge{a, b, c});
  std::shuffle(copies.begin(), copies.end(), rng);
  std::vector<std::uint64_t> used(static_cast<std::size_t>(k), 0);
  for (const Edge& e : copies) {
    const std::uint64_t mask = (std::uint64_t{1} << e[0]) | (std::uint64_t{1} << e[1]) | (std::uint64_t{1} << e[2]);
    std::vector<Color> options;
    for (Color c = 1; c <= k; ++c)
      if (!(used[static_cast<std::size_t>(c - 1)] & mask)) options.push_back(c);
    if (options.empty()) return false;
    const Color c = options[rng() % options.size()];
    used[static_cast<std::size_t>(c - 1)] |= mask;
    out.add(c, e);
  }
  return true;
}

}  // namespace support
