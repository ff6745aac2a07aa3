#include "tripext/detach.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>
#include <boost/rational.hpp>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "tripext/error.hpp"

namespace tripext {

using Rational = boost::rational<std::int64_t>;

std::vector<std::vector<DegreeBound>> uniform_bounds(int m, int k, DegreeBound bound) {
  return std::vector<std::vector<DegreeBound>>(static_cast<std::size_t>(m),
                                               std::vector<DegreeBound>(static_cast<std::size_t>(k), bound));
}

std::vector<std::vector<DegreeBound>> even_bounds(const Coloring& graph, VertexId alpha, int m) {
  auto bounds = uniform_bounds(m, graph.k(), {});
  for (Color j = 1; j <= graph.k(); ++j) {
    const int d = degree(graph.color_class(j), alpha);
    const DegreeBound b{d / m, (d + m - 1) / m};
    for (auto& row : bounds) row[static_cast<std::size_t>(j - 1)] = b;
  }
  return bounds;
}

Edge collapse(const Edge& e, VertexId alpha, int m) {
  std::array<VertexId, Edge::kMaxSize> out{};
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = (e[i] >= alpha && e[i] < alpha + m) ? alpha : e[i];
  return Edge(std::span<const VertexId>(out.data(), e.size()));
}

namespace {

int alpha_count(const Edge& e, VertexId alpha) { return e.count(alpha); }

// Family key of a detached target: the amalgamated type it collapses to.
std::map<Edge, std::int64_t> target_sums(const DetachmentTask& task) {
  std::map<Edge, std::int64_t> sums;
  for (const auto& [f, n] : task.mult_targets) sums[collapse(f, task.alpha, task.m)] += n;
  return sums;
}

}  // namespace

void validate_task(const DetachmentTask& task) {
  const int k = task.graph.k();
  if (task.m < 1) throw Error(ErrorCode::InvalidTargets, "need at least one new vertex");
  if (task.alpha < 1 || task.alpha != task.graph.ground()) {
    throw Error(ErrorCode::InvalidTargets, "alpha must be the largest ground vertex of the amalgamated graph");
  }
  if (task.degree_bounds.size() != static_cast<std::size_t>(task.m)) {
    throw Error(ErrorCode::InvalidTargets, "degree bounds must have one row per new vertex");
  }
  for (const auto& row : task.degree_bounds) {
    if (row.size() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::InvalidTargets, "degree bounds must have one entry per color");
    }
    for (const auto& b : row) {
      if (b.lo < 0 || b.lo > b.hi) throw Error(ErrorCode::InvalidTargets, "degree bound with lo > hi or lo < 0");
    }
  }
  for (Color j = 1; j <= k; ++j) {
    const int d = degree(task.graph.color_class(j), task.alpha);
    std::int64_t lo = 0, hi = 0;
    for (const auto& row : task.degree_bounds) {
      lo += row[static_cast<std::size_t>(j - 1)].lo;
      hi += row[static_cast<std::size_t>(j - 1)].hi;
    }
    if (d < lo || d > hi) {
      throw Error(ErrorCode::InvalidTargets, "color " + std::to_string(j) + ": alpha has degree " +
                                                 std::to_string(d) + " but bounds allow [" + std::to_string(lo) +
                                                 ", " + std::to_string(hi) + "]");
    }
  }
  const VertexId top = task.detached_ground();
  const Hypergraph host = task.graph.host();
  for (const auto& [f, n] : task.mult_targets) {
    if (n < 0) throw Error(ErrorCode::InvalidTargets, "negative multiplicity target");
    for (VertexId v : f) {
      if (v > top) throw Error(ErrorCode::InvalidTargets, "target " + f.to_string() + " uses an unknown vertex");
    }
    if (alpha_count(collapse(f, task.alpha, task.m), task.alpha) == 0) {
      throw Error(ErrorCode::InvalidTargets, "target " + f.to_string() + " contains no detached vertex");
    }
  }
  for (const auto& [e, sum] : target_sums(task)) {
    if (sum != host.mult(e)) {
      throw Error(ErrorCode::InvalidTargets, "targets over " + e.to_string() + " sum to " + std::to_string(sum) +
                                                 " but the amalgamated multiplicity is " +
                                                 std::to_string(host.mult(e)));
    }
  }
}

namespace {

// ---------------------------------------------------------------------------
// Feasible flow with lower bounds, reduced to a max flow.

class BoundedFlow {
 public:
  explicit BoundedFlow(int nodes) : nodes_(nodes), excess_(static_cast<std::size_t>(nodes), 0) {}

  int add_arc(int from, int to, std::int64_t lo, std::int64_t hi) {
    arcs_.push_back({from, to, lo, hi});
    return static_cast<int>(arcs_.size()) - 1;
  }

  // Finds a flow from source to sink meeting every arc's bounds.
  bool solve(int source, int sink) {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
    using Graph = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::directedS, boost::no_property,
        boost::property<boost::edge_capacity_t, std::int64_t,
                        boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                        boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
    const int super_source = nodes_;
    const int super_sink = nodes_ + 1;
    Graph g(static_cast<std::size_t>(nodes_ + 2));
    auto cap = boost::get(boost::edge_capacity, g);
    auto res = boost::get(boost::edge_residual_capacity, g);
    auto rev = boost::get(boost::edge_reverse, g);
    auto add = [&](int u, int v, std::int64_t c) {
      auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g).first;
      auto r = boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(u), g).first;
      cap[e] = c;
      cap[r] = 0;
      rev[e] = r;
      rev[r] = e;
      return e;
    };

    std::fill(excess_.begin(), excess_.end(), 0);
    std::vector<Traits::edge_descriptor> handles;
    handles.reserve(arcs_.size());
    for (const auto& a : arcs_) {
      if (a.lo > a.hi) return false;
      handles.push_back(add(a.from, a.to, a.hi - a.lo));
      excess_[static_cast<std::size_t>(a.to)] += a.lo;
      excess_[static_cast<std::size_t>(a.from)] -= a.lo;
    }
    add(sink, source, std::numeric_limits<std::int64_t>::max() / 4);
    std::int64_t demand = 0;
    for (int v = 0; v < nodes_; ++v) {
      const std::int64_t ex = excess_[static_cast<std::size_t>(v)];
      if (ex > 0) {
        add(super_source, v, ex);
        demand += ex;
      } else if (ex < 0) {
        add(v, super_sink, -ex);
      }
    }
    const std::int64_t pushed = boost::push_relabel_max_flow(g, static_cast<std::size_t>(super_source),
                                                             static_cast<std::size_t>(super_sink));
    if (pushed != demand) return false;
    flows_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) flows_[i] = arcs_[i].lo + cap[handles[i]] - res[handles[i]];
    return true;
  }

  std::int64_t flow(int arc) const { return flows_[static_cast<std::size_t>(arc)]; }

 private:
  struct Arc {
    int from, to;
    std::int64_t lo, hi;
  };
  int nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> flows_;
};

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

// ---------------------------------------------------------------------------
// Splitter: peel off one new vertex at a time. In every color class the
// number of instances of each amalgamated type that receive the new vertex
// is rounded from its proportional share, with all row and column sums kept
// within the rounding of their own shares. Integrality of flows guarantees
// such a rounding whenever the proportional split is itself feasible.

std::optional<Coloring> split(const DetachmentTask& task) {
  const int k = task.graph.k();
  const int m = task.m;
  const VertexId tmp = task.alpha + m;  // stand-in for the shrinking amalgam

  for (const auto& [f, n] : task.mult_targets) {
    if (f.has_repeats()) return std::nullopt;
  }
  const auto sums = target_sums(task);
  const Hypergraph host = task.graph.host();
  for (const auto& [e, mult] : host.edges()) {
    if (e.contains(task.alpha) && !sums.contains(e)) return std::nullopt;
  }

  std::vector<std::map<Edge, std::int64_t>> cur(static_cast<std::size_t>(k));
  for (Color j = 1; j <= k; ++j) {
    for (const auto& [e, mult] : task.graph.color_class(j).edges()) {
      Edge x = e;
      while (x.contains(task.alpha)) x = x.replace_one(task.alpha, tmp);
      cur[static_cast<std::size_t>(j - 1)][x] += mult;
    }
  }

  for (int t = 0; t < m; ++t) {
    const VertexId fresh = task.alpha + t;

    // Instances of each amalgamated type that must take `fresh`.
    std::map<Edge, std::int64_t> need;
    for (const auto& [f, n] : task.mult_targets) {
      if (!f.contains(fresh)) continue;
      std::array<VertexId, Edge::kMaxSize> key{};
      for (std::size_t i = 0; i < f.size(); ++i) key[i] = f[i] >= fresh ? tmp : f[i];
      need[Edge(std::span<const VertexId>(key.data(), f.size()))] += n;
    }

    std::map<Edge, std::int64_t> total;
    std::vector<std::int64_t> deg(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
      for (const auto& [e, mult] : cur[static_cast<std::size_t>(j)]) {
        const int a = e.count(tmp);
        if (a == 0) continue;
        total[e] += mult;
        deg[static_cast<std::size_t>(j)] += a * mult;
      }
    }
    for (const auto& [e, n] : need) {
      if (n > total[e]) return std::nullopt;
    }

    std::vector<Edge> rows;
    for (const auto& [e, mult] : total) rows.push_back(e);
    const int nrows = static_cast<int>(rows.size());
    const int source = 0, sink = 1 + nrows + k;
    BoundedFlow flow(sink + 1);

    std::vector<Rational> share(static_cast<std::size_t>(k), Rational(0));
    std::vector<std::vector<std::pair<int, int>>> cell_arcs(static_cast<std::size_t>(nrows));
    for (int r = 0; r < nrows; ++r) {
      const Edge& e = rows[static_cast<std::size_t>(r)];
      const std::int64_t n = need.contains(e) ? need.at(e) : 0;
      flow.add_arc(source, 1 + r, n, n);
      for (int j = 0; j < k; ++j) {
        auto it = cur[static_cast<std::size_t>(j)].find(e);
        if (it == cur[static_cast<std::size_t>(j)].end()) continue;
        const Rational x(it->second * n, total.at(e));
        share[static_cast<std::size_t>(j)] += x;
        const int arc = flow.add_arc(1 + r, 1 + nrows + j, floor_of(x), ceil_of(x));
        cell_arcs[static_cast<std::size_t>(r)].emplace_back(j, arc);
      }
    }
    for (int j = 0; j < k; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      std::int64_t later_lo = 0, later_hi = 0;
      for (int i = t + 1; i < m; ++i) {
        later_lo += task.degree_bounds[static_cast<std::size_t>(i)][ju].lo;
        later_hi += task.degree_bounds[static_cast<std::size_t>(i)][ju].hi;
      }
      const DegreeBound own = task.degree_bounds[static_cast<std::size_t>(t)][ju];
      const std::int64_t lo = std::max({std::int64_t{own.lo}, floor_of(share[ju]), deg[ju] - later_hi});
      const std::int64_t hi = std::min({std::int64_t{own.hi}, ceil_of(share[ju]), deg[ju] - later_lo});
      if (lo > hi) return std::nullopt;
      flow.add_arc(1 + nrows + j, sink, lo, hi);
    }
    if (!flow.solve(source, sink)) return std::nullopt;

    for (int r = 0; r < nrows; ++r) {
      const Edge& e = rows[static_cast<std::size_t>(r)];
      const Edge moved = e.replace_one(tmp, fresh);
      for (const auto& [j, arc] : cell_arcs[static_cast<std::size_t>(r)]) {
        const std::int64_t x = flow.flow(arc);
        if (x == 0) continue;
        auto& cls = cur[static_cast<std::size_t>(j)];
        if ((cls[e] -= x) == 0) cls.erase(e);
        cls[moved] += x;
      }
    }
  }

  Coloring out(task.detached_ground(), k);
  for (int j = 0; j < k; ++j) {
    for (const auto& [e, mult] : cur[static_cast<std::size_t>(j)]) {
      if (e.contains(tmp)) return std::nullopt;
      out.add(j + 1, e, static_cast<int>(mult));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive fallback. Each instance carrying alpha is a variable whose value
// is the sorted tuple of new vertices replacing its alpha occurrences.

class DetachSearch {
 public:
  DetachSearch(const DetachmentTask& task, const DetachOptions& options) : task_(task), options_(options) {
    const int k = task.graph.k();
    const auto sums = target_sums(task);
    for (const auto& [f, n] : task.mult_targets) {
      target_index_.emplace(f, static_cast<int>(targets_.size()));
      targets_.push_back(n);
    }
    counts_.assign(targets_.size(), 0);
    deg_.assign(static_cast<std::size_t>(task.m), std::vector<int>(static_cast<std::size_t>(k), 0));
    slots_left_.assign(static_cast<std::size_t>(k), 0);

    for (Color j = 1; j <= k; ++j) {
      for (const auto& [e, mult] : task.graph.color_class(j).edges()) {
        const int a = alpha_count(e, task.alpha);
        if (a == 0) continue;
        Group g;
        g.color = j - 1;
        g.edge = e;
        g.copies = mult;
        g.values = enumerate_values(e, a, sums.contains(e));
        groups_.push_back(std::move(g));
        slots_left_[static_cast<std::size_t>(j - 1)] += a * mult;
      }
    }
    symmetric_ = is_symmetric();
    if (options.seed != 0) {
      std::mt19937_64 rng(options.seed);
      tiebreak_.resize(static_cast<std::size_t>(std::max(task.m, 1)));
      std::iota(tiebreak_.begin(), tiebreak_.end(), 0);
      std::shuffle(tiebreak_.begin(), tiebreak_.end(), rng);
    }
  }

  bool run() { return search(true); }
  std::int64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

  Coloring extract() const {
    Coloring out(task_.detached_ground(), task_.graph.k());
    for (Color j = 1; j <= task_.graph.k(); ++j) {
      for (const auto& [e, mult] : task_.graph.color_class(j).edges()) {
        if (!e.contains(task_.alpha)) out.add(j, e, mult);
      }
    }
    for (const auto& g : groups_) {
      for (int v : g.chosen) out.add(g.color + 1, g.values[static_cast<std::size_t>(v)].edge);
    }
    return out;
  }

 private:
  struct Value {
    std::vector<int> verts;  // new-vertex indices, sorted, with repeats
    Edge edge;
    int target = -1;  // index into targets_, -1 when the family is free
  };
  struct Group {
    int color = 0;
    Edge edge;
    int copies = 0;
    std::vector<Value> values;
    std::vector<int> chosen;  // nondecreasing value indices
  };

  std::vector<Value> enumerate_values(const Edge& e, int a, bool pinned) const {
    std::vector<Value> out;
    std::vector<int> tuple(static_cast<std::size_t>(a), 0);
    while (true) {
      std::array<VertexId, Edge::kMaxSize> ids{};
      std::size_t n = 0;
      for (VertexId x : e) {
        if (x != task_.alpha) ids[n++] = x;
      }
      for (int v : tuple) ids[n++] = task_.alpha + v;
      Value val;
      val.verts = tuple;
      val.edge = Edge(std::span<const VertexId>(ids.data(), n));
      auto it = target_index_.find(val.edge);
      if (it != target_index_.end()) val.target = it->second;
      if (!pinned || (val.target >= 0 && targets_[static_cast<std::size_t>(val.target)] > 0)) {
        out.push_back(std::move(val));
      }
      int pos = a - 1;
      while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == task_.m - 1) --pos;
      if (pos < 0) break;
      const int next = tuple[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < a; ++i) tuple[static_cast<std::size_t>(i)] = next;
    }
    return out;
  }

  Edge permute(const Edge& f, const std::vector<int>& perm) const {
    std::array<VertexId, Edge::kMaxSize> ids{};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId v = f[i];
      const bool fresh = v >= task_.alpha && v < task_.alpha + task_.m;
      ids[i] = fresh ? task_.alpha + perm[static_cast<std::size_t>(v - task_.alpha)] : v;
    }
    return Edge(std::span<const VertexId>(ids.data(), f.size()));
  }

  // New vertices are interchangeable when all bound rows agree and the
  // targets are invariant under a transposition and a full cycle, which
  // together generate the symmetric group.
  bool is_symmetric() const {
    for (const auto& row : task_.degree_bounds) {
      if (row != task_.degree_bounds.front()) return false;
    }
    if (task_.m < 2) return true;
    std::vector<int> swap01(static_cast<std::size_t>(task_.m));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    std::vector<int> cycle(static_cast<std::size_t>(task_.m));
    for (int i = 0; i < task_.m; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % task_.m;
    for (const auto* perm : {&swap01, &cycle}) {
      std::map<Edge, int> moved;
      for (const auto& [f, n] : task_.mult_targets) moved[permute(f, *perm)] = n;
      if (moved != task_.mult_targets) return false;
    }
    return true;
  }

  bool fits(const Group& g, const Value& v) const {
    const auto j = static_cast<std::size_t>(g.color);
    if (v.target >= 0 && counts_[static_cast<std::size_t>(v.target)] >= targets_[static_cast<std::size_t>(v.target)]) {
      return false;
    }
    for (std::size_t i = 0; i < v.verts.size();) {
      const int x = v.verts[i];
      int occ = 0;
      while (i < v.verts.size() && v.verts[i] == x) ++occ, ++i;
      if (deg_[static_cast<std::size_t>(x)][j] + occ > task_.degree_bounds[static_cast<std::size_t>(x)][j].hi) {
        return false;
      }
    }
    return true;
  }

  void apply(Group& g, int idx, int sign) {
    const Value& v = g.values[static_cast<std::size_t>(idx)];
    const auto j = static_cast<std::size_t>(g.color);
    for (int x : v.verts) deg_[static_cast<std::size_t>(x)][j] += sign;
    if (v.target >= 0) counts_[static_cast<std::size_t>(v.target)] += sign;
    slots_left_[j] -= sign * static_cast<int>(v.verts.size());
    if (sign > 0) {
      g.chosen.push_back(idx);
    } else {
      g.chosen.pop_back();
    }
  }

  bool lower_bounds_reachable() const {
    for (std::size_t j = 0; j < slots_left_.size(); ++j) {
      int need = 0;
      for (int i = 0; i < task_.m; ++i) {
        need += std::max(0, task_.degree_bounds[static_cast<std::size_t>(i)][j].lo - deg_[static_cast<std::size_t>(i)][j]);
      }
      if (need > slots_left_[j]) return false;
    }
    return true;
  }

  std::vector<int> candidates(const Group& g, bool first) const {
    std::vector<int> out;
    const int start = g.chosen.empty() ? 0 : g.chosen.back();
    for (int i = start; i < static_cast<int>(g.values.size()); ++i) {
      const Value& v = g.values[static_cast<std::size_t>(i)];
      if (first && symmetric_ && v.verts.front() != 0) continue;
      if (fits(g, v)) out.push_back(i);
    }
    return out;
  }

  int allowance(const Group& g, const Value& v) const {
    int s = 0;
    for (int x : v.verts) {
      s += task_.degree_bounds[static_cast<std::size_t>(x)][static_cast<std::size_t>(g.color)].hi -
           deg_[static_cast<std::size_t>(x)][static_cast<std::size_t>(g.color)];
    }
    return s;
  }

  int tie_rank(const Value& v) const {
    return tiebreak_.empty() ? v.verts.front() : tiebreak_[static_cast<std::size_t>(v.verts.front())];
  }

  bool search(bool first) {
    ++nodes_;
    if (options_.max_nodes > 0 && nodes_ > options_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (!lower_bounds_reachable()) return false;

    Group* best = nullptr;
    std::vector<int> best_values;
    for (auto& g : groups_) {
      if (static_cast<int>(g.chosen.size()) == g.copies) continue;
      auto vals = candidates(g, first);
      if (best == nullptr || vals.size() < best_values.size()) {
        best = &g;
        best_values = std::move(vals);
        if (best_values.empty()) break;
      }
    }
    if (best == nullptr) {
      for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (counts_[i] != targets_[i]) return false;
      }
      for (int i = 0; i < task_.m; ++i) {
        for (std::size_t j = 0; j < slots_left_.size(); ++j) {
          if (deg_[static_cast<std::size_t>(i)][j] < task_.degree_bounds[static_cast<std::size_t>(i)][j].lo) {
            return false;
          }
        }
      }
      return true;
    }

    std::stable_sort(best_values.begin(), best_values.end(), [&](int a, int b) {
      const Value& va = best->values[static_cast<std::size_t>(a)];
      const Value& vb = best->values[static_cast<std::size_t>(b)];
      const int wa = allowance(*best, va), wb = allowance(*best, vb);
      if (wa != wb) return wa > wb;
      return tie_rank(va) < tie_rank(vb);
    });
    for (int idx : best_values) {
      apply(*best, idx, +1);
      if (search(false)) return true;
      apply(*best, idx, -1);
      if (aborted_) return false;
    }
    return false;
  }

  const DetachmentTask& task_;
  DetachOptions options_;
  std::map<Edge, int> target_index_;
  std::vector<int> targets_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> deg_;
  std::vector<int> slots_left_;
  std::vector<Group> groups_;
  std::vector<int> tiebreak_;
  bool symmetric_ = false;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

DetachResult detach(const DetachmentTask& task, const DetachOptions& options) {
  validate_task(task);
  DetachResult result;
  if (!options.search_only) {
    if (auto out = split(task); out && verify_detachment(task, *out).ok()) {
      result.detached = std::move(*out);
      result.method = "split";
      return result;
    }
  }
  DetachSearch search(task, options);
  result.method = "search";
  if (search.run()) {
    result.detached = search.extract();
  } else {
    result.exhausted = !search.aborted();
  }
  result.nodes = search.nodes();
  return result;
}

Report verify_detachment(const DetachmentTask& task, const Coloring& out) {
  Report report;
  if (out.k() != task.graph.k()) {
    report.add("detached coloring has " + std::to_string(out.k()) + " colors, expected " +
               std::to_string(task.graph.k()));
    return report;
  }
  if (out.ground() != task.detached_ground()) {
    report.add("detached ground is " + std::to_string(out.ground()) + ", expected " +
               std::to_string(task.detached_ground()));
    return report;
  }
  for (Color j = 1; j <= out.k(); ++j) {
    Hypergraph folded(task.alpha);
    for (const auto& [e, mult] : out.color_class(j).edges()) folded.add(collapse(e, task.alpha, task.m), mult);
    if (!(folded == task.graph.color_class(j))) {
      report.add("color " + std::to_string(j) + ": collapsing the new vertices does not give back the input class");
    }
    for (int i = 0; i < task.m; ++i) {
      const int d = degree(out.color_class(j), task.alpha + i);
      const DegreeBound b = task.degree_bounds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      if (d < b.lo || d > b.hi) {
        report.add("vertex " + std::to_string(task.alpha + i) + " has degree " + std::to_string(d) + " in color " +
                   std::to_string(j) + ", bound [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]");
      }
    }
  }
  const Hypergraph host = out.host();
  for (const auto& [f, n] : task.mult_targets) {
    if (host.mult(f) != n) {
      report.add("edge " + f.to_string() + " has multiplicity " + std::to_string(host.mult(f)) + ", target " +
                 std::to_string(n));
    }
  }
  const auto sums = target_sums(task);
  for (const auto& [e, mult] : host.edges()) {
    if (sums.contains(collapse(e, task.alpha, task.m)) && !task.mult_targets.contains(e)) {
      report.add("edge " + e.to_string() + " is not among the targets of its family");
    }
  }
  return report;
}

}  // namespace tripext
