#include "tripext/oracle.hpp"

#include <algorithm>
#include <bit>

#include "tripext/error.hpp"

namespace tripext::oracle {

namespace {

// Backtracking over color classes: each class grows by adding a remaining
// triple through its lowest uncovered vertex until it covers all of Y.
class MatchingFill {
 public:
  MatchingFill(int n, int lambda, int k) : n_(n), k_(k), full_((std::uint64_t{1} << n) - 1) {
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = a + 1; b <= n; ++b)
        for (VertexId c = b + 1; c <= n; ++c) {
          triples_.push_back(Edge{a, b, c});
          masks_.push_back(bit(a) | bit(b) | bit(c));
          remaining_.push_back(lambda);
        }
    covered_.assign(static_cast<std::size_t>(k), 0);
    chosen_.assign(static_cast<std::size_t>(k), {});
  }

  // Places a fixed edge into class c (used for the coloring being extended).
  bool preplace(Color c, const Edge& e) {
    const auto t = index_of(e);
    const auto ci = static_cast<std::size_t>(c - 1);
    if (remaining_[t] == 0 || (covered_[ci] & masks_[t])) return false;
    --remaining_[t];
    covered_[ci] |= masks_[t];
    fixed_.emplace_back(c, e);
    return true;
  }

  void set_node_limit(std::int64_t limit) { max_nodes_ = limit; }
  void set_anchors(bool on) { anchors_ = on; }

  std::int64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

  // Calls visit(coloring) for each completion; visit returns false to stop.
  template <typename Visit>
  void run(Visit&& visit) {
    if (anchors_) build_anchor_list();
    stop_ = false;
    step(0, visit);
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (v - 1); }

  std::size_t index_of(const Edge& e) const {
    auto it = std::lower_bound(triples_.begin(), triples_.end(), e);
    if (it == triples_.end() || !(*it == e)) throw Error(ErrorCode::InvalidInput, "not a triple: " + e.to_string());
    return static_cast<std::size_t>(it - triples_.begin());
  }

  void build_anchor_list() {
    anchor_list_.clear();
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      if (masks_[t] & 1) anchor_list_.insert(anchor_list_.end(), static_cast<std::size_t>(remaining_[t]), t);
    }
  }

  Coloring snapshot() const {
    Coloring out(n_, k_);
    for (const auto& [c, e] : fixed_) out.add(c, e);
    for (int c = 0; c < k_; ++c) {
      for (std::size_t t : chosen_[static_cast<std::size_t>(c)]) out.add(c + 1, triples_[t]);
    }
    return out;
  }

  template <typename Visit>
  void step(int c, Visit& visit) {
    if (stop_) return;
    ++nodes_;
    if (max_nodes_ > 0 && nodes_ > max_nodes_) {
      aborted_ = stop_ = true;
      return;
    }
    while (c < k_ && covered_[static_cast<std::size_t>(c)] == full_) {
      if (anchors_ && !anchor_order_ok(c)) return;
      ++c;
    }
    if (c == k_) {
      if (!visit(snapshot())) stop_ = true;
      return;
    }
    const auto ci = static_cast<std::size_t>(c);
    if (anchors_ && covered_[ci] == 0) {
      // Class c takes the c-th edge through vertex 1.
      const std::size_t t = anchor_list_[ci];
      take(ci, t);
      step(c, visit);
      untake(ci, t);
      return;
    }
    const std::uint64_t free = ~covered_[ci] & full_;
    const int v = std::countr_zero(free) + 1;
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      if (remaining_[t] == 0 || !(masks_[t] & bit(v)) || (masks_[t] & covered_[ci])) continue;
      take(ci, t);
      step(c, visit);
      untake(ci, t);
      if (stop_) return;
    }
  }

  bool anchor_order_ok(int c) const {
    if (c == 0) return true;
    const auto& prev = chosen_[static_cast<std::size_t>(c - 1)];
    const auto& cur = chosen_[static_cast<std::size_t>(c)];
    if (anchor_list_[static_cast<std::size_t>(c)] != anchor_list_[static_cast<std::size_t>(c - 1)]) return true;
    std::vector<std::size_t> a = prev, b = cur;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return !(b < a);
  }

  void take(std::size_t c, std::size_t t) {
    --remaining_[t];
    covered_[c] |= masks_[t];
    chosen_[c].push_back(t);
  }

  void untake(std::size_t c, std::size_t t) {
    ++remaining_[t];
    covered_[c] &= ~masks_[t];
    chosen_[c].pop_back();
  }

  int n_;
  int k_;
  std::uint64_t full_;
  std::vector<Edge> triples_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> remaining_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::vector<std::size_t>> chosen_;
  std::vector<std::pair<Color, Edge>> fixed_;
  std::vector<std::size_t> anchor_list_;
  bool anchors_ = false;
  std::int64_t max_nodes_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

}  // namespace

ExtendResult brute_extend(const ExtensionInstance& inst, const Limits& limits) {
  ExtendResult result;
  if (inst.lambda * binomial(inst.nY, 3) > limits.max_edges || inst.nY > 63) {
    result.status = Status::CapExceeded;
    return result;
  }
  if (inst.nY % 3 != 0) return result;
  MatchingFill fill(inst.nY, inst.lambda, inst.k());
  for (Color c = 1; c <= inst.k(); ++c) {
    for (const auto& [e, m] : inst.coloring.color_class(c).edges()) {
      for (int i = 0; i < m; ++i) {
        if (!fill.preplace(c, e)) return result;
      }
    }
  }
  fill.set_node_limit(limits.max_nodes);
  fill.run([&](Coloring c) {
    result.witness = std::move(c);
    return false;
  });
  result.nodes = fill.nodes();
  if (result.witness) {
    result.status = Status::Found;
  } else if (fill.aborted()) {
    result.status = Status::CapExceeded;
  }
  return result;
}

EnumerateResult enumerate_factorizations(int n, int lambda, const EnumerateOptions& options) {
  if (n < 3 || lambda < 1) throw Error(ErrorCode::InvalidSize, "need n >= 3 and lambda >= 1");
  if (lambda * binomial(n, 3) > options.max_edges || n > 63) {
    throw Error(ErrorCode::CapExceeded, "enumeration limited to " + std::to_string(options.max_edges) + " edges");
  }
  EnumerateResult result;
  if (n % 3 != 0) return result;
  const auto k = static_cast<int>(lambda * binomial(n - 1, 2));
  MatchingFill fill(n, lambda, k);
  fill.set_anchors(options.canonical);
  fill.run([&](Coloring c) {
    if (result.factorizations.size() == options.limit) {
      result.truncated = true;
      return false;
    }
    result.factorizations.push_back(std::move(c));
    return true;
  });
  return result;
}

}  // namespace tripext::oracle
