#include "tripext/list_color.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tripext/error.hpp"

namespace tripext {

std::string to_string(InfeasibilityCertificate::Kind kind) {
  switch (kind) {
    case InfeasibilityCertificate::Kind::QuotaSum: return "QuotaSum";
    case InfeasibilityCertificate::Kind::ColorCapacity: return "ColorCapacity";
    case InfeasibilityCertificate::Kind::SearchExhausted: return "SearchExhausted";
    case InfeasibilityCertificate::Kind::NotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

std::string InfeasibilityCertificate::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ": ";
  switch (kind) {
    case Kind::QuotaSum:
      os << "quotas sum to " << quota_sum << " but only " << edges << " edges exist";
      break;
    case Kind::ColorCapacity:
      if (edge) {
        os << "edge " << edge->to_string() << " needs " << needed << " colors, list offers " << capacity;
      } else {
        os << "color " << color << " needs " << needed << " edges, at most " << capacity << " fit";
      }
      break;
    case Kind::SearchExhausted:
      os << "no solution after " << nodes << " search nodes";
      break;
    case Kind::NotDivisible:
      os << "ground size " << ground << " is not divisible by 3";
      break;
  }
  return os.str();
}

void ListAssignment::set(const Edge& e, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  for (Color c : colors) {
    if (c < 1 || c > k_) throw Error(ErrorCode::InvalidInput, "list color " + std::to_string(c) + " outside [k]");
  }
  lists_[e] = std::move(colors);
}

const std::vector<Color>& ListAssignment::of(const Edge& e) const {
  static const std::vector<Color> kEmpty;
  auto it = lists_.find(e);
  return it == lists_.end() ? kEmpty : it->second;
}

std::int64_t hj_threshold(std::int64_t mu, std::int64_t n) { return mu * n; }

namespace {

int matching_rec(std::uint64_t mask, const std::vector<std::uint64_t>& adj,
                 std::unordered_map<std::uint64_t, int>& memo) {
  while (mask) {
    int v = std::countr_zero(mask);
    if (adj[static_cast<std::size_t>(v)] & mask & ~(std::uint64_t{1} << v)) break;
    mask &= mask - 1;
  }
  if (!mask) return 0;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;

  const int v = std::countr_zero(mask);
  const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
  const int ceiling = std::popcount(mask) / 2;
  int best = matching_rec(rest, adj, memo);
  for (std::uint64_t nb = adj[static_cast<std::size_t>(v)] & rest; nb && best < ceiling; nb &= nb - 1) {
    int w = std::countr_zero(nb);
    best = std::max(best, 1 + matching_rec(rest & ~(std::uint64_t{1} << w), adj, memo));
  }
  memo.emplace(mask, best);
  return best;
}

}  // namespace

int max_matching_size(const std::vector<std::uint64_t>& adjacency) {
  if (adjacency.size() > 64) throw Error(ErrorCode::CapExceeded, "matching limited to 64 vertices");
  std::uint64_t all = adjacency.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adjacency.size()) - 1;
  std::unordered_map<std::uint64_t, int> memo;
  return matching_rec(all, adjacency, memo);
}

namespace {

struct PairType {
  int u = 0;  // compact vertex index
  int v = 0;
  Edge edge;
  int copies = 0;
  std::vector<char> listed;  // by color index
};

class ListColorSearch {
 public:
  ListColorSearch(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas,
                  const ListColorOptions& options)
      : k_(lists.k()), quotas_(quotas), options_(options) {
    std::map<VertexId, int> compact;
    for (const auto& [e, m] : h.edges()) {
      for (VertexId x : e) compact.emplace(x, 0);
    }
    int next = 0;
    for (auto& [x, idx] : compact) idx = next++;
    nverts_ = next;
    if (nverts_ > 64) throw Error(ErrorCode::CapExceeded, "list coloring limited to 64 vertices");

    for (const auto& [e, m] : h.edges()) {
      PairType t;
      t.u = compact[e[0]];
      t.v = compact[e[1]];
      t.edge = e;
      t.copies = m;
      t.listed.assign(static_cast<std::size_t>(k_), 0);
      for (Color c : lists.of(e)) t.listed[static_cast<std::size_t>(c - 1)] = 1;
      types_.push_back(std::move(t));
    }
    remaining_.resize(types_.size());
    for (std::size_t t = 0; t < types_.size(); ++t) remaining_[t] = types_[t].copies;
    excluded_.assign(types_.size(), std::vector<char>(static_cast<std::size_t>(k_), 0));
    chosen_.assign(types_.size(), std::vector<char>(static_cast<std::size_t>(k_), 0));
    used_.assign(static_cast<std::size_t>(nverts_), std::vector<char>(static_cast<std::size_t>(k_), 0));
    size_.assign(static_cast<std::size_t>(k_), 0);
    uncolored_ = h.size();
  }

  // Counting certificates that need no search.
  std::optional<InfeasibilityCertificate> root_certificate() const {
    std::int64_t qsum = std::accumulate(quotas_.begin(), quotas_.end(), std::int64_t{0});
    if (qsum > uncolored_) {
      InfeasibilityCertificate cert;
      cert.kind = InfeasibilityCertificate::Kind::QuotaSum;
      cert.quota_sum = qsum;
      cert.edges = uncolored_;
      return cert;
    }
    for (std::size_t t = 0; t < types_.size(); ++t) {
      int listed = static_cast<int>(std::count(types_[t].listed.begin(), types_[t].listed.end(), 1));
      if (listed < types_[t].copies) {
        InfeasibilityCertificate cert;
        cert.kind = InfeasibilityCertificate::Kind::ColorCapacity;
        cert.edge = types_[t].edge;
        cert.needed = types_[t].copies;
        cert.capacity = listed;
        return cert;
      }
    }
    for (int c = 0; c < k_; ++c) {
      if (quotas_[static_cast<std::size_t>(c)] == 0) continue;
      int cap = capacity(c);
      if (cap < quotas_[static_cast<std::size_t>(c)]) {
        InfeasibilityCertificate cert;
        cert.kind = InfeasibilityCertificate::Kind::ColorCapacity;
        cert.color = c + 1;
        cert.needed = quotas_[static_cast<std::size_t>(c)];
        cert.capacity = cap;
        return cert;
      }
    }
    return std::nullopt;
  }

  bool run() { return search(); }

  std::int64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

  Coloring extract(VertexId ground) const {
    Coloring out(ground, k_);
    for (std::size_t t = 0; t < types_.size(); ++t) {
      for (int c = 0; c < k_; ++c) {
        if (chosen_[t][static_cast<std::size_t>(c)]) out.add(c + 1, types_[t].edge);
      }
    }
    return out;
  }

 private:
  bool admissible(std::size_t t, int c) const {
    const auto ci = static_cast<std::size_t>(c);
    const PairType& pt = types_[t];
    return pt.listed[ci] && !excluded_[t][ci] && !used_[static_cast<std::size_t>(pt.u)][ci] &&
           !used_[static_cast<std::size_t>(pt.v)][ci];
  }

  int admissible_count(std::size_t t) const {
    int n = 0;
    for (int c = 0; c < k_; ++c) n += admissible(t, c);
    return n;
  }

  int unmet(int c) const {
    return std::max(0, quotas_[static_cast<std::size_t>(c)] - size_[static_cast<std::size_t>(c)]);
  }

  // Largest number of further edges color c can still receive.
  int capacity(int c) const {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(nverts_), 0);
    bool any = false;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (remaining_[t] == 0 || !admissible(t, c)) continue;
      adj[static_cast<std::size_t>(types_[t].u)] |= std::uint64_t{1} << types_[t].v;
      adj[static_cast<std::size_t>(types_[t].v)] |= std::uint64_t{1} << types_[t].u;
      any = true;
    }
    return any ? max_matching_size(adj) : 0;
  }

  bool prune() const {
    std::int64_t deficit = 0;
    for (int c = 0; c < k_; ++c) deficit += unmet(c);
    if (deficit > uncolored_) return true;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (remaining_[t] > 0 && admissible_count(t) < remaining_[t]) return true;
    }
    for (int c = 0; c < k_; ++c) {
      int need = unmet(c);
      if (need > 0 && capacity(c) < need) return true;
    }
    return false;
  }

  void assign(std::size_t t, int c, bool on) {
    const auto ci = static_cast<std::size_t>(c);
    const int delta = on ? 1 : -1;
    chosen_[t][ci] = on;
    used_[static_cast<std::size_t>(types_[t].u)][ci] = on;
    used_[static_cast<std::size_t>(types_[t].v)][ci] = on;
    remaining_[t] -= delta;
    size_[ci] += delta;
    uncolored_ -= delta;
  }

  bool search() {
    ++nodes_;
    if (options_.max_nodes > 0 && nodes_ > options_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (uncolored_ == 0) {
      for (int c = 0; c < k_; ++c) {
        if (unmet(c) > 0) return false;
      }
      return true;
    }
    if (prune()) return false;

    // Edge type with the fewest admissible colors.
    std::size_t best = types_.size();
    int best_count = 0;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (remaining_[t] == 0) continue;
      int n = admissible_count(t);
      if (best == types_.size() || n < best_count) {
        best = t;
        best_count = n;
      }
    }

    std::vector<int> order;
    for (int c = 0; c < k_; ++c) {
      if (admissible(best, c)) order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return unmet(a) > unmet(b); });

    // Copies of one type are interchangeable: branch on "takes c" and then
    // forbid c for the type in the remaining siblings.
    std::vector<int> excluded_here;
    bool found = false;
    for (int c : order) {
      assign(best, c, true);
      if (search()) {
        found = true;
        break;
      }
      assign(best, c, false);
      if (aborted_) break;
      excluded_[best][static_cast<std::size_t>(c)] = 1;
      excluded_here.push_back(c);
    }
    for (int c : excluded_here) excluded_[best][static_cast<std::size_t>(c)] = 0;
    return found;
  }

  int k_;
  const QuotaVector& quotas_;
  ListColorOptions options_;
  int nverts_ = 0;
  std::vector<PairType> types_;
  std::vector<int> remaining_;
  std::vector<std::vector<char>> excluded_;
  std::vector<std::vector<char>> chosen_;
  std::vector<std::vector<char>> used_;
  std::vector<int> size_;
  std::int64_t uncolored_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

void validate_input(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas) {
  if (lists.k() < 0) throw Error(ErrorCode::InvalidInput, "negative k");
  if (quotas.size() != static_cast<std::size_t>(lists.k())) {
    throw Error(ErrorCode::InvalidInput, "quota vector has " + std::to_string(quotas.size()) + " entries, k = " +
                                             std::to_string(lists.k()));
  }
  for (int q : quotas) {
    if (q < 0) throw Error(ErrorCode::InvalidInput, "negative quota");
  }
  for (const auto& [e, m] : h.edges()) {
    if (e.size() != 2 || e.has_repeats()) {
      throw Error(ErrorCode::InvalidInput, "list coloring needs loopless pair edges, got " + e.to_string());
    }
  }
}

}  // namespace

ListColorResult solve_list_coloring(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas,
                                    const ListColorOptions& options) {
  validate_input(h, lists, quotas);
  ListColorSearch search(h, lists, quotas, options);
  ListColorResult result;
  if (auto cert = search.root_certificate()) {
    result.certificate = *cert;
    return result;
  }
  if (search.run()) {
    result.coloring = search.extract(h.ground());
  } else {
    InfeasibilityCertificate cert;
    cert.kind = InfeasibilityCertificate::Kind::SearchExhausted;
    cert.nodes = search.nodes();
    result.certificate = cert;
    result.complete = !search.aborted();
  }
  result.nodes = search.nodes();
  return result;
}

Report verify_list_coloring(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas,
                            const Coloring& c) {
  Report report;
  if (!(c.host() == h)) report.add("coloring does not partition the host multigraph");
  if (c.k() != lists.k()) report.add("coloring uses k = " + std::to_string(c.k()) + ", lists use " +
                                     std::to_string(lists.k()));
  report.merge(verify_proper(c));
  for (Color col = 1; col <= c.k(); ++col) {
    const auto& cls = c.color_class(col);
    for (const auto& [e, m] : cls.edges()) {
      const auto& allowed = lists.of(e);
      if (!std::binary_search(allowed.begin(), allowed.end(), col)) {
        report.add("edge " + e.to_string() + " has color " + std::to_string(col) + " outside its list");
      }
    }
    if (static_cast<std::size_t>(col) <= quotas.size() && cls.size() < quotas[static_cast<std::size_t>(col - 1)]) {
      report.add("color " + std::to_string(col) + " has " + std::to_string(cls.size()) + " edges, quota " +
                 std::to_string(quotas[static_cast<std::size_t>(col - 1)]));
    }
  }
  return report;
}

}  // namespace tripext
