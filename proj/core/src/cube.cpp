#include "tripext/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "tripext/error.hpp"

namespace tripext {

LatinCube::LatinCube(int n, std::vector<std::string> symbols)
    : n_(n), symbols_(std::move(symbols)), cells_(static_cast<std::size_t>(n) * n * n, -1) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "cube order must be positive");
}

std::size_t LatinCube::index(int i, int j, int l) const {
  if (i < 1 || j < 1 || l < 1 || i > n_ || j > n_ || l > n_) {
    throw Error(ErrorCode::InvalidInput, "cube coordinate out of range");
  }
  return (static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1)) * n_ + static_cast<std::size_t>(l - 1);
}

std::vector<std::string> default_symbols(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string name;
    std::size_t x = i + 1;
    while (x > 0) {
      --x;
      name.insert(name.begin(), static_cast<char>('A' + x % 26));
      x /= 26;
    }
    out.push_back(std::move(name));
  }
  return out;
}

Report verify_mixed(const MixedFactorization& mf) {
  Report report;
  const int n = mf.n;
  if (n < 1) {
    report.add("order must be positive");
    return report;
  }
  if (mf.classes.size() != static_cast<std::size_t>(n) * n) {
    report.add("expected " + std::to_string(n * n) + " classes, got " + std::to_string(mf.classes.size()));
  }
  std::map<Edge, int> host;
  for (std::size_t c = 0; c < mf.classes.size(); ++c) {
    std::vector<int> cover(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : mf.classes[c]) {
      if (e.has_repeats() || e[e.size() - 1] > n) {
        report.add("class " + std::to_string(c + 1) + ": edge " + e.to_string() + " is not a subset of X");
        continue;
      }
      ++host[e];
      for (VertexId v : e) ++cover[static_cast<std::size_t>(v)];
    }
    for (VertexId v = 1; v <= n; ++v) {
      if (cover[static_cast<std::size_t>(v)] != 1) {
        report.add("class " + std::to_string(c + 1) + ": vertex " + std::to_string(v) + " covered " +
                   std::to_string(cover[static_cast<std::size_t>(v)]) + " times");
      }
    }
  }
  auto expect = [&](const Edge& e, int want) {
    auto it = host.find(e);
    const int got = it == host.end() ? 0 : it->second;
    if (got != want) {
      report.add("edge " + e.to_string() + " appears " + std::to_string(got) + " times, expected " +
                 std::to_string(want));
    }
    if (it != host.end()) host.erase(it);
  };
  for (VertexId a = 1; a <= n; ++a) {
    expect(Edge{a}, 1);
    for (VertexId b = a + 1; b <= n; ++b) {
      expect(Edge{a, b}, 3);
      for (VertexId c = b + 1; c <= n; ++c) expect(Edge{a, b, c}, 2);
    }
  }
  return report;
}

LatinCube build_cube(const MixedFactorization& mf) {
  if (Report r = verify_mixed(mf); !r.ok()) {
    throw Error(ErrorCode::InvalidFactorization, r.summary());
  }
  const int n = mf.n;
  std::map<Edge, std::vector<int>> copies;
  for (std::size_t c = 0; c < mf.classes.size(); ++c) {
    for (const Edge& e : mf.classes[c]) copies[e].push_back(static_cast<int>(c));
  }
  LatinCube cube(n, default_symbols(mf.classes.size()));
  for (auto& [e, cls] : copies) {
    std::sort(cls.begin(), cls.end());
    if (e.size() == 1) {
      const int i = e[0];
      cube.set(i, i, i, cls[0]);
    } else if (e.size() == 2) {
      const int i = e[0], j = e[1];
      cube.set(i, i, j, cls[0]);
      cube.set(j, j, i, cls[0]);
      cube.set(i, j, i, cls[1]);
      cube.set(j, i, j, cls[1]);
      cube.set(j, i, i, cls[2]);
      cube.set(i, j, j, cls[2]);
    } else {
      const int i = e[0], j = e[1], l = e[2];
      cube.set(i, j, l, cls[0]);
      cube.set(j, l, i, cls[0]);
      cube.set(l, i, j, cls[0]);
      cube.set(i, l, j, cls[1]);
      cube.set(l, j, i, cls[1]);
      cube.set(j, i, l, cls[1]);
    }
  }
  return cube;
}

Report verify_cube(const LatinCube& cube) {
  Report report;
  const int n = cube.n();
  const int nsym = static_cast<int>(cube.symbols().size());
  if (nsym != n * n) report.add("expected " + std::to_string(n * n) + " symbols, got " + std::to_string(nsym));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        const int s = cube.at(i, j, l);
        if (s < 0 || s >= nsym) {
          report.add("cell (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) +
                     ") holds no valid symbol");
          return report;
        }
      }

  static const char* kDirection[] = {"L_{i**}", "L_{*i*}", "L_{**i}"};
  for (int dir = 0; dir < 3; ++dir) {
    for (int x = 1; x <= n; ++x) {
      std::vector<int> seen(static_cast<std::size_t>(nsym), 0);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const int s = dir == 0 ? cube.at(x, a, b) : dir == 1 ? cube.at(a, x, b) : cube.at(a, b, x);
          ++seen[static_cast<std::size_t>(s)];
        }
      for (int s = 0; s < nsym; ++s) {
        if (seen[static_cast<std::size_t>(s)] != 1) {
          report.add(std::string("layer ") + kDirection[dir] + " i=" + std::to_string(x) + ": symbol " +
                     cube.symbols()[static_cast<std::size_t>(s)] + " occurs " +
                     std::to_string(seen[static_cast<std::size_t>(s)]) + " times");
        }
      }
    }
  }

  auto coords = [](int i, int j, int l) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j) {
        if (cube.at(i, i, j) != cube.at(j, j, i)) report.add("L" + coords(i, i, j) + " != L" + coords(j, j, i));
        if (cube.at(i, j, i) != cube.at(j, i, j)) report.add("L" + coords(i, j, i) + " != L" + coords(j, i, j));
        if (cube.at(i, j, j) != cube.at(j, i, i)) report.add("L" + coords(i, j, j) + " != L" + coords(j, i, i));
      }
      for (int l = 1; l <= n; ++l) {
        if (i == j || j == l || i == l) continue;
        if (cube.at(i, j, l) != cube.at(j, l, i) || cube.at(i, j, l) != cube.at(l, i, j)) {
          report.add("cyclic symmetry fails at " + coords(i, j, l));
        }
      }
    }
  return report;
}

MixedFactorization collapse_cube(const LatinCube& cube) {
  const int n = cube.n();
  const std::size_t nsym = cube.symbols().size();
  std::vector<std::map<Edge, int>> cells(nsym);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        const int s = cube.at(i, j, l);
        if (s < 0 || static_cast<std::size_t>(s) >= nsym) {
          throw Error(ErrorCode::InvalidFactorization, "cube has an unassigned cell");
        }
        std::set<VertexId> distinct{i, j, l};
        std::vector<VertexId> v(distinct.begin(), distinct.end());
        ++cells[static_cast<std::size_t>(s)][Edge(std::span<const VertexId>(v.data(), v.size()))];
      }
  MixedFactorization mf;
  mf.n = n;
  for (const auto& per_symbol : cells) {
    std::vector<Edge> cls;
    for (const auto& [e, count] : per_symbol) {
      const int orbit = static_cast<int>(e.size());  // 1, 2 or 3 cells per edge
      if (count % orbit != 0) {
        throw Error(ErrorCode::InvalidFactorization, "orbit of " + e.to_string() + " is split across symbols");
      }
      cls.insert(cls.end(), static_cast<std::size_t>(count / orbit), e);
    }
    mf.classes.push_back(std::move(cls));
  }
  return mf;
}

// ---------------------------------------------------------------------------
// Mixed factorization search

namespace {

// Every class holds exactly one edge through vertex 1 (its anchor), so the
// classes are labelled by the sorted list of those edges. The search then
// picks the (class, vertex) cell with the fewest usable edges, over all
// classes at once.
class MixedSearch {
 public:
  MixedSearch(int n, const MixedSearchOptions& options) : n_(n), options_(options), full_((1u << n) - 1) {
    for (std::uint32_t mask = 1; mask <= full_; ++mask) {
      const int bits = std::popcount(mask);
      if (bits > 3) continue;
      std::vector<VertexId> v;
      for (int b = 0; b < n; ++b) {
        if (mask & (1u << b)) v.push_back(b + 1);
      }
      types_.push_back({mask, Edge(std::span<const VertexId>(v.data(), v.size()))});
    }
    std::sort(types_.begin(), types_.end(), [](const Type& a, const Type& b) { return a.edge < b.edge; });
    for (std::size_t t = 0; t < types_.size(); ++t) {
      const int bits = std::popcount(types_[t].mask);
      const int copies = bits == 1 ? 1 : bits == 2 ? 3 : 2;
      if (types_[t].mask & 1u) {
        anchors_.insert(anchors_.end(), static_cast<std::size_t>(copies), static_cast<int>(t));
        remaining_.push_back(0);
      } else {
        remaining_.push_back(copies);
      }
    }
    by_vertex_.resize(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < types_.size(); ++t) {
      for (int b = 0; b < n; ++b) {
        if (types_[t].mask & (1u << b)) by_vertex_[static_cast<std::size_t>(b)].push_back(static_cast<int>(t));
      }
    }
    for (int anchor : anchors_) {
      built_.push_back({anchor});
      covered_.push_back(types_[static_cast<std::size_t>(anchor)].mask);
    }
  }

  bool run() { return step(); }
  std::int64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

  MixedFactorization result() const {
    MixedFactorization mf;
    mf.n = n_;
    for (const auto& cls : built_) {
      std::vector<Edge> edges;
      for (int t : cls) edges.push_back(types_[static_cast<std::size_t>(t)].edge);
      std::sort(edges.begin(), edges.end());
      mf.classes.push_back(std::move(edges));
    }
    return mf;
  }

 private:
  struct Type {
    std::uint32_t mask;
    Edge edge;
  };

  bool tick() {
    ++nodes_;
    if (options_.max_nodes > 0 && nodes_ > options_.max_nodes) aborted_ = true;
    return !aborted_;
  }

  bool usable(std::size_t t, std::size_t c) const {
    return remaining_[t] > 0 && !(types_[t].mask & covered_[c]);
  }

  // An untouched class whose twin with the same anchor is also untouched and
  // comes earlier is interchangeable with it; only the first is expanded.
  bool shadowed(std::size_t c) const {
    return c > 0 && built_[c].size() == 1 && built_[c - 1].size() == 1 && anchors_[c] == anchors_[c - 1];
  }

  // A class with u uncovered vertices takes at most floor(u/3) more triples,
  // and when u = 1 mod 3 reaching that many leaves one vertex for a singleton.
  bool triples_fit() const {
    int triples_left = 0;
    int singles_left = 0;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      const int bits = std::popcount(types_[t].mask);
      if (bits == 3) triples_left += remaining_[t];
      if (bits == 1) singles_left += remaining_[t];
    }
    int room = 0;
    int want_single = 0;
    for (std::uint32_t cov : covered_) {
      const int u = n_ - std::popcount(cov);
      room += u / 3;
      if (u % 3 == 1) ++want_single;
    }
    room -= std::max(0, want_single - singles_left);
    return triples_left <= room;
  }

  bool step() {
    if (!tick()) return false;

    // Each remaining copy needs its own class.
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (remaining_[t] == 0) continue;
      int room = 0;
      for (std::size_t c = 0; c < covered_.size() && room < remaining_[t]; ++c) {
        if (!(types_[t].mask & covered_[c])) ++room;
      }
      if (room < remaining_[t]) return false;
    }

    if (!triples_fit()) return false;

    std::size_t best_class = 0;
    int best_vertex = -1;
    int best_count = 0;
    for (std::size_t c = 0; c < covered_.size(); ++c) {
      if (covered_[c] == full_ || shadowed(c)) continue;
      for (int b = 0; b < n_; ++b) {
        if (covered_[c] & (1u << b)) continue;
        int count = 0;
        for (int t : by_vertex_[static_cast<std::size_t>(b)]) {
          if (usable(static_cast<std::size_t>(t), c)) ++count;
        }
        if (count == 0) return false;
        if (best_vertex < 0 || count < best_count) {
          best_class = c;
          best_vertex = b;
          best_count = count;
        }
      }
    }
    if (best_vertex < 0) return true;  // every class is full

    for (int t : by_vertex_[static_cast<std::size_t>(best_vertex)]) {
      const auto tu = static_cast<std::size_t>(t);
      if (!usable(tu, best_class)) continue;
      --remaining_[tu];
      covered_[best_class] |= types_[tu].mask;
      built_[best_class].push_back(t);
      if (step()) return true;
      built_[best_class].pop_back();
      covered_[best_class] &= ~types_[tu].mask;
      ++remaining_[tu];
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  MixedSearchOptions options_;
  std::uint32_t full_;
  std::vector<Type> types_;
  std::vector<int> remaining_;
  std::vector<int> anchors_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<std::vector<int>> built_;
  std::vector<std::uint32_t> covered_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

MixedSearchResult find_mixed_factorization(int n, const MixedSearchOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "order must be positive");
  if (n > options.max_order) {
    throw Error(ErrorCode::CapExceeded, "order " + std::to_string(n) + " exceeds the search cap " +
                                            std::to_string(options.max_order));
  }
  MixedSearch search(n, options);
  MixedSearchResult result;
  if (search.run()) {
    result.factorization = search.result();
  } else {
    result.exhausted = !search.aborted();
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace tripext
