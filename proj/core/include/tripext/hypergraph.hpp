#pragma once

// Multiset hypergraphs with edges of size 1..3 and their colorings.
//
// Vertices are the integers 1..ground. An edge is a sorted multiset of at
// most three vertices; repeats are allowed so that amalgamated forms such as
// a^3 or a^2 u can be represented directly.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tripext {

using VertexId = std::int32_t;
using Color = std::int32_t;

class Edge {
 public:
  static constexpr std::size_t kMaxSize = 3;

  Edge() = default;
  Edge(std::initializer_list<VertexId> verts);
  explicit Edge(std::span<const VertexId> verts);

  std::size_t size() const noexcept { return size_; }
  VertexId operator[](std::size_t i) const noexcept { return verts_[i]; }
  const VertexId* begin() const noexcept { return verts_.data(); }
  const VertexId* end() const noexcept { return verts_.data() + size_; }

  int count(VertexId v) const noexcept;
  bool contains(VertexId v) const noexcept { return count(v) > 0; }
  bool has_repeats() const noexcept;

  // Replaces one occurrence of `from` by `to` and re-sorts.
  Edge replace_one(VertexId from, VertexId to) const;

  std::string to_string() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  std::array<VertexId, kMaxSize> verts_{};
  std::uint8_t size_ = 0;
};

// Multiset of edges over the ground set {1..ground}.
class Hypergraph {
 public:
  using EdgeMap = std::map<Edge, int>;

  Hypergraph() = default;
  explicit Hypergraph(VertexId ground);

  VertexId ground() const noexcept { return ground_; }
  const EdgeMap& edges() const noexcept { return edges_; }

  void add(const Edge& e, int mult = 1);
  // Throws InvalidEdge if fewer than `mult` copies are present.
  void remove(const Edge& e, int mult = 1);

  int mult(const Edge& e) const;
  // Total number of edge instances.
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool loopless() const noexcept;

  // Flattened list of edge instances in sorted order, copies repeated.
  std::vector<Edge> instances() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.ground_ == b.ground_ && a.edges_ == b.edges_;
  }

 private:
  VertexId ground_ = 0;
  EdgeMap edges_;
  int size_ = 0;
};

// A partition of a hypergraph into k color classes, colors 1..k.
class Coloring {
 public:
  Coloring() = default;
  Coloring(VertexId ground, int k);

  VertexId ground() const noexcept { return ground_; }
  int k() const noexcept { return static_cast<int>(classes_.size()); }

  const Hypergraph& color_class(Color c) const;
  void add(Color c, const Edge& e, int mult = 1);
  void remove(Color c, const Edge& e, int mult = 1);

  // Sum of all classes as a multiset.
  Hypergraph host() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  void check_color(Color c) const;

  VertexId ground_ = 0;
  std::vector<Hypergraph> classes_;
};

// Accumulates human-readable violations; empty means ok.
struct Report {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void merge(const Report& other);
  std::string summary() const;
};

// lambda copies of every 3-subset of {1..n}.
Hypergraph complete_triples(int n, int lambda);

// Number of occurrences of v over all edge instances of g.
int degree(const Hypergraph& g, VertexId v);

// Every class is a partial matching. Throws NotApplicable on an
// amalgamated host (some edge repeats a vertex).
Report verify_proper(const Coloring& c);

// Every class covers every ground vertex exactly once.
Report verify_one_factorization(const Coloring& c);

std::int64_t binomial(std::int64_t n, std::int64_t r);

}  // namespace tripext
