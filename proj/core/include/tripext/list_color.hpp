#pragma once

// Exact list edge coloring of multigraphs with per-color lower bounds on
// class sizes.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tripext/certificate.hpp"
#include "tripext/hypergraph.hpp"

namespace tripext {

// Admissible colors per pair type uv. All copies of a type share one list.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(int k) : k_(k) {}

  int k() const noexcept { return k_; }
  // Replaces the list of `e`; colors are sorted and deduplicated.
  void set(const Edge& e, std::vector<Color> colors);
  // Empty when `e` has no list.
  const std::vector<Color>& of(const Edge& e) const;
  const std::map<Edge, std::vector<Color>>& lists() const noexcept { return lists_; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  int k_ = 0;
  std::map<Edge, std::vector<Color>> lists_;
};

// q[c-1] is the minimum size of color class c.
using QuotaVector = std::vector<int>;

struct ListColorOptions {
  // 0 means unlimited. When the limit is hit the result carries a
  // SearchExhausted certificate with `complete == false`.
  std::int64_t max_nodes = 0;
};

struct ListColorResult {
  std::optional<Coloring> coloring;
  std::optional<InfeasibilityCertificate> certificate;
  std::int64_t nodes = 0;
  // False only when max_nodes cut the search short.
  bool complete = true;

  explicit operator bool() const noexcept { return coloring.has_value(); }
};

// Finds a proper coloring of `h` (loopless, all edges of size 2) where every
// edge takes a color from its list and |H(c)| >= q[c-1]. The search is
// exhaustive, so a certificate means no such coloring exists.
ListColorResult solve_list_coloring(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas,
                                    const ListColorOptions& options = {});

// Checks that `c` colors exactly `h`, properly, from the lists, meeting quotas.
Report verify_list_coloring(const Hypergraph& h, const ListAssignment& lists, const QuotaVector& quotas,
                            const Coloring& c);

// List size that guarantees mu * K_n is list-colorable with no quotas.
std::int64_t hj_threshold(std::int64_t mu, std::int64_t n);

// Size of a maximum matching in a simple graph on vertices 0..n-1 given as
// adjacency bitmasks. Exponential in n; intended for n <= 20 or so.
int max_matching_size(const std::vector<std::uint64_t>& adjacency);

}  // namespace tripext
