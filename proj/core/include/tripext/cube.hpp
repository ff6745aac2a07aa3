#pragma once

// Symmetric layer-rainbow latin cubes and the mixed one-factorizations of
// C(X,1) + 3C(X,2) + 2C(X,3) they correspond to.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripext/hypergraph.hpp"

namespace tripext {

// n x n x n array of symbol indices into `symbols`. Coordinates are 1-based
// in the accessors; the first coordinate selects the displayed layer.
class LatinCube {
 public:
  LatinCube() = default;
  LatinCube(int n, std::vector<std::string> symbols);

  int n() const noexcept { return n_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  int at(int i, int j, int l) const { return cells_[index(i, j, l)]; }
  void set(int i, int j, int l, int symbol) { cells_[index(i, j, l)] = symbol; }
  const std::string& name_at(int i, int j, int l) const {
    return symbols_[static_cast<std::size_t>(at(i, j, l))];
  }

  friend bool operator==(const LatinCube&, const LatinCube&) = default;

 private:
  std::size_t index(int i, int j, int l) const;

  int n_ = 0;
  std::vector<std::string> symbols_;
  std::vector<int> cells_;
};

struct MixedFactorization {
  int n = 0;
  // n^2 classes, each a list of edges of size 1..3 partitioning {1..n}.
  std::vector<std::vector<Edge>> classes;
};

// "A".."Z", "AA", "AB", ...
std::vector<std::string> default_symbols(std::size_t count);

// Class c becomes symbol c. The copies of each pair and triple are assigned
// to cell orbits in ascending class order. Throws InvalidFactorization.
LatinCube build_cube(const MixedFactorization& mf);

// Layer-rainbow in all three directions plus both symmetry conditions.
Report verify_cube(const LatinCube& cube);

// Host multiplicities 1 / 3 / 2 and the partition property of every class.
Report verify_mixed(const MixedFactorization& mf);

// Groups cells by symbol and reads each orbit back as an edge.
// Throws InvalidFactorization when an orbit is split across symbols.
MixedFactorization collapse_cube(const LatinCube& cube);

struct MixedSearchOptions {
  int max_order = 7;
  std::int64_t max_nodes = 0;  // 0 = unlimited
};

struct MixedSearchResult {
  std::optional<MixedFactorization> factorization;
  std::int64_t nodes = 0;
  bool exhausted = false;  // complete search, nothing found
  explicit operator bool() const noexcept { return factorization.has_value(); }
};

// Exact-cover search. Every class holds exactly one edge through vertex 1,
// and classes are listed in the sorted order of those edges. Branches on
// the (class, vertex) cell with the fewest usable edges. Throws
// CapExceeded above options.max_order.
MixedSearchResult find_mixed_factorization(int n, const MixedSearchOptions& options = {});

}  // namespace tripext
