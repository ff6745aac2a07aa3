#pragma once

// Brute-force ground truth for tiny instances. Deliberately naive: plain
// backtracking over perfect matchings, no pruning beyond disjointness.

#include <cstdint>
#include <optional>
#include <vector>

#include "tripext/extension.hpp"
#include "tripext/hypergraph.hpp"

namespace tripext::oracle {

struct Limits {
  int max_edges = 60;           // lambda*C(nY,3) must not exceed this
  std::int64_t max_nodes = 0;   // 0 = unlimited
};

enum class Status { Found, None, CapExceeded };

struct ExtendResult {
  Status status = Status::None;
  std::optional<Coloring> witness;
  std::int64_t nodes = 0;
};

// Searches every way to complete inst.coloring to a one-factorization of
// lambda*C({1..nY},3) with colors fixed. None means the search finished.
ExtendResult brute_extend(const ExtensionInstance& inst, const Limits& limits = {});

struct EnumerateOptions {
  std::size_t limit = 1000;  // stop after this many factorizations
  // Treat colorings that differ only by permuting colors as one.
  bool canonical = true;
  int max_edges = 60;
};

struct EnumerateResult {
  std::vector<Coloring> factorizations;
  bool truncated = false;  // limit reached before the search finished
};

// One-factorizations of lambda*C({1..n},3) in deterministic order.
// Throws CapExceeded beyond options.max_edges.
EnumerateResult enumerate_factorizations(int n, int lambda, const EnumerateOptions& options = {});

}  // namespace tripext::oracle
