#pragma once

// Detachment: split an amalgamated vertex of a colored hypergraph into m new
// vertices while meeting per-(vertex, color) degree bounds and exact
// multiplicities of the detached edge types.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripext/hypergraph.hpp"

namespace tripext {

struct DegreeBound {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

// The amalgamated vertex `alpha` must be the largest ground vertex of
// `graph`. New vertex i (0-based) receives id alpha + i, so the detached
// ground is 1..alpha+m-1.
struct DetachmentTask {
  Coloring graph;
  VertexId alpha = 0;
  int m = 0;
  // degree_bounds[i][j-1] bounds the degree of new vertex i in color class j.
  std::vector<std::vector<DegreeBound>> degree_bounds;
  // Exact multiplicities of detached edge types (over the detached ids).
  // Every amalgamated type with a target in its family is fully pinned;
  // families without any target are unconstrained.
  std::map<Edge, int> mult_targets;

  VertexId detached_ground() const noexcept { return alpha + m - 1; }
};

// Same [lo, hi] for every new vertex and color.
std::vector<std::vector<DegreeBound>> uniform_bounds(int m, int k, DegreeBound bound);

// [floor(d/m), ceil(d/m)] where d is the degree of alpha in each class.
std::vector<std::vector<DegreeBound>> even_bounds(const Coloring& graph, VertexId alpha, int m);

// Replaces every detached id alpha..alpha+m-1 by alpha.
Edge collapse(const Edge& e, VertexId alpha, int m);

struct DetachOptions {
  // Search-node budget for the exhaustive fallback; 0 means unlimited.
  std::int64_t max_nodes = 0;
  // Nonzero seeds randomize value tie-breaking in the exhaustive fallback.
  std::uint64_t seed = 0;
  // Skip the flow-based splitter and go straight to exhaustive search.
  bool search_only = false;
};

struct DetachResult {
  std::optional<Coloring> detached;
  // True when the complete search finished without a solution, which proves
  // the stated bounds unattainable.
  bool exhausted = false;
  std::string method;  // "split" or "search"
  std::int64_t nodes = 0;

  explicit operator bool() const noexcept { return detached.has_value(); }
};

// Throws Error(InvalidTargets) when the task fails the counting invariants.
void validate_task(const DetachmentTask& task);

DetachResult detach(const DetachmentTask& task, const DetachOptions& options = {});

// Checks degree bounds, exact multiplicities, and that collapsing the new
// vertices reproduces task.graph class by class.
Report verify_detachment(const DetachmentTask& task, const Coloring& out);

}  // namespace tripext
