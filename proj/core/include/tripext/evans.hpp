#pragma once

// Embedding a q-coloring of any F inside lambda*C(X,3) into a
// one-factorization of lambda*C(Y,3) when |Y| >= 3|X|.

#include <cstdint>
#include <optional>

#include "tripext/detach.hpp"
#include "tripext/extension.hpp"
#include "tripext/hypergraph.hpp"

namespace tripext {

struct PartialInstance {
  int nX = 0;
  int nY = 0;
  int lambda = 1;
  int q = 0;
  Coloring coloring;  // ground nX, q classes, proper, host within lambda*C(X,3)
};

// Largest q with q <= lambda*C(nY-1,2) - lambda*C(nX,3)/floor(nX/3).
std::int64_t evans_bound(int nX, int nY, int lambda);

// Throws PreconditionViolated unless the instance is well formed, nY >= 3nX,
// 3 | nY and q <= evans_bound.
void check_partial_instance(const PartialInstance& inst);

struct EvansResult {
  Coloring factorization;
  // Full k-coloring of lambda*C(X,3) obtained before the final extension.
  Coloring completed_inner;
  // The spare colors' alpha^3 copies and their detachment into X.
  DetachmentTask detach_task;
  Coloring detached;
};

// Colors lambda*C(nX,3) copies of alpha^3 with the spare colors q+1..k,
// detaches alpha into X, uses the result on the triples F does not cover,
// and extends the now complete coloring of lambda*C(X,3).
EvansResult evans_embed(const PartialInstance& inst, const ExtendOptions& options = {});

}  // namespace tripext
