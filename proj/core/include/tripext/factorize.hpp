#pragma once

// Chromatic index and minimum colorings of lambda*C(Y,3).

#include <cstdint>

#include "tripext/detach.hpp"
#include "tripext/hypergraph.hpp"

namespace tripext {

// Minimum number of colors in a proper coloring of lambda*C({1..n},3):
//   n = 0 mod 3:             lambda*C(n-1,2)
//   n = 2 mod 3:             lambda*C(n,2)
//   n = 4 mod 6, or
//   n = 1 mod 3, lambda even: lambda*n*(n-2)/2
//   n = 1 mod 6, lambda odd:  (lambda*n^2 - 2*lambda*n + 1)/2
// Each case equals ceil(lambda*C(n,3) / floor(n/3)); the two are cross-checked.
std::int64_t chromatic_index(int n, int lambda);

// ceil(lambda*C(n,3) / floor(n/3)), the class-size lower bound.
std::int64_t chromatic_lower_bound(int n, int lambda);

// lambda*C(n,3) copies of alpha^3 on a one-vertex ground, spread as evenly as
// possible over chromatic_index(n, lambda) colors, with the detachment that
// turns them into lambda*C({1..n},3).
DetachmentTask min_coloring_task(int n, int lambda);

// A proper chromatic_index(n, lambda)-coloring whose class sizes differ by
// at most one.
Coloring min_coloring(int n, int lambda, const DetachOptions& options = {});

// A one-factorization of lambda*C({1..n},3). Throws NotDivisible unless 3 | n.
Coloring baranyai_factorization(int n, int lambda, const DetachOptions& options = {});

// Whether some minimum coloring can have pairwise isomorphic classes.
bool isomorphic_classes_possible(int n, int lambda);

}  // namespace tripext
