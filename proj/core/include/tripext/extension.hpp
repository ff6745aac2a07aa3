#pragma once

// Extending a k-coloring of lambda*C(X,3) to a one-factorization of
// lambda*C(Y,3), with X = {1..nX} inside Y = {1..nY} and
// k = lambda*C(nY-1, 2).
//
// extend() runs the constructive pipeline: list-color the multigraph
// H = lambda(nY-nX)*C(X,2) from the lists gamma_lists() under quotas(),
// lift H onto an amalgamated vertex alpha standing for Y \ X, fill in the
// alpha^2 u and alpha^3 edges each class still needs, then detach alpha into
// nY - nX vertices with degree exactly 1 in every class.

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "tripext/certificate.hpp"
#include "tripext/detach.hpp"
#include "tripext/hypergraph.hpp"
#include "tripext/list_color.hpp"

namespace tripext {

using Rational = boost::rational<std::int64_t>;

struct ExtensionInstance {
  int nX = 0;
  int nY = 0;
  int lambda = 1;
  Coloring coloring;  // of complete_triples(nX, lambda), k() == k_for(nY, lambda)

  int k() const noexcept { return coloring.k(); }
};

// lambda*C(nY-1, 2).
std::int64_t colors_needed(int nY, int lambda);

// Validates and normalizes: a coloring with fewer than k classes is padded
// with empty ones. Throws InvalidInstance.
ExtensionInstance make_extension_instance(int nX, int nY, int lambda, Coloring f);

struct NecessityReport {
  bool ryser_ok = true;
  // |F(i)| - (nX - 2nY/3) for each color.
  std::vector<Rational> margins;
};

struct CensusRow {
  int f = 0;  // triples of the class inside X
  int h = 0;  // pair edges of the class (triples meeting X in two vertices)
  int c = 0;  // triples meeting X in one vertex
  int d = 0;  // triples missing X
};
using ClassCensus = std::vector<CensusRow>;

enum class Sufficiency {
  ClassSizeBound,  // every |F(i)| >= nX/2 - nY/6
  ListSizeBound,   // no quotas and every list has >= lambda*nX*(nY-nX) colors
  Unknown,
};

std::string to_string(Sufficiency s);

NecessityReport check_ryser(const ExtensionInstance& inst);

// gamma(uv) = colors whose class in F avoids both u and v.
ListAssignment gamma_lists(const ExtensionInstance& inst);

// max(0, nX - nY/3 - 2|F(i)|). Throws NotDivisible unless 3 | nY.
QuotaVector quotas(const ExtensionInstance& inst);

// lambda(nY - nX) copies of every pair of X.
Hypergraph pair_multigraph(const ExtensionInstance& inst);

Sufficiency sufficiency_certificate(const ExtensionInstance& inst);

// Counts per class from F and a coloring of the pair multigraph; d < 0
// flags a class that breaks the quota inequality.
ClassCensus class_census(const ExtensionInstance& inst, const Coloring& h_coloring);

struct ExtendOptions {
  ListColorOptions list;
  DetachOptions detach;
};

struct ExtensionResult {
  std::optional<Coloring> factorization;  // of complete_triples(nY, lambda)
  std::optional<InfeasibilityCertificate> certificate;
  // False when a node limit stopped the list coloring search early; the
  // certificate then proves nothing.
  bool complete = true;

  // Intermediate artifacts, filled as far as the pipeline got.
  std::optional<Coloring> h_coloring;
  std::optional<Coloring> amalgamated;  // ground nX + 1, alpha = nX + 1
  std::optional<DetachmentTask> detach_task;

  explicit operator bool() const noexcept { return factorization.has_value(); }
};

ExtensionResult extend(const ExtensionInstance& inst, const ExtendOptions& options = {});

// Classes restricted to edges lying inside {1..n}.
Coloring restrict_coloring(const Coloring& c, VertexId n);

}  // namespace tripext
