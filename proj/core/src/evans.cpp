#include "tripext/evans.hpp"

#include <algorithm>

#include "tripext/error.hpp"

namespace tripext {

std::int64_t evans_bound(int nX, int nY, int lambda) {
  if (nX < 3) throw Error(ErrorCode::InvalidSize, "need nX >= 3");
  const std::int64_t k = colors_needed(nY, lambda);
  const std::int64_t triples = lambda * binomial(nX, 3);
  const std::int64_t per_class = nX / 3;
  return k - (triples + per_class - 1) / per_class;
}

void check_partial_instance(const PartialInstance& inst) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); };
  if (inst.nX < 3 || inst.lambda < 1 || inst.q < 0) fail("need nX >= 3, lambda >= 1, q >= 0");
  if (inst.nY < 3 * inst.nX) fail("need nY >= 3 nX");
  if (inst.nY % 3 != 0) fail("nY must be a multiple of 3");
  if (inst.q > evans_bound(inst.nX, inst.nY, inst.lambda)) {
    fail("q = " + std::to_string(inst.q) + " exceeds the bound " +
         std::to_string(evans_bound(inst.nX, inst.nY, inst.lambda)));
  }
  if (inst.coloring.ground() != inst.nX || inst.coloring.k() != inst.q) {
    fail("partial coloring must have ground nX and exactly q colors");
  }
  const Hypergraph host = inst.coloring.host();
  for (const auto& [e, m] : host.edges()) {
    if (e.size() != 3 || e.has_repeats() || m > inst.lambda) {
      fail("edge " + e.to_string() + " is not within lambda copies of the triples of X");
    }
  }
  if (Report r = verify_proper(inst.coloring); !r.ok()) fail("partial coloring is not proper: " + r.summary());
}

EvansResult evans_embed(const PartialInstance& inst, const ExtendOptions& options) {
  check_partial_instance(inst);
  const int k = static_cast<int>(colors_needed(inst.nY, inst.lambda));
  const int spare = k - inst.q;
  const int copies = static_cast<int>(inst.lambda * binomial(inst.nX, 3));

  DetachmentTask task;
  task.alpha = 1;
  task.m = inst.nX;
  task.graph = Coloring(1, k);
  for (int s = 0; s < spare; ++s) {
    const int size = copies / spare + (s < copies % spare ? 1 : 0);
    if (size > inst.nX / 3) throw Error(ErrorCode::Internal, "spare colors cannot hold the alpha^3 copies");
    task.graph.add(inst.q + 1 + s, Edge{1, 1, 1}, size);
  }
  task.degree_bounds = even_bounds(task.graph, task.alpha, task.m);
  for (VertexId a = 1; a <= inst.nX; ++a)
    for (VertexId b = a + 1; b <= inst.nX; ++b)
      for (VertexId c = b + 1; c <= inst.nX; ++c) task.mult_targets[Edge{a, b, c}] = inst.lambda;

  DetachResult detached = detach(task, options.detach);
  if (!detached) throw Error(ErrorCode::Internal, "detachment of the spare colors failed");

  // Each triple type has lambda colored copies in the detached graph; the
  // copies F does not already hold take the smallest of those colors.
  std::map<Edge, std::vector<Color>> offered;
  for (Color c = 1; c <= k; ++c) {
    for (const auto& [e, m] : detached.detached->color_class(c).edges()) {
      offered[e].insert(offered[e].end(), static_cast<std::size_t>(m), c);
    }
  }
  const Hypergraph f_host = inst.coloring.host();
  Coloring full(inst.nX, k);
  for (Color c = 1; c <= inst.q; ++c) {
    for (const auto& [e, m] : inst.coloring.color_class(c).edges()) full.add(c, e, m);
  }
  for (auto& [e, colors] : offered) {
    std::sort(colors.begin(), colors.end());
    const int missing = inst.lambda - f_host.mult(e);
    for (int i = 0; i < missing; ++i) full.add(colors[static_cast<std::size_t>(i)], e);
  }

  ExtensionInstance ext = make_extension_instance(inst.nX, inst.nY, inst.lambda, full);
  ExtensionResult extended = extend(ext, options);
  if (!extended) {
    throw Error(ErrorCode::Internal, "extension failed although nY >= 3 nX: " +
                                         (extended.certificate ? extended.certificate->describe() : std::string()));
  }
  return EvansResult{std::move(*extended.factorization), std::move(full), std::move(task), std::move(*detached.detached)};
}

}  // namespace tripext
