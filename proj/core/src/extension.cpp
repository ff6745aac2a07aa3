#include "tripext/extension.hpp"

#include <algorithm>
#include <limits>

#include "tripext/error.hpp"

namespace tripext {

std::string to_string(Sufficiency s) {
  switch (s) {
    case Sufficiency::ClassSizeBound: return "ClassSizeBound";
    case Sufficiency::ListSizeBound: return "ListSizeBound";
    case Sufficiency::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::int64_t colors_needed(int nY, int lambda) { return lambda * binomial(nY - 1, 2); }

ExtensionInstance make_extension_instance(int nX, int nY, int lambda, Coloring f) {
  if (nX < 3) throw Error(ErrorCode::InvalidInstance, "need nX >= 3");
  if (nY <= nX) throw Error(ErrorCode::InvalidInstance, "need nY > nX");
  if (lambda < 1) throw Error(ErrorCode::InvalidInstance, "need lambda >= 1");
  if (f.ground() != nX) {
    throw Error(ErrorCode::InvalidInstance, "coloring ground is " + std::to_string(f.ground()) + ", expected " +
                                                std::to_string(nX));
  }
  const auto k = static_cast<int>(colors_needed(nY, lambda));
  if (f.k() != k) {
    Coloring padded(nX, k);
    for (Color c = 1; c <= f.k(); ++c) {
      for (const auto& [e, m] : f.color_class(c).edges()) {
        if (c > k) throw Error(ErrorCode::InvalidInstance, "color " + std::to_string(c) + " exceeds k = " +
                                                              std::to_string(k));
        padded.add(c, e, m);
      }
    }
    f = std::move(padded);
  }
  if (!(f.host() == complete_triples(nX, lambda))) {
    throw Error(ErrorCode::InvalidInstance, "coloring must partition lambda copies of every triple of X");
  }
  if (Report r = verify_proper(f); !r.ok()) {
    throw Error(ErrorCode::InvalidInstance, "coloring is not proper: " + r.summary());
  }
  return ExtensionInstance{nX, nY, lambda, std::move(f)};
}

NecessityReport check_ryser(const ExtensionInstance& inst) {
  NecessityReport report;
  const Rational bound = Rational(inst.nX) - Rational(2 * inst.nY, 3);
  for (Color i = 1; i <= inst.k(); ++i) {
    Rational margin = Rational(inst.coloring.color_class(i).size()) - bound;
    if (margin < 0) report.ryser_ok = false;
    report.margins.push_back(margin);
  }
  return report;
}

ListAssignment gamma_lists(const ExtensionInstance& inst) {
  const int k = inst.k();
  // touched[c][u]: u lies on an edge of F(c)
  std::vector<std::vector<char>> touched(static_cast<std::size_t>(k) + 1,
                                         std::vector<char>(static_cast<std::size_t>(inst.nX) + 1, 0));
  for (Color c = 1; c <= k; ++c) {
    for (const auto& [e, m] : inst.coloring.color_class(c).edges()) {
      for (VertexId v : e) touched[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
    }
  }
  ListAssignment lists(k);
  for (VertexId u = 1; u <= inst.nX; ++u) {
    for (VertexId v = u + 1; v <= inst.nX; ++v) {
      std::vector<Color> colors;
      for (Color c = 1; c <= k; ++c) {
        const auto& t = touched[static_cast<std::size_t>(c)];
        if (!t[static_cast<std::size_t>(u)] && !t[static_cast<std::size_t>(v)]) colors.push_back(c);
      }
      lists.set(Edge{u, v}, std::move(colors));
    }
  }
  return lists;
}

QuotaVector quotas(const ExtensionInstance& inst) {
  if (inst.nY % 3 != 0) {
    throw Error(ErrorCode::NotDivisible, "nY = " + std::to_string(inst.nY) + " is not a multiple of 3");
  }
  QuotaVector q(static_cast<std::size_t>(inst.k()));
  for (Color i = 1; i <= inst.k(); ++i) {
    const int raw = inst.nX - inst.nY / 3 - 2 * inst.coloring.color_class(i).size();
    q[static_cast<std::size_t>(i - 1)] = std::max(0, raw);
  }
  return q;
}

Hypergraph pair_multigraph(const ExtensionInstance& inst) {
  Hypergraph h(inst.nX);
  const int copies = inst.lambda * (inst.nY - inst.nX);
  for (VertexId u = 1; u <= inst.nX; ++u)
    for (VertexId v = u + 1; v <= inst.nX; ++v) h.add(Edge{u, v}, copies);
  return h;
}

Sufficiency sufficiency_certificate(const ExtensionInstance& inst) {
  bool class_bound = true;
  for (Color i = 1; i <= inst.k(); ++i) {
    // |F(i)| >= nX/2 - nY/6  <=>  6|F(i)| >= 3nX - nY
    if (6 * inst.coloring.color_class(i).size() < 3 * inst.nX - inst.nY) class_bound = false;
  }
  if (class_bound) return Sufficiency::ClassSizeBound;

  const QuotaVector q = quotas(inst);
  if (std::any_of(q.begin(), q.end(), [](int x) { return x > 0; })) return Sufficiency::Unknown;
  const ListAssignment lists = gamma_lists(inst);
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const auto& [e, colors] : lists.lists()) shortest = std::min(shortest, colors.size());
  const std::int64_t threshold = hj_threshold(std::int64_t{inst.lambda} * (inst.nY - inst.nX), inst.nX);
  return static_cast<std::int64_t>(shortest) >= threshold ? Sufficiency::ListSizeBound : Sufficiency::Unknown;
}

ClassCensus class_census(const ExtensionInstance& inst, const Coloring& h_coloring) {
  ClassCensus census(static_cast<std::size_t>(inst.k()));
  for (Color i = 1; i <= inst.k(); ++i) {
    CensusRow& row = census[static_cast<std::size_t>(i - 1)];
    row.f = inst.coloring.color_class(i).size();
    row.h = i <= h_coloring.k() ? h_coloring.color_class(i).size() : 0;
    row.c = inst.nX - 3 * row.f - 2 * row.h;
    row.d = inst.nY / 3 - row.f - row.h - row.c;
  }
  return census;
}

Coloring restrict_coloring(const Coloring& c, VertexId n) {
  Coloring out(std::min(n, c.ground()), c.k());
  for (Color i = 1; i <= c.k(); ++i) {
    for (const auto& [e, m] : c.color_class(i).edges()) {
      if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return v <= n; })) out.add(i, e, m);
    }
  }
  return out;
}

namespace {

DetachmentTask detachment_for(const ExtensionInstance& inst, Coloring amalgamated) {
  const VertexId alpha = inst.nX + 1;
  const int m = inst.nY - inst.nX;
  DetachmentTask task;
  task.alpha = alpha;
  task.m = m;
  task.degree_bounds = uniform_bounds(m, inst.k(), {1, 1});
  for (int i = 0; i < m; ++i) {
    const VertexId a = alpha + i;
    for (VertexId u = 1; u <= inst.nX; ++u)
      for (VertexId v = u + 1; v <= inst.nX; ++v) task.mult_targets[Edge{u, v, a}] = inst.lambda;
    for (int j = i + 1; j < m; ++j) {
      const VertexId b = alpha + j;
      for (VertexId u = 1; u <= inst.nX; ++u) task.mult_targets[Edge{u, a, b}] = inst.lambda;
      for (int l = j + 1; l < m; ++l) task.mult_targets[Edge{a, b, alpha + l}] = inst.lambda;
    }
  }
  task.graph = std::move(amalgamated);
  return task;
}

}  // namespace

ExtensionResult extend(const ExtensionInstance& inst, const ExtendOptions& options) {
  ExtensionResult result;
  if (inst.nY % 3 != 0) {
    InfeasibilityCertificate cert;
    cert.kind = InfeasibilityCertificate::Kind::NotDivisible;
    cert.ground = inst.nY;
    result.certificate = cert;
    return result;
  }

  const int k = inst.k();
  const Hypergraph h = pair_multigraph(inst);
  const QuotaVector q = quotas(inst);
  ListColorResult listed = solve_list_coloring(h, gamma_lists(inst), q, options.list);
  if (!listed) {
    result.certificate = listed.certificate;
    result.complete = listed.complete;
    return result;
  }
  result.h_coloring = *listed.coloring;
  const Coloring& hc = *result.h_coloring;

  // Amalgamated hypergraph: F, plus alpha u v for each colored pair, plus
  // alpha^2 u wherever u is still uncovered, plus alpha^3 for the rest.
  const VertexId alpha = inst.nX + 1;
  Coloring g(alpha, k);
  const ClassCensus census = class_census(inst, hc);
  for (Color i = 1; i <= k; ++i) {
    std::vector<int> covered(static_cast<std::size_t>(inst.nX) + 1, 0);
    for (const auto& [e, m] : inst.coloring.color_class(i).edges()) {
      g.add(i, e, m);
      for (VertexId v : e) covered[static_cast<std::size_t>(v)] += m;
    }
    for (const auto& [e, m] : hc.color_class(i).edges()) {
      g.add(i, Edge{e[0], e[1], alpha}, m);
      for (VertexId v : e) covered[static_cast<std::size_t>(v)] += m;
    }
    for (VertexId u = 1; u <= inst.nX; ++u) {
      const int missing = 1 - covered[static_cast<std::size_t>(u)];
      if (missing < 0) throw Error(ErrorCode::Internal, "class " + std::to_string(i) + " covers a vertex twice");
      g.add(i, Edge{u, alpha, alpha}, missing);
    }
    const int d = census[static_cast<std::size_t>(i - 1)].d;
    if (d < 0) {
      InfeasibilityCertificate cert;
      cert.kind = InfeasibilityCertificate::Kind::ColorCapacity;
      cert.color = i;
      cert.needed = q[static_cast<std::size_t>(i - 1)];
      cert.capacity = census[static_cast<std::size_t>(i - 1)].h;
      result.certificate = cert;
      return result;
    }
    g.add(i, Edge{alpha, alpha, alpha}, d);
  }
  result.amalgamated = g;
  result.detach_task = detachment_for(inst, std::move(g));

  DetachResult detached = detach(*result.detach_task, options.detach);
  if (!detached) {
    throw Error(ErrorCode::Internal, "detachment failed on a consistent amalgamated instance");
  }
  result.factorization = std::move(*detached.detached);
  return result;
}

}  // namespace tripext
