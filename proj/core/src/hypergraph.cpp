#include "tripext/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "tripext/error.hpp"

namespace tripext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvalidTargets: return "InvalidTargets";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidFactorization: return "InvalidFactorization";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Edge

Edge::Edge(std::initializer_list<VertexId> verts) : Edge(std::span<const VertexId>(verts.begin(), verts.size())) {}

Edge::Edge(std::span<const VertexId> verts) {
  if (verts.empty() || verts.size() > kMaxSize) {
    throw Error(ErrorCode::InvalidEdge, "edge must have 1 to 3 vertices, got " + std::to_string(verts.size()));
  }
  for (VertexId v : verts) {
    if (v < 1) throw Error(ErrorCode::InvalidEdge, "vertex ids are 1-based, got " + std::to_string(v));
  }
  size_ = static_cast<std::uint8_t>(verts.size());
  std::copy(verts.begin(), verts.end(), verts_.begin());
  std::sort(verts_.begin(), verts_.begin() + size_);
}

int Edge::count(VertexId v) const noexcept {
  return static_cast<int>(std::count(begin(), end(), v));
}

bool Edge::has_repeats() const noexcept {
  return std::adjacent_find(begin(), end()) != end();
}

Edge Edge::replace_one(VertexId from, VertexId to) const {
  std::array<VertexId, kMaxSize> out = verts_;
  auto* it = std::find(out.begin(), out.begin() + size_, from);
  if (it == out.begin() + size_) {
    throw Error(ErrorCode::InvalidEdge, "vertex " + std::to_string(from) + " not in edge " + to_string());
  }
  *it = to;
  return Edge(std::span<const VertexId>(out.data(), size_));
}

std::string Edge::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) os << ',';
    os << verts_[i];
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(VertexId ground) : ground_(ground) {
  if (ground < 0) throw Error(ErrorCode::InvalidSize, "negative ground size");
}

void Hypergraph::add(const Edge& e, int mult) {
  if (mult < 0) throw Error(ErrorCode::InvalidEdge, "negative multiplicity");
  if (mult == 0) return;
  for (VertexId v : e) {
    if (v > ground_) {
      throw Error(ErrorCode::UnknownVertex,
                  "vertex " + std::to_string(v) + " outside ground 1.." + std::to_string(ground_));
    }
  }
  edges_[e] += mult;
  size_ += mult;
}

void Hypergraph::remove(const Edge& e, int mult) {
  auto it = edges_.find(e);
  if (it == edges_.end() || it->second < mult) {
    throw Error(ErrorCode::InvalidEdge, "cannot remove " + std::to_string(mult) + " copies of " + e.to_string());
  }
  it->second -= mult;
  size_ -= mult;
  if (it->second == 0) edges_.erase(it);
}

int Hypergraph::mult(const Edge& e) const {
  auto it = edges_.find(e);
  return it == edges_.end() ? 0 : it->second;
}

bool Hypergraph::loopless() const noexcept {
  return std::none_of(edges_.begin(), edges_.end(), [](const auto& kv) { return kv.first.has_repeats(); });
}

std::vector<Edge> Hypergraph::instances() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const auto& [e, m] : edges_) out.insert(out.end(), static_cast<std::size_t>(m), e);
  return out;
}

// ---------------------------------------------------------------------------
// Coloring

Coloring::Coloring(VertexId ground, int k) : ground_(ground) {
  if (k < 0) throw Error(ErrorCode::InvalidSize, "negative color count");
  classes_.assign(static_cast<std::size_t>(k), Hypergraph(ground));
}

void Coloring::check_color(Color c) const {
  if (c < 1 || c > k()) {
    throw Error(ErrorCode::InvalidInput, "color " + std::to_string(c) + " outside 1.." + std::to_string(k()));
  }
}

const Hypergraph& Coloring::color_class(Color c) const {
  check_color(c);
  return classes_[static_cast<std::size_t>(c - 1)];
}

void Coloring::add(Color c, const Edge& e, int mult) {
  check_color(c);
  classes_[static_cast<std::size_t>(c - 1)].add(e, mult);
}

void Coloring::remove(Color c, const Edge& e, int mult) {
  check_color(c);
  classes_[static_cast<std::size_t>(c - 1)].remove(e, mult);
}

Hypergraph Coloring::host() const {
  Hypergraph h(ground_);
  for (const auto& cls : classes_) {
    for (const auto& [e, m] : cls.edges()) h.add(e, m);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Report

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string Report::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) os << "; " << violations[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Hypergraph complete_triples(int n, int lambda) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "complete_triples needs n >= 3, got " + std::to_string(n));
  if (lambda < 1) throw Error(ErrorCode::InvalidSize, "multiplicity must be positive");
  Hypergraph g(n);
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c) g.add(Edge{a, b, c}, lambda);
  return g;
}

int degree(const Hypergraph& g, VertexId v) {
  if (v < 1 || v > g.ground()) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in ground");
  }
  int d = 0;
  for (const auto& [e, m] : g.edges()) d += e.count(v) * m;
  return d;
}

Report verify_proper(const Coloring& c) {
  Report report;
  for (Color col = 1; col <= c.k(); ++col) {
    const auto& cls = c.color_class(col);
    if (!cls.loopless()) {
      throw Error(ErrorCode::NotApplicable, "properness is undefined for an amalgamated host");
    }
    std::vector<Edge> inst = cls.instances();
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t j = i + 1; j < inst.size(); ++j) {
        bool meet = std::any_of(inst[i].begin(), inst[i].end(), [&](VertexId v) { return inst[j].contains(v); });
        if (meet) {
          report.add("color " + std::to_string(col) + ": " + inst[i].to_string() + " meets " + inst[j].to_string());
        }
      }
    }
  }
  return report;
}

Report verify_one_factorization(const Coloring& c) {
  Report report;
  for (Color col = 1; col <= c.k(); ++col) {
    std::vector<int> cover(static_cast<std::size_t>(c.ground()) + 1, 0);
    for (const auto& [e, m] : c.color_class(col).edges()) {
      for (VertexId v : e) cover[static_cast<std::size_t>(v)] += m;
    }
    for (VertexId v = 1; v <= c.ground(); ++v) {
      int n = cover[static_cast<std::size_t>(v)];
      if (n != 1) {
        report.add("color " + std::to_string(col) + ": vertex " + std::to_string(v) + " covered " +
                   std::to_string(n) + " times");
      }
    }
  }
  return report;
}

}  // namespace tripext
