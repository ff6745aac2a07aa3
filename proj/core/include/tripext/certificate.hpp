#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tripext/hypergraph.hpp"

namespace tripext {

// Why an instance has no solution. Each kind carries the counts that make
// the claim checkable by hand.
struct InfeasibilityCertificate {
  enum class Kind {
    QuotaSum,         // sum of quotas exceeds the number of edge instances
    ColorCapacity,    // a color (or an edge) cannot reach what it needs
    SearchExhausted,  // complete search found nothing
    NotDivisible,     // the target ground size is not a multiple of 3
  };

  Kind kind = Kind::SearchExhausted;

  std::int64_t quota_sum = 0;  // QuotaSum
  std::int64_t edges = 0;      // QuotaSum

  Color color = 0;                // ColorCapacity; 0 when the witness is an edge
  std::optional<Edge> edge;       // ColorCapacity on a single edge type
  std::int64_t needed = 0;        // quota (color) or copies (edge)
  std::int64_t capacity = 0;      // max matching size (color) or list size (edge)

  std::int64_t nodes = 0;  // SearchExhausted

  int ground = 0;  // NotDivisible

  std::string describe() const;
};

std::string to_string(InfeasibilityCertificate::Kind kind);

}  // namespace tripext
