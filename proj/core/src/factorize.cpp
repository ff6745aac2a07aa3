#include "tripext/factorize.hpp"

#include "tripext/error.hpp"

namespace tripext {

namespace {

void check_args(int n, int lambda) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "need n >= 3, got " + std::to_string(n));
  if (lambda < 1) throw Error(ErrorCode::InvalidSize, "need lambda >= 1");
}

}  // namespace

std::int64_t chromatic_lower_bound(int n, int lambda) {
  check_args(n, lambda);
  const std::int64_t edges = lambda * binomial(n, 3);
  const std::int64_t per_class = n / 3;
  return (edges + per_class - 1) / per_class;
}

std::int64_t chromatic_index(int n, int lambda) {
  check_args(n, lambda);
  const std::int64_t y = n;
  const std::int64_t l = lambda;
  std::int64_t value = 0;
  if (n % 3 == 0) {
    value = l * binomial(y - 1, 2);
  } else if (n % 3 == 2) {
    value = l * binomial(y, 2);
  } else if (n % 6 == 4 || lambda % 2 == 0) {
    value = l * y * (y - 2) / 2;
  } else {
    value = (l * y * y - 2 * l * y + 1) / 2;
  }
  if (value != chromatic_lower_bound(n, lambda)) {
    throw Error(ErrorCode::Internal, "chromatic index case analysis disagrees with the counting bound");
  }
  return value;
}

DetachmentTask min_coloring_task(int n, int lambda) {
  const std::int64_t k = chromatic_index(n, lambda);
  const std::int64_t copies = lambda * binomial(n, 3);
  const std::int64_t base = copies / k;
  const std::int64_t extra = copies % k;

  DetachmentTask task;
  task.alpha = 1;
  task.m = n;
  task.graph = Coloring(1, static_cast<int>(k));
  for (std::int64_t c = 1; c <= k; ++c) {
    const std::int64_t size = base + (c <= extra ? 1 : 0);
    task.graph.add(static_cast<Color>(c), Edge{1, 1, 1}, static_cast<int>(size));
  }
  task.degree_bounds = even_bounds(task.graph, task.alpha, n);
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c) task.mult_targets[Edge{a, b, c}] = lambda;
  return task;
}

Coloring min_coloring(int n, int lambda, const DetachOptions& options) {
  const DetachmentTask task = min_coloring_task(n, lambda);
  DetachResult out = detach(task, options);
  if (!out) throw Error(ErrorCode::Internal, "no detachment for the minimum coloring");
  return std::move(*out.detached);
}

Coloring baranyai_factorization(int n, int lambda, const DetachOptions& options) {
  if (n % 3 != 0) throw Error(ErrorCode::NotDivisible, std::to_string(n) + " is not a multiple of 3");
  Coloring c = min_coloring(n, lambda, options);
  if (Report r = verify_one_factorization(c); !r.ok()) {
    throw Error(ErrorCode::Internal, "minimum coloring is not a one-factorization: " + r.summary());
  }
  return c;
}

bool isomorphic_classes_possible(int n, int lambda) { return !(n % 6 == 1 && lambda % 2 == 1); }

}  // namespace tripext
