#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace symspec {

/// Pairwise (tree) summation over fixed-size leaves.
///
/// The tree shape depends only on the input length, so results are bitwise
/// reproducible regardless of how callers partition the work.
double pairwise_sum(std::span<const double> values);

/// Pairwise sum of f(i) for i in [begin, end) without materialising the terms.
template <class Fn>
double pairwise_sum_of(std::size_t begin, std::size_t end, const Fn& f) {
  constexpr std::size_t kLeaf = 64;
  if (end - begin <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum_of(begin, mid, f) + pairwise_sum_of(mid, end, f);
}

/// Worker budget for parallel scans. Defaults to $SYMSPEC_THREADS, else 1.
int thread_budget();
void set_thread_budget(int threads);

/// Runs body(begin, end) over [0, count) split into contiguous blocks.
/// Block boundaries do not depend on the worker count.
void parallel_blocks(std::size_t count, std::size_t block, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace symspec
