#include "symspec/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace symspec {

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_of(0, values.size(), [&](std::size_t i) { return values[i]; });
}

namespace {

int initial_budget() {
  if (const char* env = std::getenv("SYMSPEC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::atomic<int>& budget() {
  static std::atomic<int> value{initial_budget()};
  return value;
}

}  // namespace

int thread_budget() { return budget().load(); }

void set_thread_budget(int threads) { budget().store(std::max(1, threads)); }

void parallel_blocks(std::size_t count, std::size_t block, const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  block = std::max<std::size_t>(block, 1);
  const std::size_t blocks = (count + block - 1) / block;
  const int workers = static_cast<int>(std::min<std::size_t>(blocks, static_cast<std::size_t>(thread_budget())));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b * block, std::min(count, (b + 1) * block));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < blocks; b = next++) body(b * block, std::min(count, (b + 1) * block));
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace symspec
