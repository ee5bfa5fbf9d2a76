#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace carmen {

// Deterministic fork-join reduction over [0, count). chunk(begin, end) maps a
// contiguous range to a partial result; combine must be associative. Partials
// are combined in ascending range order, so the result is independent of the
// worker count.
template <class T, class ChunkFn, class CombineFn>
T parallel_reduce(std::uint64_t count, int workers, T init, ChunkFn chunk, CombineFn combine) {
  if (count == 0) return init;
  std::uint64_t w = workers < 1 ? 1 : static_cast<std::uint64_t>(workers);
  if (w > count) w = count;
  if (w > 64) w = 64;
  if (w == 1) return combine(std::move(init), chunk(0, count));

  std::vector<T> partials(w, init);
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::uint64_t step = count / w;
  const std::uint64_t extra = count % w;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t end = begin + step + (i < extra ? 1 : 0);
    threads.emplace_back([&, i, begin, end] { partials[i] = chunk(begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();

  T acc = std::move(init);
  for (auto& p : partials) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace carmen
