#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace kasami {

// Splits [0, total) into `workers` contiguous chunks, runs `chunk(lo, hi)` on
// each, and folds the per-chunk results in chunk order.  The merge order is
// fixed by the partition, not by thread timing, so results are independent of
// the worker count and schedule.
template <class Local, class ChunkFn, class MergeFn>
Local parallel_reduce(std::uint64_t total, int workers, ChunkFn chunk, MergeFn merge) {
  if (workers < 1) workers = 1;
  if (workers == 1 || total < 2) return chunk(0, total);
  std::uint64_t w = static_cast<std::uint64_t>(workers);
  if (w > total) w = total;
  std::vector<Local> parts(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::uint64_t i = 0; i < w; ++i) {
    std::uint64_t lo = total * i / w, hi = total * (i + 1) / w;
    threads.emplace_back([&parts, &chunk, i, lo, hi] { parts[i] = chunk(lo, hi); });
  }
  for (auto& t : threads) t.join();
  Local acc = std::move(parts[0]);
  for (std::uint64_t i = 1; i < w; ++i) acc = merge(std::move(acc), std::move(parts[i]));
  return acc;
}

}  // namespace kasami
