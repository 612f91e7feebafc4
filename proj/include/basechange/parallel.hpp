#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "basechange/fincat.hpp"

namespace basechange {

// Runs independent checks on a bounded pool; results keep task order so the
// merged report does not depend on scheduling. StructuralError becomes a
// structural entry of that task's report.
inline std::vector<LawReport> run_parallel(const std::vector<std::function<LawReport()>>& tasks) {
  std::vector<LawReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (const StructuralError& e) {
        out[i].broken(e.what());
      }
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t nthreads = std::min<std::size_t>(hw, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

inline LawReport merge_all(const std::vector<LawReport>& parts) {
  LawReport rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

}  // namespace basechange
