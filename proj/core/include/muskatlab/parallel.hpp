#pragma once

#include <functional>

namespace muskat {

// Global worker count for parallel_for; 0 picks hardware concurrency.
void set_thread_count(int threads);
int thread_count();

// Runs body(i) for i in [0, n).  Iterations must write disjoint slots; the
// result is then independent of scheduling, keeping runs deterministic.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace muskat
