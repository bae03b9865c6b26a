// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace conmat {

// Runs body(0..count-1) on up to `jobs` worker threads (jobs <= 1 runs
// inline). Indices are claimed dynamically; callers write results into
// per-index slots, so the outcome is independent of scheduling. The first
// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

// Worker count used when a caller passes jobs = 0.
int default_jobs();

}  // namespace conmat
