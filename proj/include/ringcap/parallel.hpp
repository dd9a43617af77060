// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace ringcap {

// Worker cap: min(hardware_concurrency, RINGCAP_THREADS) with RINGCAP_THREADS
// read once at first use.
int worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. Work is handed
// out in fixed-index order so results that are written to slot i are
// independent of the thread count. Exceptions from workers are rethrown on
// the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ringcap
