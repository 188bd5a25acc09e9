// Copyright 2026 The adlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adlp/parallel.hpp"

#include <atomic>

#ifdef ADLP_HAVE_OPENMP
#include <omp.h>
#endif

namespace adlp {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool enabled) { g_parallel.store(enabled); }

bool parallel_enabled() {
#ifdef ADLP_HAVE_OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

int worker_count() {
#ifdef ADLP_HAVE_OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace adlp
