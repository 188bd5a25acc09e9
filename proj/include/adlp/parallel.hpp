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

#ifndef ADLP_PARALLEL_HPP
#define ADLP_PARALLEL_HPP

namespace adlp {

// Process-wide switch for the OpenMP paths. Kernels partition work into
// fixed-size slots and reduce serially in slot order, so results are
// bit-identical for any thread count and for the serial fallback.
void set_parallel(bool enabled);
bool parallel_enabled();

// Threads OpenMP would use right now (1 when built without OpenMP or when
// parallelism is disabled).
int worker_count();

}  // namespace adlp

#endif  // ADLP_PARALLEL_HPP
