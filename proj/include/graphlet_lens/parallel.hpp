// Copyright 2026 The graphlet-lens Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHLET_LENS_PARALLEL_HPP_
#define GRAPHLET_LENS_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace glens {

/// Worker count from GRAPHLET_LENS_THREADS, else the hardware concurrency.
int default_thread_count();

/// Runs task(i) for every i in [0, n) on up to `threads` workers. Tasks are
/// claimed dynamically, so callers must make each task's result independent
/// of which worker ran it. The first exception thrown by a task is rethrown
/// after all workers have joined.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace glens

#endif  // GRAPHLET_LENS_PARALLEL_HPP_
