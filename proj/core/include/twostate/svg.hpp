// Copyright 2026 The twostate Authors
//
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

#pragma once

#include <string>

#include "twostate/sweep.hpp"

namespace twostate {

struct SvgOptions {
  std::string title;
  int width = 720;
  int height = 480;
};

/// Self-contained line plot of a sweep table, one polyline per series, with
/// linear axes. Output is deterministic for a given table.
[[nodiscard]] std::string to_svg(const SweepTable& table,
                                 const SvgOptions& options = {});

}  // namespace twostate
