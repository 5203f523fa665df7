// Copyright 2026 The fuzzygraph Authors
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
#include <vector>

namespace fzg {

struct ReproCheck {
  std::string label;  // e.g. "Example 2.1: WI(G)=7.4"
  bool passed = false;
};

/// Recomputes every figure of the three published counterexamples from the
/// embedded reference graphs. Hermetic: no file or clock input.
std::vector<ReproCheck> run_repro();

/// One `<label> PASS|FAIL` line per check.
std::string repro_text(const std::vector<ReproCheck>& checks);

}  // namespace fzg
