// Copyright 2026 The dpforms Authors
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

#ifndef DPFORMS_CORE_ACCEPTANCE_HPP_
#define DPFORMS_CORE_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace dpforms {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;     // correct and within budget
  bool correct = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no budget
};

// Runs criteria 1..10 in order, each timed separately. Cached tables are
// built inside the first criterion that needs them, so the timings include
// cold-start costs.
std::vector<CriterionResult> RunAcceptance();

}  // namespace dpforms

#endif  // DPFORMS_CORE_ACCEPTANCE_HPP_
