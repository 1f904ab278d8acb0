// Copyright 2026 The Coinvest Authors
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

#ifndef COINVEST_GOLDEN_SECTION_H_
#define COINVEST_GOLDEN_SECTION_H_

#include <functional>

namespace coinvest {

struct ScalarMaximum {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
};

// Golden-section search for the maximum of a unimodal function on [lo, hi].
// Stops once the bracket is narrower than `width_tolerance`. The endpoints
// are also evaluated so a monotone objective returns its boundary maximum.
ScalarMaximum GoldenSectionMaximize(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    double width_tolerance,
                                    int max_iterations = 500);

}  // namespace coinvest

#endif  // COINVEST_GOLDEN_SECTION_H_
