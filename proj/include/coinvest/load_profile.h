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

#ifndef COINVEST_LOAD_PROFILE_H_
#define COINVEST_LOAD_PROFILE_H_

#include <span>
#include <vector>

namespace coinvest {

// Expected request load of one player in each timeslot of a day.
class LoadProfile {
 public:
  LoadProfile() = default;
  // Throws std::invalid_argument on negative or non-finite entries.
  explicit LoadProfile(std::vector<double> loads);

  static LoadProfile Zero(int slots);
  static LoadProfile Constant(int slots, double level);

  std::span<const double> loads() const { return loads_; }
  int slots() const { return static_cast<int>(loads_.size()); }
  double operator[](int slot) const { return loads_[slot]; }

  // Compensated sum over all slots.
  double DailyTotal() const;

 private:
  std::vector<double> loads_;
};

}  // namespace coinvest

#endif  // COINVEST_LOAD_PROFILE_H_
