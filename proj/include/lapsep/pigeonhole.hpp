// Copyright 2026 The lapsep Authors
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

#ifndef LAPSEP_PIGEONHOLE_HPP_
#define LAPSEP_PIGEONHOLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lapsep {

/// Objects distributed over boxes. With total = r * boxes + s, 0 <= s <
/// boxes, some m boxes always hold at least r*m + min(s, m) objects.
class BoxDistribution {
 public:
  explicit BoxDistribution(std::vector<std::int64_t> counts)
      : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("no boxes");
    for (auto c : counts_) {
      if (c < 0) throw std::invalid_argument("negative box count");
      total_ += c;
    }
  }

  const std::vector<std::int64_t>& counts() const { return counts_; }
  int boxes() const { return static_cast<int>(counts_.size()); }
  std::int64_t total() const { return total_; }
  std::int64_t quotient() const { return total_ / boxes(); }
  std::int64_t remainder() const { return total_ % boxes(); }

  /// r*m + min(s, m).
  std::int64_t GuaranteedTotal(int m) const {
    return quotient() * m + std::min<std::int64_t>(remainder(), m);
  }

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

struct BoxSelection {
  std::vector<int> boxes;  // ascending
  std::int64_t total = 0;
};

/// The m fullest boxes, ties broken toward the lower index. This maximizes
/// the selected total, so it meets the guaranteed bound whenever any
/// m-subset does.
inline BoxSelection SelectBoxes(const BoxDistribution& dist, int m) {
  if (m < 1 || m > dist.boxes()) {
    throw std::invalid_argument("box count m out of range");
  }
  std::vector<int> order(dist.boxes());
  std::iota(order.begin(), order.end(), 0);
  const auto& c = dist.counts();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c[a] > c[b]; });
  BoxSelection out;
  out.boxes.assign(order.begin(), order.begin() + m);
  std::sort(out.boxes.begin(), out.boxes.end());
  for (int b : out.boxes) out.total += c[b];
  return out;
}

}  // namespace lapsep

#endif  // LAPSEP_PIGEONHOLE_HPP_
