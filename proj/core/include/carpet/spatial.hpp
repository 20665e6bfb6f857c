// Copyright 2026 The carpetcurl Authors.
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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "carpet/polygon.hpp"

namespace carpet {

// Uniform bucket grid over bounding boxes; exact tests happen afterwards, so
// buckets are padded and may over-report.
class BucketIndex {
 public:
  explicit BucketIndex(const std::vector<PolyRegion>& regions) : stamp_(regions.size(), 0) {
    if (regions.empty()) return;
    x0_ = y0_ = 1e300;
    double x1 = -1e300, y1 = -1e300;
    for (const auto& r : regions) {
      x0_ = std::min(x0_, r.bbox().x0.get_d());
      y0_ = std::min(y0_, r.bbox().y0.get_d());
      x1 = std::max(x1, r.bbox().x1.get_d());
      y1 = std::max(y1, r.bbox().y1.get_d());
    }
    n_ = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(regions.size()))), 1, 512);
    w_ = std::max(x1 - x0_, 1e-300) / n_;
    h_ = std::max(y1 - y0_, 1e-300) / n_;
    buckets_.resize(static_cast<std::size_t>(n_) * n_);
    for (std::size_t i = 0; i < regions.size(); ++i) {
      auto [c0, r0, c1, r1] = span(regions[i].bbox());
      for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) buckets_[static_cast<std::size_t>(r) * n_ + c].push_back(i);
      }
    }
  }

  // Candidates whose padded box meets `box`, ascending.
  std::vector<std::size_t> query(const Box& box) {
    std::vector<std::size_t> out;
    if (buckets_.empty()) return out;
    ++tick_;
    auto [c0, r0, c1, r1] = span(box);
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        for (std::size_t i : buckets_[static_cast<std::size_t>(r) * n_ + c]) {
          if (stamp_[i] != tick_) {
            stamp_[i] = tick_;
            out.push_back(i);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::array<int, 4> span(const Box& b) const {
    constexpr double pad = 1e-9;
    auto col = [&](double x) { return std::clamp(static_cast<int>(std::floor((x - x0_) / w_)), 0, n_ - 1); };
    auto row = [&](double y) { return std::clamp(static_cast<int>(std::floor((y - y0_) / h_)), 0, n_ - 1); };
    return {col(b.x0.get_d() - pad), row(b.y0.get_d() - pad), col(b.x1.get_d() + pad),
            row(b.y1.get_d() + pad)};
  }

  double x0_ = 0, y0_ = 0, w_ = 1, h_ = 1;
  int n_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<unsigned> stamp_;
  unsigned tick_ = 0;
};

}  // namespace carpet
