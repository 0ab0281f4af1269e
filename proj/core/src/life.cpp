// Copyright 2026 The Multiverse Authors
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

#include "multiverse/life.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "multiverse/errors.hpp"

namespace multiverse {

namespace {

struct CellHash {
  std::size_t operator()(const CellCoord& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.p) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.q) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Dense windows are used while the padded bounding box stays comparable
// to the population; far-flung patterns fall back to hashing.
constexpr std::int64_t kDenseMinArea = 1 << 14;
constexpr std::int64_t kDenseAreaPerCell = 64;
constexpr std::int64_t kDenseMaxArea = std::int64_t{1} << 26;

LifeState step_dense(const LifeState& state, const BoundingBox& box) {
  // Window covers the box plus a margin of 2: one ring of candidate cells,
  // and one ring of always-dead cells so every 3x3 block is in range.
  const std::int64_t p0 = box.min_p - 2;
  const std::int64_t q0 = box.min_q - 2;
  const std::int64_t w = box.width() + 4;
  const std::int64_t h = box.height() + 4;
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(w * h), 0);
  auto at = [&](std::int64_t p, std::int64_t q) -> std::uint8_t& {
    return grid[static_cast<std::size_t>((p - p0) * h + (q - q0))];
  };
  for (const auto& c : state.cells()) at(c.p, c.q) = 1;

  // Vertical triples first, then three of them per cell.
  std::vector<std::uint8_t> column(grid.size(), 0);
  for (std::int64_t i = 0; i < w; ++i) {
    const std::size_t base = static_cast<std::size_t>(i * h);
    for (std::int64_t j = 1; j < h - 1; ++j) {
      const std::size_t k = base + static_cast<std::size_t>(j);
      column[k] = static_cast<std::uint8_t>(grid[k - 1] + grid[k] + grid[k + 1]);
    }
  }

  std::vector<CellCoord> next;
  const auto stride = static_cast<std::size_t>(h);
  for (std::int64_t i = 1; i < w - 1; ++i) {
    for (std::int64_t j = 1; j < h - 1; ++j) {
      const std::size_t k = static_cast<std::size_t>(i * h + j);
      const int self = grid[k];
      const int block = column[k - stride] + column[k] + column[k + stride];
      if (next_cell_state(self, block - self)) next.push_back({p0 + i, q0 + j});
    }
  }
  return LifeState(std::move(next));
}

LifeState step_sparse(const LifeState& state) {
  std::vector<CellCoord> candidates;
  candidates.reserve(state.population() * 9);
  for (const auto& c : state.cells()) {
    for (std::int64_t dp = -1; dp <= 1; ++dp) {
      for (std::int64_t dq = -1; dq <= 1; ++dq) candidates.push_back({c.p + dp, c.q + dq});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::unordered_set<CellCoord, CellHash> live(state.cells().begin(), state.cells().end());
  std::vector<CellCoord> next;
  for (const auto& c : candidates) {
    int block = 0;
    for (std::int64_t a = c.p - 1; a <= c.p + 1; ++a) {
      for (std::int64_t b = c.q - 1; b <= c.q + 1; ++b) block += live.count({a, b}) ? 1 : 0;
    }
    const int self = live.count(c) ? 1 : 0;
    if (next_cell_state(self, block - self)) next.push_back(c);
  }
  return LifeState(std::move(next));
}

}  // namespace

BoundingBox BoundingBox::united(const BoundingBox& o) const noexcept {
  return {std::min(min_p, o.min_p), std::min(min_q, o.min_q), std::max(max_p, o.max_p),
          std::max(max_q, o.max_q)};
}

LifeState::LifeState(std::vector<CellCoord> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool LifeState::contains(CellCoord c) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::optional<BoundingBox> LifeState::bounds() const noexcept {
  if (cells_.empty()) return std::nullopt;
  BoundingBox b{cells_.front().p, cells_.front().q, cells_.back().p, cells_.front().q};
  for (const auto& c : cells_) {
    b.min_q = std::min(b.min_q, c.q);
    b.max_q = std::max(b.max_q, c.q);
  }
  return b;
}

LifeState LifeState::translated(std::int64_t dp, std::int64_t dq) const {
  LifeState out;
  out.cells_.reserve(cells_.size());
  for (const auto& c : cells_) out.cells_.push_back({c.p + dp, c.q + dq});
  return out;  // translation preserves sort order
}

int neighbor_count(const LifeState& state, std::int64_t p, std::int64_t q) {
  int block = 0;
  for (std::int64_t a = p - 1; a <= p + 1; ++a) {
    for (std::int64_t b = q - 1; b <= q + 1; ++b) block += state.contains({a, b}) ? 1 : 0;
  }
  return block - (state.contains({p, q}) ? 1 : 0);
}

LifeState life_step(const LifeState& state) {
  const auto box = state.bounds();
  if (!box) return {};
  const std::int64_t area = (box->width() + 4) * (box->height() + 4);
  const auto pop = static_cast<std::int64_t>(state.population());
  if (area <= kDenseMaxArea && area <= std::max(kDenseMinArea, kDenseAreaPerCell * pop)) {
    return step_dense(state, *box);
  }
  return step_sparse(state);
}

LifeState life_step_oracle(const LifeState& state) {
  // Every live cell casts one vote on each neighbour; sorting groups the
  // votes per cell.
  std::vector<CellCoord> votes;
  votes.reserve(state.population() * 8);
  for (const auto& c : state.cells()) {
    for (std::int64_t dp = -1; dp <= 1; ++dp) {
      for (std::int64_t dq = -1; dq <= 1; ++dq) {
        if (dp != 0 || dq != 0) votes.push_back({c.p + dp, c.q + dq});
      }
    }
  }
  std::sort(votes.begin(), votes.end());
  std::vector<CellCoord> next;
  auto live = state.cells().begin();
  for (std::size_t i = 0; i < votes.size();) {
    std::size_t j = i;
    while (j < votes.size() && votes[j] == votes[i]) ++j;
    const std::size_t n = j - i;
    while (live != state.cells().end() && *live < votes[i]) ++live;
    const bool alive = live != state.cells().end() && *live == votes[i];
    if (n == 3 || (alive && n == 2)) next.push_back(votes[i]);
    i = j;
  }
  return LifeState(std::move(next));
}

std::optional<BoundingBox> BlockHistory::bounds() const noexcept {
  std::optional<BoundingBox> out;
  for (const auto& s : states) {
    if (auto b = s.bounds()) out = out ? out->united(*b) : *b;
  }
  return out;
}

BlockHistory run_block(const LifeState& initial, std::size_t horizon, std::size_t cell_budget) {
  BlockHistory block;
  block.states.reserve(horizon + 1);
  block.states.push_back(initial);
  for (std::size_t h = 0;; ++h) {
    if (block.states.back().population() > cell_budget) {
      throw CellBudgetExceeded("population " + std::to_string(block.states.back().population()) +
                                   " exceeds cell budget " + std::to_string(cell_budget) +
                                   " at h=" + std::to_string(h),
                               static_cast<long long>(h));
    }
    if (h == horizon) break;
    block.states.push_back(life_step(block.states.back()));
  }
  return block;
}

std::optional<Periodicity> detect_period(const LifeState& initial, std::size_t max_h,
                                         std::size_t cell_budget) {
  const auto origin = initial.bounds();
  LifeState state = initial;
  for (std::size_t h = 1; h <= max_h; ++h) {
    state = life_step(state);
    if (state.population() > cell_budget) {
      throw CellBudgetExceeded("population " + std::to_string(state.population()) +
                                   " exceeds cell budget " + std::to_string(cell_budget) +
                                   " at h=" + std::to_string(h),
                               static_cast<long long>(h));
    }
    if (state.population() != initial.population()) continue;
    if (!origin) return Periodicity{h, 0, 0};
    const auto box = *state.bounds();
    const std::int64_t dp = box.min_p - origin->min_p;
    const std::int64_t dq = box.min_q - origin->min_q;
    if (initial.translated(dp, dq) == state) return Periodicity{h, dp, dq};
  }
  return std::nullopt;
}

}  // namespace multiverse
