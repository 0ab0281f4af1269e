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

#pragma once

// Conway's Game of Life on the unbounded plane, stored sparsely.
//
// life_step applies the rule exactly as the formal system writes it:
//
//   N(p, q, h) = (sum of State over the 3x3 block at (p, q)) - State(p, q, h)
//   State(p, q, h + 1) = 1 iff N <= 3 and (3 - State(p, q, h)) <= N
//
// life_step_oracle is an unrelated birth-on-3 / survive-on-2-or-3
// implementation kept for differential testing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace multiverse {

struct CellCoord {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

struct BoundingBox {
  std::int64_t min_p, min_q, max_p, max_q;

  std::int64_t width() const noexcept { return max_p - min_p + 1; }
  std::int64_t height() const noexcept { return max_q - min_q + 1; }
  BoundingBox united(const BoundingBox& other) const noexcept;
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Finite set of live cells; every other cell is dead. Cells are kept
/// sorted and unique, so equality is set equality.
class LifeState {
 public:
  LifeState() = default;
  explicit LifeState(std::vector<CellCoord> cells);

  const std::vector<CellCoord>& cells() const noexcept { return cells_; }
  std::size_t population() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(CellCoord c) const noexcept;

  /// Empty state has no bounding box.
  std::optional<BoundingBox> bounds() const noexcept;

  LifeState translated(std::int64_t dp, std::int64_t dq) const;

  friend bool operator==(const LifeState&, const LifeState&) = default;

 private:
  std::vector<CellCoord> cells_;
};

/// Live cells among the 8 neighbours of (p, q).
int neighbor_count(const LifeState& state, std::int64_t p, std::int64_t q);

/// The formal-system rule: State' = 1 iff N <= 3 and (3 - State) <= N.
constexpr int next_cell_state(int state, int neighbors) noexcept {
  return (neighbors <= 3 && (3 - state) <= neighbors) ? 1 : 0;
}

LifeState life_step(const LifeState& state);

/// Independent textbook implementation (B3/S23) for differential testing.
LifeState life_step_oracle(const LifeState& state);

inline constexpr std::size_t kDefaultCellBudget = 1'000'000;

/// states[h + 1] == life_step(states[h]) for h in [0, H).
struct BlockHistory {
  std::vector<LifeState> states;

  std::size_t horizon() const noexcept { return states.empty() ? 0 : states.size() - 1; }
  /// Union of all non-empty bounds.
  std::optional<BoundingBox> bounds() const noexcept;
};

/// H + 1 states. Throws CellBudgetExceeded (carrying h) when any state has
/// more than `cell_budget` live cells.
BlockHistory run_block(const LifeState& initial, std::size_t horizon,
                       std::size_t cell_budget = kDefaultCellBudget);

struct Periodicity {
  std::size_t period;
  std::int64_t dp;
  std::int64_t dq;
};

/// Smallest h in [1, max_h] such that state h is state 0 translated by
/// (dp, dq). nullopt when none exists within max_h.
std::optional<Periodicity> detect_period(const LifeState& initial, std::size_t max_h,
                                         std::size_t cell_budget = kDefaultCellBudget);

}  // namespace multiverse
