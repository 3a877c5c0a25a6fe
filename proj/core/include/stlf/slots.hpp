#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "stlf/error.hpp"

namespace stlf {

inline constexpr int kSlotsPerDay = 48;

/// Weekday of day 0. Weekdays are encoded 0 = Monday .. 6 = Sunday; the
/// default epoch is 2009-01-01, a Thursday.
inline constexpr int kDefaultEpochWeekday = 3;

/// Half-hour position on the 30-minute grid: `day` counts days since the
/// epoch, `slot` is the half-hour of day in 1..48 (slot 1 = 00:00-00:30).
struct SlotIndex {
  std::int64_t day = 0;
  int slot = 1;

  auto operator<=>(const SlotIndex&) const = default;

  /// Slots since (day 0, slot 1).
  std::int64_t linear() const noexcept { return day * kSlotsPerDay + (slot - 1); }

  static SlotIndex from_linear(std::int64_t n) {
    if (n < 0) fail(errc::slot_underflow, "slot index precedes day 0 slot 1");
    return SlotIndex{n / kSlotsPerDay, static_cast<int>(n % kSlotsPerDay) + 1};
  }
};

/// Advances `s` by `k` half-hours (k may be negative) with day rollover.
SlotIndex slot_add(SlotIndex s, std::int64_t k);

/// Weekday (0 = Monday .. 6 = Sunday) of `day`, given the weekday of day 0.
int weekday_of(std::int64_t day, int epoch_weekday);

/// True iff `day` falls Monday..Friday.
bool is_weekday(std::int64_t day, int epoch_weekday);

/// Per-slot weekday flags for `n_slots` slots starting at `start`.
std::vector<bool> weekday_mask(SlotIndex start, std::size_t n_slots, int epoch_weekday);

}  // namespace stlf
