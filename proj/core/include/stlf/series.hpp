#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stlf/slots.hpp"

namespace stlf {

enum class LoadClass { residential, sme, other };

const char* to_string(LoadClass cls) noexcept;
LoadClass load_class_from_string(const std::string& name);

/// CER customer-type codes: 1 = residential, 2 = SME, anything else = other.
LoadClass load_class_from_code(int code) noexcept;

/// One meter's contiguous half-hourly kWh sequence.
struct MeterSeries {
  std::uint64_t meter_id = 0;
  LoadClass cls = LoadClass::other;
  SlotIndex start;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  /// Slot of the last reading.
  SlotIndex last_slot() const { return slot_add(start, static_cast<std::int64_t>(values.size()) - 1); }
};

/// Builds a MeterSeries after checking every reading is finite and >= 0.
MeterSeries validate_series(std::span<const double> raw_values, SlotIndex start,
                            std::uint64_t meter_id = 0, LoadClass cls = LoadClass::other);

/// Forecast lead in 30-minute steps (M): 2 = one hour, 48 = one day.
struct Horizon {
  int steps = 48;

  static constexpr Horizon one_hour() { return Horizon{2}; }
  static constexpr Horizon one_day() { return Horizon{48}; }

  auto operator<=>(const Horizon&) const = default;
};

}  // namespace stlf
