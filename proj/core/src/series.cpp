#include "stlf/series.hpp"

#include <cmath>

#include "stlf/error.hpp"

namespace stlf {

const char* to_string(LoadClass cls) noexcept {
  switch (cls) {
    case LoadClass::residential: return "residential";
    case LoadClass::sme: return "sme";
    case LoadClass::other: return "other";
  }
  return "other";
}

LoadClass load_class_from_string(const std::string& name) {
  if (name == "residential") return LoadClass::residential;
  if (name == "sme") return LoadClass::sme;
  if (name == "other") return LoadClass::other;
  fail(errc::invalid_params, "unknown load class: " + name);
}

LoadClass load_class_from_code(int code) noexcept {
  if (code == 1) return LoadClass::residential;
  if (code == 2) return LoadClass::sme;
  return LoadClass::other;
}

MeterSeries validate_series(std::span<const double> raw_values, SlotIndex start,
                            std::uint64_t meter_id, LoadClass cls) {
  if (raw_values.empty()) fail(errc::empty_series, "series is empty");
  for (std::size_t i = 0; i < raw_values.size(); ++i) {
    if (!std::isfinite(raw_values[i]))
      fail(errc::non_finite_reading, "non-finite reading at position " + std::to_string(i),
           static_cast<std::int64_t>(i));
    if (raw_values[i] < 0.0)
      fail(errc::negative_reading, "negative reading at position " + std::to_string(i),
           static_cast<std::int64_t>(i));
  }
  MeterSeries s;
  s.meter_id = meter_id;
  s.cls = cls;
  s.start = start;
  s.values.assign(raw_values.begin(), raw_values.end());
  return s;
}

}  // namespace stlf
