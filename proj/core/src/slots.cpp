#include "stlf/slots.hpp"

namespace stlf {

SlotIndex slot_add(SlotIndex s, std::int64_t k) {
  return SlotIndex::from_linear(s.linear() + k);
}

int weekday_of(std::int64_t day, int epoch_weekday) {
  std::int64_t w = (epoch_weekday + day) % 7;
  if (w < 0) w += 7;
  return static_cast<int>(w);
}

bool is_weekday(std::int64_t day, int epoch_weekday) {
  return weekday_of(day, epoch_weekday) < 5;
}

std::vector<bool> weekday_mask(SlotIndex start, std::size_t n_slots, int epoch_weekday) {
  std::vector<bool> mask(n_slots);
  SlotIndex s = start;
  for (std::size_t i = 0; i < n_slots; ++i) {
    mask[i] = is_weekday(s.day, epoch_weekday);
    s = slot_add(s, 1);
  }
  return mask;
}

}  // namespace stlf
