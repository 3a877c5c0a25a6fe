#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "stlf/series.hpp"

namespace stlf {

/// A sampled meter group at one aggregation level. Members are drawn without
/// replacement and stored sorted ascending.
struct GroupSample {
  int level = 1;           // k, number of meters summed
  int index = 0;           // group number within the level (0-based)
  std::uint64_t seed = 0;  // seed the members were drawn with
  std::vector<std::uint64_t> member_ids;
};

/// Pointwise sum of the sampled group's series.
struct AggregateSeries {
  GroupSample group;
  LoadClass cls = LoadClass::other;
  SlotIndex start;
  std::vector<double> values;
};

/// Draws k meter ids uniformly without replacement, deterministically from
/// (ids order, k, seed) via a seeded Fisher-Yates over the canonically sorted
/// id list. Throws LevelExceedsCorpus when k > |ids|.
GroupSample sample_group(std::span<const std::uint64_t> sorted_ids, int k, std::uint64_t seed);

/// Pointwise sum of members; all members must share start, length and class.
AggregateSeries aggregate(std::span<const MeterSeries* const> members);

/// Convenience: resolve a GroupSample against a corpus and sum it.
AggregateSeries aggregate(const std::map<std::uint64_t, MeterSeries>& corpus, const GroupSample& group);

/// Default aggregation-level schedules, strictly increasing and capped at the
/// corpus size.
std::vector<int> level_schedule(LoadClass cls, std::size_t corpus_size);

/// Caps an explicit schedule at corpus_size, keeping it strictly increasing.
std::vector<int> cap_schedule(std::span<const int> levels, std::size_t corpus_size);

}  // namespace stlf
