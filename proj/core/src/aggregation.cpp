#include "stlf/aggregation.hpp"

#include <algorithm>

#include "stlf/error.hpp"
#include "stlf/rng.hpp"

namespace stlf {

GroupSample sample_group(std::span<const std::uint64_t> sorted_ids, int k, std::uint64_t seed) {
  if (k < 1) fail(errc::invalid_params, "aggregation level must be >= 1");
  if (static_cast<std::size_t>(k) > sorted_ids.size())
    fail(errc::level_exceeds_corpus,
         "level " + std::to_string(k) + " exceeds corpus size " + std::to_string(sorted_ids.size()));

  std::vector<std::uint64_t> pool(sorted_ids.begin(), sorted_ids.end());
  std::sort(pool.begin(), pool.end());  // canonical order regardless of caller

  // partial Fisher-Yates: after i swaps, pool[0..i] is a uniform i+1-subset
  SplitMix64 rng(seed);
  const std::size_t n = pool.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());

  GroupSample g;
  g.level = k;
  g.seed = seed;
  g.member_ids = std::move(pool);
  return g;
}

AggregateSeries aggregate(std::span<const MeterSeries* const> members) {
  if (members.empty()) fail(errc::invalid_params, "aggregate of zero members");
  const MeterSeries& first = *members.front();
  for (const MeterSeries* m : members) {
    if (m->start != first.start || m->size() != first.size())
      fail(errc::misaligned_members, "members differ in start or length");
    if (m->cls != first.cls) fail(errc::mixed_class, "members span multiple load classes");
  }

  AggregateSeries out;
  out.cls = first.cls;
  out.start = first.start;
  out.values.assign(first.size(), 0.0);
  out.group.level = static_cast<int>(members.size());
  for (const MeterSeries* m : members) {
    out.group.member_ids.push_back(m->meter_id);
    for (std::size_t t = 0; t < m->values.size(); ++t) out.values[t] += m->values[t];
  }
  std::sort(out.group.member_ids.begin(), out.group.member_ids.end());
  return out;
}

AggregateSeries aggregate(const std::map<std::uint64_t, MeterSeries>& corpus, const GroupSample& group) {
  std::vector<const MeterSeries*> members;
  members.reserve(group.member_ids.size());
  for (std::uint64_t id : group.member_ids) {
    auto it = corpus.find(id);
    if (it == corpus.end())
      fail(errc::invalid_params, "group member " + std::to_string(id) + " not in corpus");
    members.push_back(&it->second);
  }
  AggregateSeries out = aggregate(members);
  out.group = group;
  return out;
}

std::vector<int> cap_schedule(std::span<const int> levels, std::size_t corpus_size) {
  std::vector<int> out;
  for (int k : levels) {
    int capped = std::min<int>(k, static_cast<int>(corpus_size));
    if (capped >= 1 && (out.empty() || capped > out.back())) out.push_back(capped);
  }
  return out;
}

std::vector<int> level_schedule(LoadClass cls, std::size_t corpus_size) {
  if (corpus_size < 1) fail(errc::invalid_params, "empty corpus");
  if (cls == LoadClass::sme) {
    const int sme[] = {1, 5, 20, 50, 100, 250};
    return cap_schedule(sme, corpus_size);
  }
  const int residential[] = {1, 5, 20, 100, 200, 400, 800, 1200, 1700};
  return cap_schedule(residential, corpus_size);
}

}  // namespace stlf
