#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stlf {

enum class errc {
  // series validation
  empty_series,
  negative_reading,
  non_finite_reading,
  // slot arithmetic
  slot_underflow,
  // ingest
  malformed_line,
  slot_out_of_range,
  non_numeric_field,
  missing_class_record,
  // aggregation
  level_exceeds_corpus,
  misaligned_members,
  mixed_class,
  // predictability / dataset
  series_too_short,
  invalid_params,
  too_few_samples,
  // models
  shape_mismatch,
  diverged_loss,
  // metrics
  length_mismatch,
  zero_denominator,
  all_points_skipped,
  // cli
  config_invalid,
  input_missing,
  io_failure,
};

const char* errc_name(errc code) noexcept;

/// Library-wide exception. `code()` identifies the failure; `index()` carries
/// the offending position (reading offset, sample row, ...) when one exists,
/// otherwise -1.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what, std::int64_t index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  errc code_;
  std::int64_t index_;
};

[[noreturn]] inline void fail(errc code, const std::string& what, std::int64_t index = -1) {
  throw Error(code, what, index);
}

}  // namespace stlf
