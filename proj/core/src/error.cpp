#include "stlf/error.hpp"

namespace stlf {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_series: return "EmptySeries";
    case errc::negative_reading: return "NegativeReading";
    case errc::non_finite_reading: return "NonFiniteReading";
    case errc::slot_underflow: return "Underflow";
    case errc::malformed_line: return "MalformedLine";
    case errc::slot_out_of_range: return "SlotOutOfRange";
    case errc::non_numeric_field: return "NonNumericField";
    case errc::missing_class_record: return "MissingClassRecord";
    case errc::level_exceeds_corpus: return "LevelExceedsCorpus";
    case errc::misaligned_members: return "MisalignedMembers";
    case errc::mixed_class: return "MixedClass";
    case errc::series_too_short: return "SeriesTooShort";
    case errc::invalid_params: return "InvalidParams";
    case errc::too_few_samples: return "TooFewSamples";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::diverged_loss: return "DivergedLoss";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::all_points_skipped: return "AllPointsSkipped";
    case errc::config_invalid: return "ConfigInvalid";
    case errc::input_missing: return "InputMissing";
    case errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace stlf
