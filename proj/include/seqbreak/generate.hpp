#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seqbreak/series.hpp"

namespace seqbreak {

enum class GeneratorKind { kGoalpost, kEcgLike, kNoise, kRamp };

GeneratorKind generator_kind_from_string(const std::string& text);
const char* to_string(GeneratorKind kind);

/// Deterministic test-data generator: the same spec and seed always produce
/// the same series, bit for bit. All outputs are snapped to multiples of
/// 2^-10 so that amplitude shifts by grid values stay exact in doubles.
///
///   goalpost  flat baseline with exactly two triangular peaks of distinct
///             heights; `amplitude` scales the peak height, `flank` is the
///             rise length in samples (fall mirrors it).
///   ecg_like  periodic sharp spikes; spacing comes from `spacing` when
///             non-empty (one spike per entry plus the first), otherwise
///             spikes repeat every `period` samples. `flank` is the rise and
///             fall width.
///   noise     uniform noise in [-amplitude, amplitude]; amplitude 0 gives a
///             constant zero series.
///   ramp      one exact line from 0 to amplitude.
///
/// Ranges: length >= 1; amplitude >= 0; noise >= 0; flank >= 1;
/// period >= 2 * flank + 2; spacing entries >= 2 * flank + 2. Violations
/// throw BadSpec.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::kGoalpost;
    std::size_t length = 512;
    double amplitude = 40.0;
    double period = 137.0;
    double noise = 0.0;
    std::size_t flank = 24;
    std::vector<long long> spacing;
    std::uint64_t seed = 1;
    std::string id;
};

/// Documented per-kind defaults (what the CLI uses when flags are absent):
/// goalpost 512/40/flank 24/no noise; ecg_like 512/176/flank 6/period 137/
/// noise 2; noise 512/1; ramp 512/100.
GeneratorSpec default_spec(GeneratorKind kind);

TimeSeries generate(const GeneratorSpec& spec);

}  // namespace seqbreak
