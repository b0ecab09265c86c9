#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqbreak/segment.hpp"
#include "seqbreak/signature.hpp"

namespace seqbreak {

/// A rising segment immediately followed by a descending one, with the four
/// boundary samples read from the original series. The peak sits at whichever
/// of REnd / DStart has the larger amplitude (ties go to REnd).
struct PeakRecord {
    std::size_t rising_index = 0;      // position in rep.segments
    std::size_t descending_index = 0;  // rising_index + 1

    std::pair<std::size_t, double> r_start;
    std::pair<std::size_t, double> r_end;
    std::pair<std::size_t, double> d_start;
    std::pair<std::size_t, double> d_end;

    std::size_t peak_time = 0;
    double peak_amplitude = 0.0;
};

/// One record per adjacent P,N pair of the signature. `series` must be the
/// series the representation was computed from.
std::vector<PeakRecord> find_peaks(const RepresentedSequence& rep, const TimeSeries& series,
                                   const SlopeConfig& cfg);

/// Successive differences of peak times; empty for fewer than two peaks.
std::vector<long long> intervals(const std::vector<PeakRecord>& peaks);

}  // namespace seqbreak
