#include "seqbreak/peaks.hpp"

#include "seqbreak/errors.hpp"

namespace seqbreak {

std::vector<PeakRecord> find_peaks(const RepresentedSequence& rep, const TimeSeries& series,
                                   const SlopeConfig& cfg) {
    if (series.size() != rep.length)
        throw Error("series length does not match the representation");

    std::vector<PeakRecord> peaks;
    for (std::size_t k = 0; k + 1 < rep.segments.size(); ++k) {
        const Segment& rise = rep.segments[k];
        const Segment& fall = rep.segments[k + 1];
        if (classify_slope(rise.rep_line.slope, cfg) != 'P' ||
            classify_slope(fall.rep_line.slope, cfg) != 'N')
            continue;

        PeakRecord rec;
        rec.rising_index = k;
        rec.descending_index = k + 1;
        rec.r_start = {rise.start, series[rise.start]};
        rec.r_end = {rise.end, series[rise.end]};
        rec.d_start = {fall.start, series[fall.start]};
        rec.d_end = {fall.end, series[fall.end]};
        // The peak is at whichever boundary sample is higher; ties keep REnd.
        if (rec.r_end.second >= rec.d_start.second) {
            rec.peak_time = rec.r_end.first;
            rec.peak_amplitude = rec.r_end.second;
        } else {
            rec.peak_time = rec.d_start.first;
            rec.peak_amplitude = rec.d_start.second;
        }
        peaks.push_back(rec);
    }
    return peaks;
}

std::vector<long long> intervals(const std::vector<PeakRecord>& peaks) {
    std::vector<long long> out;
    for (std::size_t k = 0; k + 1 < peaks.size(); ++k) {
        const long long gap = static_cast<long long>(peaks[k + 1].peak_time) -
                              static_cast<long long>(peaks[k].peak_time);
        if (gap <= 0) throw Error("peaks are not sorted by time");
        out.push_back(gap);
    }
    return out;
}

}  // namespace seqbreak
