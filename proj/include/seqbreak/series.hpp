#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace seqbreak {

/// An ordered, uniformly sampled sequence. Sample k sits at integer time
/// index k (0-based); there are no explicit timestamps.
struct TimeSeries {
    std::string id;
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
    double operator[](std::size_t t) const { return samples[t]; }
};

/// Throws if the series is empty or contains non-finite samples.
void check_series(const TimeSeries& s);

/// Shift/scale pair mapping a raw series to mean 0, variance 1 (population
/// convention). Inverse map is x * std + mean.
struct NormalizationParams {
    double mean = 0.0;
    double std = 1.0;
};

/// Canonicalizes to mean 0 and population variance 1.
/// Throws TooShort (length < 2) or DegenerateVariance (all samples equal).
std::pair<TimeSeries, NormalizationParams> normalize(const TimeSeries& series);

/// Inverse of normalize: x -> x * std + mean.
TimeSeries denormalize(const TimeSeries& series, const NormalizationParams& params);

/// Centered moving average with truncated windows at the edges. Window must
/// be odd and 1 <= window <= length; window 1 is the identity.
TimeSeries smooth(const TimeSeries& series, std::size_t window);

/// Reads the line-oriented sample format: one decimal real per line, blank
/// lines and lines starting with '#' ignored. Throws ParseError with the
/// 1-based line number of the first bad line.
TimeSeries read_series(std::istream& in, const std::string& id);
TimeSeries read_series_file(const std::string& path, const std::string& id = "");

void write_series(std::ostream& out, const TimeSeries& series);
void write_series_file(const std::string& path, const TimeSeries& series);

}  // namespace seqbreak
