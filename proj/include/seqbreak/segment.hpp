#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqbreak/series.hpp"

namespace seqbreak {

/// A line evaluated at absolute sample indices: F(t) = slope * t + intercept.
struct LinearFunction {
    double slope = 0.0;
    double intercept = 0.0;

    double operator()(double t) const { return slope * t + intercept; }
};

enum class FitKind { kInterpolation, kRegression };

const char* to_string(FitKind kind);
FitKind fit_kind_from_string(const std::string& text);

/// One maximal subsequence [start, end] (inclusive) with the line that drove
/// the split decision (break_line) and the line stored for queries and
/// reconstruction (rep_line). max_dev is the worst |break_line(t) - s_t|
/// over the subsequence.
struct Segment {
    std::size_t start = 0;
    std::size_t end = 0;
    LinearFunction break_line;
    LinearFunction rep_line;
    double max_dev = 0.0;
    FitKind fit_kind = FitKind::kInterpolation;

    std::size_t length() const { return end - start + 1; }
};

/// Contiguous, non-overlapping segment list covering [0, n-1]; the compact
/// stored form of a series.
struct RepresentedSequence {
    std::string source_id;
    std::size_t length = 0;
    double epsilon = 0.0;
    FitKind fit_kind = FitKind::kInterpolation;
    std::vector<Segment> segments;
    std::optional<NormalizationParams> norm;

    /// Segment end indices except the last one, i.e. the places where one
    /// subsequence ends and the next begins.
    std::vector<std::size_t> breakpoints() const;
};

/// Checks the structural invariants: tiling of [0, n-1], finite lines,
/// max_dev >= 0, and the epsilon contract for interpolation segments of
/// length >= 3. Throws Error on violation.
void validate_representation(const RepresentedSequence& rep);

/// Cost weights for the dynamic-programming breaker:
/// a * (#segments) + b * (sum of per-segment max deviations), a + b > 0.
struct DPConfig {
    double a = 1.0;
    double b = 1.0;
};

/// Line through (i, s_i) and (j, s_j); for i == j a flat line at s_i.
LinearFunction fit_interpolation(const TimeSeries& s, std::size_t i, std::size_t j);

/// Ordinary least squares over the points (t, s_t), t in [i, j]; for a
/// single point a flat line at that sample.
LinearFunction fit_regression(const TimeSeries& s, std::size_t i, std::size_t j);

/// Maximum |line(t) - s_t| over [i, j] and its position; ties resolve to the
/// smallest index.
std::pair<std::size_t, double> max_deviation(const TimeSeries& s, std::size_t i, std::size_t j,
                                             const LinearFunction& line);

/// Which line a final segment stores as rep_line.
enum class RepLine { kRegression, kBreakLine };

/// Recursive breaker: fit a line of `fit` to the range, locate the worst
/// point, stop when it deviates less than epsilon, otherwise split there and
/// attach the split point to the closer side's refit line (ties go left).
/// Ranges of length <= 2 are always accepted. rep_line of every final
/// segment is its regression line unless rep says otherwise.
RepresentedSequence segment_recursive(const TimeSeries& s, double epsilon, FitKind fit,
                                      RepLine rep = RepLine::kRegression);

/// Globally optimal segmentation under cost(): minimizes
/// a * k + b * sum(max_dev), deviations measured against each candidate
/// segment's interpolation line. Ties prefer fewer segments, then the
/// lexicographically earliest breakpoint sequence. O(n^3).
RepresentedSequence segment_dp(const TimeSeries& s, const DPConfig& cfg,
                               RepLine rep = RepLine::kRegression);

double cost(const RepresentedSequence& rep, const DPConfig& cfg);

/// Evaluates each covering segment's rep_line at every index.
TimeSeries reconstruct(const RepresentedSequence& rep);

/// n / (params_per_segment * #segments).
double compression_ratio(const RepresentedSequence& rep, std::size_t params_per_segment);

/// Text representation format. Header:
///   REP <source_id> <n> <epsilon> <fit_kind> <phi-if-known|->
/// optionally followed by `NORM <mean> <std>`, then one line per segment:
///   SEG <start> <end> <rep_slope> <rep_intercept> <break_slope> <break_intercept> <max_dev>
/// Reals carry 17 significant digits so reload is bit-faithful.
void save_representation(std::ostream& out, const RepresentedSequence& rep,
                         std::optional<double> phi = std::nullopt);
void save_representation_file(const std::string& path, const RepresentedSequence& rep,
                              std::optional<double> phi = std::nullopt);
RepresentedSequence load_representation(std::istream& in);
RepresentedSequence load_representation_file(const std::string& path);

/// 17-significant-digit formatting used by every text format in the library.
std::string format_real(double v);

}  // namespace seqbreak
