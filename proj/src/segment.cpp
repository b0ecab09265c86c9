#include "seqbreak/segment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "seqbreak/errors.hpp"

namespace seqbreak {

const char* to_string(FitKind kind) {
    return kind == FitKind::kInterpolation ? "interp" : "regress";
}

FitKind fit_kind_from_string(const std::string& text) {
    if (text == "interp" || text == "interpolation") return FitKind::kInterpolation;
    if (text == "regress" || text == "regression") return FitKind::kRegression;
    throw Error("unknown fit kind '" + text + "' (expected interp or regress)");
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

static void check_range(const TimeSeries& s, std::size_t i, std::size_t j) {
    if (i > j || j >= s.size()) throw BadRange(i, j, s.size());
}

LinearFunction fit_interpolation(const TimeSeries& s, std::size_t i, std::size_t j) {
    check_range(s, i, j);
    if (i == j) return {0.0, s[i]};
    const double slope = (s[j] - s[i]) / static_cast<double>(j - i);
    return {slope, s[i] - slope * static_cast<double>(i)};
}

LinearFunction fit_regression(const TimeSeries& s, std::size_t i, std::size_t j) {
    check_range(s, i, j);
    if (i == j) return {0.0, s[i]};
    const std::size_t m = j - i + 1;
    double ty = 0.0, y = 0.0;
    for (std::size_t t = i; t <= j; ++t) {
        y += s[t];
        ty += static_cast<double>(t) * s[t];
    }
    const double t_mean = (static_cast<double>(i) + static_cast<double>(j)) / 2.0;
    const double y_mean = y / static_cast<double>(m);
    // sum (t - t_mean)^2 for consecutive integers: m (m^2 - 1) / 12
    const double stt = static_cast<double>(m) * (static_cast<double>(m) * static_cast<double>(m) - 1.0) / 12.0;
    const double sty = ty - t_mean * y;
    const double slope = sty / stt;
    return {slope, y_mean - slope * t_mean};
}

std::pair<std::size_t, double> max_deviation(const TimeSeries& s, std::size_t i, std::size_t j,
                                             const LinearFunction& line) {
    check_range(s, i, j);
    std::size_t arg = i;
    double best = -1.0;
    for (std::size_t t = i; t <= j; ++t) {
        const double d = std::fabs(line(static_cast<double>(t)) - s[t]);
        if (d > best) {
            best = d;
            arg = t;
        }
    }
    return {arg, best};
}

namespace {

LinearFunction fit_line(const TimeSeries& s, std::size_t i, std::size_t j, FitKind kind) {
    return kind == FitKind::kInterpolation ? fit_interpolation(s, i, j) : fit_regression(s, i, j);
}

Segment make_segment(const TimeSeries& s, std::size_t start, std::size_t end,
                     const LinearFunction& break_line, double dev, FitKind fit, RepLine rep) {
    Segment seg;
    seg.start = start;
    seg.end = end;
    seg.break_line = break_line;
    seg.rep_line = rep == RepLine::kRegression ? fit_regression(s, start, end) : break_line;
    seg.max_dev = dev;
    seg.fit_kind = fit;
    return seg;
}

// Worst interior point of [lo, hi]; the range is guaranteed length >= 3 here.
std::size_t interior_argmax(const TimeSeries& s, std::size_t lo, std::size_t hi,
                            const LinearFunction& line) {
    if (hi - lo < 2) throw Error("cannot split a range without interior points");
    return max_deviation(s, lo + 1, hi - 1, line).first;
}

}  // namespace

RepresentedSequence segment_recursive(const TimeSeries& s, double epsilon, FitKind fit,
                                      RepLine rep) {
    check_series(s);
    if (!(epsilon > 0.0)) throw Error("epsilon must be positive");

    RepresentedSequence out;
    out.source_id = s.id;
    out.length = s.size();
    out.epsilon = epsilon;
    out.fit_kind = fit;

    // Explicit stack, left range pushed last so segments come out in order.
    std::vector<std::pair<std::size_t, std::size_t>> todo{{0, s.size() - 1}};
    while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();

        const LinearFunction line = fit_line(s, lo, hi, fit);
        auto [arg, dev] = max_deviation(s, lo, hi, line);

        // Length <= 2 is always a segment; the line passes through (or is) the data.
        if (dev < epsilon || hi - lo + 1 <= 2) {
            out.segments.push_back(make_segment(s, lo, hi, line, dev, fit, rep));
            continue;
        }

        // A regression line can peak at the range ends; split at the worst
        // interior point instead so neither side comes out empty.
        if (arg == lo || arg == hi) arg = interior_argmax(s, lo, hi, line);

        const LinearFunction left = fit_line(s, lo, arg - 1, fit);
        const LinearFunction right = fit_line(s, arg + 1, hi, fit);
        const double dl = std::fabs(left(static_cast<double>(arg)) - s[arg]);
        const double dr = std::fabs(right(static_cast<double>(arg)) - s[arg]);

        if (dl <= dr) {  // ties attach the split point to the left
            todo.emplace_back(arg + 1, hi);
            todo.emplace_back(lo, arg);
        } else {
            todo.emplace_back(arg, hi);
            todo.emplace_back(lo, arg - 1);
        }
    }
    return out;
}

double cost(const RepresentedSequence& rep, const DPConfig& cfg) {
    double dev_sum = 0.0;
    for (const Segment& seg : rep.segments) dev_sum += seg.max_dev;
    return cfg.a * static_cast<double>(rep.segments.size()) + cfg.b * dev_sum;
}

RepresentedSequence segment_dp(const TimeSeries& s, const DPConfig& cfg, RepLine rep) {
    check_series(s);
    if (!(cfg.a >= 0.0) || !(cfg.b >= 0.0) || !(cfg.a + cfg.b > 0.0))
        throw Error("dp weights must be non-negative with a + b > 0");

    const std::size_t n = s.size();

    // dev[i][j - i]: max deviation of [i, j] from its interpolation line.
    std::vector<std::vector<double>> dev(n);
    for (std::size_t i = 0; i < n; ++i) {
        dev[i].resize(n - i);
        for (std::size_t j = i; j < n; ++j) {
            const LinearFunction line = fit_interpolation(s, i, j);
            dev[i][j - i] = max_deviation(s, i, j, line).second;
        }
    }

    struct State {
        double dev_sum = 0.0;  // accumulated left to right, matching cost()
        std::size_t count = 0;
        double cost = std::numeric_limits<double>::infinity();
        std::vector<std::size_t> ends;  // segment end indices
    };

    // best[j]: optimal segmentation of the prefix [0, j]. Ties prefer fewer
    // segments, then the lexicographically earliest breakpoint sequence.
    std::vector<State> best(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const double seg_dev = dev[i][j - i];
            double cand_sum = seg_dev;
            std::size_t cand_count = 1;
            const State* prev = nullptr;
            if (i > 0) {
                prev = &best[i - 1];
                cand_sum = prev->dev_sum + seg_dev;
                cand_count = prev->count + 1;
            }
            const double cand_cost =
                cfg.a * static_cast<double>(cand_count) + cfg.b * cand_sum;

            State& cur = best[j];
            bool better = false;
            if (cand_cost < cur.cost) {
                better = true;
            } else if (cand_cost == cur.cost) {
                if (cand_count < cur.count) {
                    better = true;
                } else if (cand_count == cur.count) {
                    std::vector<std::size_t> cand_ends = prev ? prev->ends : std::vector<std::size_t>{};
                    cand_ends.push_back(j);
                    better = std::lexicographical_compare(cand_ends.begin(), cand_ends.end(),
                                                          cur.ends.begin(), cur.ends.end());
                }
            }
            if (better) {
                cur.dev_sum = cand_sum;
                cur.count = cand_count;
                cur.cost = cand_cost;
                cur.ends = prev ? prev->ends : std::vector<std::size_t>{};
                cur.ends.push_back(j);
            }
        }
    }

    RepresentedSequence out;
    out.source_id = s.id;
    out.length = n;
    out.epsilon = std::numeric_limits<double>::infinity();  // no pointwise contract
    out.fit_kind = FitKind::kInterpolation;
    std::size_t start = 0;
    for (std::size_t end : best[n - 1].ends) {
        const LinearFunction line = fit_interpolation(s, start, end);
        const double d = max_deviation(s, start, end, line).second;
        out.segments.push_back(make_segment(s, start, end, line, d, FitKind::kInterpolation, rep));
        start = end + 1;
    }
    return out;
}

TimeSeries reconstruct(const RepresentedSequence& rep) {
    TimeSeries out{rep.source_id, {}};
    out.samples.reserve(rep.length);
    for (const Segment& seg : rep.segments)
        for (std::size_t t = seg.start; t <= seg.end; ++t)
            out.samples.push_back(seg.rep_line(static_cast<double>(t)));
    return out;
}

double compression_ratio(const RepresentedSequence& rep, std::size_t params_per_segment) {
    if (params_per_segment < 1) throw Error("params_per_segment must be >= 1");
    return static_cast<double>(rep.length) /
           (static_cast<double>(params_per_segment) * static_cast<double>(rep.segments.size()));
}

std::vector<std::size_t> RepresentedSequence::breakpoints() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < segments.size(); ++k) out.push_back(segments[k].end);
    return out;
}

void validate_representation(const RepresentedSequence& rep) {
    if (rep.segments.empty()) throw Error("representation has no segments");
    if (rep.segments.front().start != 0) throw Error("first segment does not start at 0");
    if (rep.segments.back().end + 1 != rep.length) throw Error("last segment does not end at n-1");
    for (std::size_t k = 0; k < rep.segments.size(); ++k) {
        const Segment& seg = rep.segments[k];
        if (seg.start > seg.end) throw Error("segment with start > end");
        if (k > 0 && seg.start != rep.segments[k - 1].end + 1)
            throw Error("segments are not contiguous");
        if (!std::isfinite(seg.rep_line.slope) || !std::isfinite(seg.rep_line.intercept) ||
            !std::isfinite(seg.break_line.slope) || !std::isfinite(seg.break_line.intercept))
            throw Error("segment line is not finite");
        if (!(seg.max_dev >= 0.0) || !std::isfinite(seg.max_dev))
            throw Error("segment max_dev is negative or non-finite");
        if (seg.fit_kind == FitKind::kInterpolation && seg.length() >= 3 &&
            !(seg.max_dev < rep.epsilon))
            throw Error("interpolation segment violates the epsilon contract");
    }
}

void save_representation(std::ostream& out, const RepresentedSequence& rep,
                         std::optional<double> phi) {
    out << "REP " << rep.source_id << ' ' << rep.length << ' ' << format_real(rep.epsilon) << ' '
        << to_string(rep.fit_kind) << ' ' << (phi ? format_real(*phi) : "-") << '\n';
    if (rep.norm)
        out << "NORM " << format_real(rep.norm->mean) << ' ' << format_real(rep.norm->std) << '\n';
    for (const Segment& seg : rep.segments)
        out << "SEG " << seg.start << ' ' << seg.end << ' ' << format_real(seg.rep_line.slope)
            << ' ' << format_real(seg.rep_line.intercept) << ' '
            << format_real(seg.break_line.slope) << ' ' << format_real(seg.break_line.intercept)
            << ' ' << format_real(seg.max_dev) << '\n';
}

void save_representation_file(const std::string& path, const RepresentedSequence& rep,
                              std::optional<double> phi) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    save_representation(out, rep, phi);
}

namespace {

double parse_real(const std::string& tok, const char* what) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw IoError(std::string("bad ") + what + ": '" + tok + "'");
    return v;
}

}  // namespace

RepresentedSequence load_representation(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty representation stream");
    std::istringstream head(line);
    std::string tag, fit, phi;
    RepresentedSequence rep;
    std::string eps;
    if (!(head >> tag >> rep.source_id >> rep.length >> eps >> fit >> phi) || tag != "REP")
        throw IoError("bad representation header: '" + line + "'");
    rep.epsilon = parse_real(eps, "epsilon");
    rep.fit_kind = fit_kind_from_string(fit);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "NORM") {
            std::string mean, std_dev;
            if (!(ls >> mean >> std_dev)) throw IoError("bad NORM line: '" + line + "'");
            rep.norm = NormalizationParams{parse_real(mean, "mean"), parse_real(std_dev, "std")};
        } else if (kind == "SEG") {
            Segment seg;
            std::string rs, ri, bs, bi, md;
            if (!(ls >> seg.start >> seg.end >> rs >> ri >> bs >> bi >> md))
                throw IoError("bad SEG line: '" + line + "'");
            seg.rep_line = {parse_real(rs, "rep slope"), parse_real(ri, "rep intercept")};
            seg.break_line = {parse_real(bs, "break slope"), parse_real(bi, "break intercept")};
            seg.max_dev = parse_real(md, "max_dev");
            seg.fit_kind = rep.fit_kind;
            rep.segments.push_back(seg);
        } else {
            throw IoError("unexpected line in representation: '" + line + "'");
        }
    }
    if (rep.segments.empty()) throw IoError("representation has no SEG lines");
    return rep;
}

RepresentedSequence load_representation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_representation(in);
}

}  // namespace seqbreak
