#include "seqbreak/series.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "seqbreak/errors.hpp"
#include "seqbreak/segment.hpp"

namespace seqbreak {

void check_series(const TimeSeries& s) {
    if (s.samples.empty()) throw Error("series '" + s.id + "' is empty");
    for (double v : s.samples)
        if (!std::isfinite(v)) throw Error("series '" + s.id + "' contains a non-finite sample");
}

std::pair<TimeSeries, NormalizationParams> normalize(const TimeSeries& series) {
    check_series(series);
    const std::size_t n = series.size();
    if (n < 2) throw TooShort(n);

    bool constant = true;
    for (double v : series.samples)
        if (v != series.samples.front()) { constant = false; break; }
    if (constant) throw DegenerateVariance();

    double sum = 0.0;
    for (double v : series.samples) sum += v;
    const double mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (double v : series.samples) sq += (v - mean) * (v - mean);
    const double var = sq / static_cast<double>(n);  // population convention
    const double std_dev = std::sqrt(var);
    if (std_dev <= 0.0) throw DegenerateVariance();

    TimeSeries out{series.id, {}};
    out.samples.reserve(n);
    for (double v : series.samples) out.samples.push_back((v - mean) / std_dev);
    return {std::move(out), NormalizationParams{mean, std_dev}};
}

TimeSeries denormalize(const TimeSeries& series, const NormalizationParams& params) {
    check_series(series);
    if (!(params.std > 0.0)) throw Error("normalization std must be positive");
    TimeSeries out{series.id, {}};
    out.samples.reserve(series.size());
    for (double v : series.samples) out.samples.push_back(v * params.std + params.mean);
    return out;
}

TimeSeries smooth(const TimeSeries& series, std::size_t window) {
    check_series(series);
    const std::size_t n = series.size();
    if (window % 2 == 0 || window < 1 || window > n) throw BadWindow(window, n);
    if (window == 1) return series;

    const std::size_t half = window / 2;
    TimeSeries out{series.id, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i > half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double acc = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) acc += series.samples[j];
        out.samples[i] = acc / static_cast<double>(hi - lo + 1);
    }
    return out;
}

TimeSeries read_series(std::istream& in, const std::string& id) {
    TimeSeries out{id, {}};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        if (tok[0] == '#') continue;
        const char* begin = tok.c_str();
        char* endp = nullptr;
        double v = std::strtod(begin, &endp);
        if (endp == begin || *endp != '\0')
            throw ParseError("not a decimal real: '" + tok + "'", lineno);
        if (!std::isfinite(v)) throw ParseError("non-finite sample", lineno);
        out.samples.push_back(v);
    }
    if (out.samples.empty()) throw ParseError("no samples in input", lineno);
    return out;
}

TimeSeries read_series_file(const std::string& path, const std::string& id) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string use_id = id;
    if (use_id.empty()) {
        // file stem: strip directory and one extension
        std::string stem = path;
        auto slash = stem.find_last_of("/\\");
        if (slash != std::string::npos) stem = stem.substr(slash + 1);
        auto dot = stem.find_last_of('.');
        if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
        use_id = stem;
    }
    return read_series(in, use_id);
}

void write_series(std::ostream& out, const TimeSeries& series) {
    for (double v : series.samples) out << format_real(v) << '\n';
}

void write_series_file(const std::string& path, const TimeSeries& series) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    write_series(out, series);
}

}  // namespace seqbreak
