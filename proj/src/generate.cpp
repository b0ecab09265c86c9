#include "seqbreak/generate.hpp"

#include <cmath>
#include <random>

#include "seqbreak/errors.hpp"

namespace seqbreak {

GeneratorKind generator_kind_from_string(const std::string& text) {
    if (text == "goalpost") return GeneratorKind::kGoalpost;
    if (text == "ecg_like" || text == "ecg-like" || text == "ecg") return GeneratorKind::kEcgLike;
    if (text == "noise") return GeneratorKind::kNoise;
    if (text == "ramp") return GeneratorKind::kRamp;
    throw BadSpec("unknown generator kind '" + text + "'");
}

const char* to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::kGoalpost: return "goalpost";
        case GeneratorKind::kEcgLike: return "ecg_like";
        case GeneratorKind::kNoise: return "noise";
        case GeneratorKind::kRamp: return "ramp";
    }
    return "?";
}

namespace {

// All generator output sits on a 2^-10 grid; sums and differences of grid
// values up to ~2^40 are exact in doubles, which keeps the consistency
// properties (shift by a grid constant, scale by a power of two) bit-exact.
constexpr double kGrid = 1024.0;

double snap(double v) { return std::round(v * kGrid) / kGrid; }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1); platform-independent mapping of the top 53 bits.
    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    long long index(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(u01() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

void check_common(const GeneratorSpec& spec) {
    if (spec.length < 1) throw BadSpec("length must be >= 1");
    if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude))
        throw BadSpec("amplitude must be finite and >= 0");
    if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise))
        throw BadSpec("noise must be finite and >= 0");
    if (spec.flank < 1) throw BadSpec("flank must be >= 1");
}

void add_noise(std::vector<double>& samples, double noise, Rng& rng) {
    if (noise <= 0.0) return;
    for (double& v : samples) v = snap(v + rng.uniform(-noise, noise));
}

// Symmetric triangular bump: rises by `slope` per sample for `flank` steps,
// then falls back at the same rate. Values stay on the grid exactly.
void add_bump(std::vector<double>& samples, std::size_t apex, std::size_t flank, double slope) {
    for (std::size_t k = 1; k <= flank; ++k) {
        samples[apex - flank + k] += slope * static_cast<double>(k);
        if (k < flank) samples[apex + k] += slope * static_cast<double>(flank - k);
    }
}

TimeSeries goalpost(const GeneratorSpec& spec, Rng& rng) {
    const std::size_t n = spec.length;
    const std::size_t L = spec.flank;
    if (spec.amplitude <= 0.0) throw BadSpec("goalpost amplitude must be > 0");
    if (n < 6 * L + 12) throw BadSpec("length too small for goalpost flank");

    const long long jitter = static_cast<long long>(n / 12);
    auto place = [&](std::size_t base) {
        long long a = static_cast<long long>(base) + rng.index(-jitter, jitter);
        a = std::max<long long>(a, static_cast<long long>(L) + 2);
        a = std::min<long long>(a, static_cast<long long>(n - L - 3));
        return static_cast<std::size_t>(a);
    };
    std::size_t a1 = place(n / 3);
    std::size_t a2 = place(2 * n / 3);
    if (a1 + L + 2 >= a2 - L) {  // keep a flat stretch between the peaks
        a1 = n / 3;
        a2 = 2 * n / 3;
    }

    double g1 = snap(spec.amplitude * rng.uniform(0.95, 1.05) / static_cast<double>(L));
    double g2 = snap(g1 * rng.uniform(0.72, 0.84));
    g1 = std::max(g1, 1.0 / kGrid);
    g2 = std::max(g2, 1.0 / kGrid);

    TimeSeries out{spec.id, std::vector<double>(n, 0.0)};
    add_bump(out.samples, a1, L, g1);
    add_bump(out.samples, a2, L, g2);
    add_noise(out.samples, spec.noise, rng);
    return out;
}

TimeSeries ecg_like(const GeneratorSpec& spec, Rng& rng) {
    const std::size_t n = spec.length;
    const std::size_t w = spec.flank;
    if (spec.amplitude <= 0.0) throw BadSpec("ecg_like amplitude must be > 0");

    std::vector<std::size_t> apexes;
    if (!spec.spacing.empty()) {
        long long span = 0;
        for (long long gap : spec.spacing) {
            if (gap < 2 * static_cast<long long>(w) + 2)
                throw BadSpec("spacing entries must be >= 2 * flank + 2");
            span += gap;
        }
        const long long lo = static_cast<long long>(w) + 2;
        const long long hi = static_cast<long long>(n) - 3 - static_cast<long long>(w) - span;
        if (hi < lo) throw BadSpec("spikes do not fit in the series length");
        long long apex = rng.index(lo, std::min(hi, lo + 40));
        apexes.push_back(static_cast<std::size_t>(apex));
        for (long long gap : spec.spacing)
            apexes.push_back(apexes.back() + static_cast<std::size_t>(gap));
    } else {
        if (!(spec.period >= 1.0) || !std::isfinite(spec.period))
            throw BadSpec("period must be finite and >= 1");
        const long long period = std::llround(spec.period);
        if (period < 2 * static_cast<long long>(w) + 2)
            throw BadSpec("period must be >= 2 * flank + 2");
        const long long lo = static_cast<long long>(w) + 2;
        const long long hi = static_cast<long long>(n) - 3 - static_cast<long long>(w);
        if (hi < lo) throw BadSpec("spikes do not fit in the series length");
        long long apex = rng.index(lo, std::min(hi, lo + std::max<long long>(1, period / 3)));
        while (apex <= hi) {
            apexes.push_back(static_cast<std::size_t>(apex));
            apex += period;
        }
    }

    TimeSeries out{spec.id, std::vector<double>(n, 0.0)};
    for (std::size_t apex : apexes) {
        const double g =
            std::max(snap(spec.amplitude * rng.uniform(0.85, 1.15) / static_cast<double>(w)),
                     1.0 / kGrid);
        add_bump(out.samples, apex, w, g);
    }
    add_noise(out.samples, spec.noise, rng);
    return out;
}

TimeSeries noise_series(const GeneratorSpec& spec, Rng& rng) {
    TimeSeries out{spec.id, std::vector<double>(spec.length, 0.0)};
    if (spec.amplitude > 0.0)
        for (double& v : out.samples) v = snap(rng.uniform(-spec.amplitude, spec.amplitude));
    return out;
}

TimeSeries ramp(const GeneratorSpec& spec) {
    TimeSeries out{spec.id, std::vector<double>(spec.length, 0.0)};
    if (spec.length > 1) {
        const double g = snap(spec.amplitude / static_cast<double>(spec.length - 1));
        for (std::size_t t = 0; t < spec.length; ++t)
            out.samples[t] = g * static_cast<double>(t);
    }
    return out;
}

}  // namespace

GeneratorSpec default_spec(GeneratorKind kind) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.length = 512;
    switch (kind) {
        case GeneratorKind::kGoalpost:
            spec.amplitude = 40.0;
            spec.flank = 24;
            spec.noise = 0.0;
            break;
        case GeneratorKind::kEcgLike:
            spec.amplitude = 176.0;
            spec.flank = 6;
            spec.period = 137.0;
            spec.noise = 2.0;
            break;
        case GeneratorKind::kNoise:
            spec.amplitude = 1.0;
            break;
        case GeneratorKind::kRamp:
            spec.amplitude = 100.0;
            break;
    }
    return spec;
}

TimeSeries generate(const GeneratorSpec& spec) {
    check_common(spec);
    Rng rng(spec.seed);

    GeneratorSpec s = spec;
    if (s.id.empty())
        s.id = std::string(to_string(s.kind)) + "-" + std::to_string(s.seed);

    switch (s.kind) {
        case GeneratorKind::kGoalpost: return goalpost(s, rng);
        case GeneratorKind::kEcgLike: return ecg_like(s, rng);
        case GeneratorKind::kNoise: return noise_series(s, rng);
        case GeneratorKind::kRamp: return ramp(s);
    }
    throw BadSpec("unknown generator kind");
}

}  // namespace seqbreak
