#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqbreak/catalog.hpp"
#include "seqbreak/errors.hpp"
#include "seqbreak/generate.hpp"
#include "seqbreak/interval_index.hpp"
#include "seqbreak/pattern.hpp"
#include "seqbreak/peaks.hpp"
#include "seqbreak/segment.hpp"
#include "seqbreak/series.hpp"
#include "seqbreak/signature.hpp"

namespace {

using namespace seqbreak;

// 0 on success / results found, 1 when a query returns nothing, 2 on any
// usage, parse, or catalog error.
constexpr int kOk = 0;
constexpr int kNoResults = 1;
constexpr int kUsage = 2;

RepresentedSequence load_rep_or_die(const Catalog& catalog, const std::string& id) {
    if (!catalog.has(id)) throw UnknownId(id);
    if (!catalog.has_representation(id))
        throw Error("no representation for '" + id + "'; run `segment " + id + "` first");
    return load_representation_file(catalog.rep_path(id).string());
}

// The series exactly as it was segmented: raw, or renormalized with the
// stored parameters.
TimeSeries segmented_series(const Catalog& catalog, const RepresentedSequence& rep) {
    TimeSeries raw = catalog.load_raw(rep.source_id);
    if (!rep.norm) return raw;
    TimeSeries out{raw.id, {}};
    out.samples.reserve(raw.size());
    for (double v : raw.samples) out.samples.push_back((v - rep.norm->mean) / rep.norm->std);
    return out;
}

IntervalBounds parse_bounds(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw Error("bounds must be MIN:MAX, got '" + text + "'");
    IntervalBounds b;
    b.min = std::stoll(text.substr(0, colon));
    b.max = std::stoll(text.substr(colon + 1));
    return b;
}

int cmd_ingest(Catalog& catalog, const std::string& path, const std::string& id) {
    const auto entry = catalog.ingest_file(path, id);
    const TimeSeries series = catalog.load_raw(entry.id);
    std::cout << "ingested " << entry.id << " n=" << series.size() << " checksum="
              << entry.checksum << '\n';
    return kOk;
}

int cmd_generate(Catalog& catalog, GeneratorSpec spec) {
    TimeSeries series = generate(spec);
    catalog.ingest_series(series);
    std::cout << "generated " << series.id << " kind=" << to_string(spec.kind)
              << " n=" << series.size() << " seed=" << spec.seed << '\n';
    return kOk;
}

int cmd_segment(Catalog& catalog, const std::string& id, double epsilon, const std::string& fit,
                bool do_normalize, std::size_t extra_params) {
    if (!catalog.has(id)) throw UnknownId(id);
    TimeSeries series = catalog.load_raw(id);

    std::optional<NormalizationParams> norm;
    if (do_normalize) {
        auto [normalized, params] = normalize(series);
        series = std::move(normalized);
        norm = params;
    }

    RepresentedSequence rep = segment_recursive(series, epsilon, fit_kind_from_string(fit));
    rep.norm = norm;
    validate_representation(rep);
    save_representation_file(catalog.rep_path(id).string(), rep);

    double worst = 0.0;
    for (const Segment& seg : rep.segments) worst = std::max(worst, seg.max_dev);

    char line[160];
    std::cout << "segments " << rep.segments.size() << '\n';
    std::cout << "max_deviation " << format_real(worst) << '\n';
    std::snprintf(line, sizeof(line), "compression@4 %.2f", compression_ratio(rep, 4));
    std::cout << line << '\n';
    std::snprintf(line, sizeof(line), "compression@6 %.2f", compression_ratio(rep, 6));
    std::cout << line << '\n';
    if (extra_params != 0 && extra_params != 4 && extra_params != 6) {
        std::snprintf(line, sizeof(line), "compression@%zu %.2f", extra_params,
                      compression_ratio(rep, extra_params));
        std::cout << line << '\n';
    }
    return kOk;
}

int cmd_signature(const Catalog& catalog, const std::string& id, double phi) {
    const RepresentedSequence rep = load_rep_or_die(catalog, id);
    std::cout << signature(rep, SlopeConfig{phi}).symbols << '\n';
    return kOk;
}

int cmd_peaks(const Catalog& catalog, const std::string& id, double phi) {
    const RepresentedSequence rep = load_rep_or_die(catalog, id);
    const TimeSeries series = segmented_series(catalog, rep);
    const auto peaks = find_peaks(rep, series, SlopeConfig{phi});

    std::cout << "peak rising rstart rend descending dstart dend time\n";
    for (std::size_t k = 0; k < peaks.size(); ++k) {
        const PeakRecord& p = peaks[k];
        const LinearFunction& rl = rep.segments[p.rising_index].rep_line;
        const LinearFunction& dl = rep.segments[p.descending_index].rep_line;
        std::cout << (k + 1) << ' ' << format_real(rl.slope) << "x" << (rl.intercept < 0 ? "" : "+")
                  << format_real(rl.intercept) << " (" << p.r_start.first << ','
                  << format_real(p.r_start.second) << ") (" << p.r_end.first << ','
                  << format_real(p.r_end.second) << ") " << format_real(dl.slope) << "x"
                  << (dl.intercept < 0 ? "" : "+") << format_real(dl.intercept) << " ("
                  << p.d_start.first << ',' << format_real(p.d_start.second) << ") ("
                  << p.d_end.first << ',' << format_real(p.d_end.second) << ") " << p.peak_time
                  << '\n';
    }
    std::cout << "intervals";
    for (long long v : intervals(peaks)) std::cout << ' ' << v;
    std::cout << '\n';
    return peaks.empty() ? kNoResults : kOk;
}

int cmd_index(const Catalog& catalog, double phi, const IntervalBounds& bounds) {
    std::vector<std::pair<std::string, std::vector<long long>>> db;
    for (const std::string& id : catalog.represented_ids()) {
        const RepresentedSequence rep = load_rep_or_die(catalog, id);
        const TimeSeries series = segmented_series(catalog, rep);
        db.emplace_back(id, intervals(find_peaks(rep, series, SlopeConfig{phi})));
    }
    const IntervalIndex index = build_index(db, bounds);
    save_index_file(catalog.index_path().string(), index);
    std::size_t postings = 0;
    for (const auto& [len, ids] : index.postings) postings += ids.size();
    std::cout << "indexed " << db.size() << " sequences, " << index.postings.size()
              << " interval lengths, " << postings << " postings\n";
    return kOk;
}

int cmd_query_interval(const Catalog& catalog, long long n, long long delta) {
    if (!std::filesystem::exists(catalog.index_path()))
        throw Error("no interval index; run `index` first");
    const IntervalIndex index = load_index_file(catalog.index_path().string());
    const auto ids = query_interval(index, n, delta);
    for (const std::string& id : ids) std::cout << id << '\n';
    return ids.empty() ? kNoResults : kOk;
}

int cmd_query_pattern(const Catalog& catalog, const std::string& pattern_text, double phi,
                      bool occurrences) {
    const PatternPtr pattern = parse_pattern(pattern_text);
    std::vector<std::pair<std::string, SlopeSignature>> matches;
    for (const std::string& id : catalog.represented_ids()) {
        const RepresentedSequence rep = load_rep_or_die(catalog, id);
        const SlopeSignature sig = signature(rep, SlopeConfig{phi});
        if (full_match(*pattern, sig)) matches.emplace_back(id, sig);
    }
    for (const auto& [id, sig] : matches) {
        std::cout << id << '\n';
        if (occurrences)
            for (const Occurrence& occ : find_occurrences(*pattern, sig))
                std::cout << "  symbols " << occ.sym_start << ".." << occ.sym_end << " samples "
                          << occ.series_start << ".." << occ.series_end << '\n';
    }
    return matches.empty() ? kNoResults : kOk;
}

int cmd_plot(const Catalog& catalog, const std::string& id) {
    const RepresentedSequence rep = load_rep_or_die(catalog, id);
    const TimeSeries series = segmented_series(catalog, rep);

    std::ofstream out(catalog.plot_path(id));
    if (!out) throw IoError("cannot write plot file");
    out << "# raw " << id << ' ' << series.size() << '\n';
    for (std::size_t t = 0; t < series.size(); ++t)
        out << t << ' ' << format_real(series[t]) << '\n';
    out << "# segments " << rep.segments.size() << '\n';
    for (std::size_t k = 0; k < rep.segments.size(); ++k) {
        const Segment& seg = rep.segments[k];
        out << k << ' ' << seg.start << ' ' << seg.end << ' ' << format_real(seg.rep_line.slope)
            << ' ' << format_real(seg.rep_line.intercept) << '\n';
    }
    std::cout << catalog.plot_path(id).string() << '\n';
    return kOk;
}

int cmd_stats(const Catalog& catalog, std::size_t params_per_segment) {
    for (const std::string& id : catalog.ids()) {
        const TimeSeries series = catalog.load_raw(id);
        std::cout << id << " n=" << series.size();
        if (catalog.has_representation(id)) {
            const RepresentedSequence rep =
                load_representation_file(catalog.rep_path(id).string());
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f", compression_ratio(rep, params_per_segment));
            std::cout << " segments=" << rep.segments.size() << " epsilon="
                      << format_real(rep.epsilon) << " fit=" << to_string(rep.fit_kind)
                      << " compression@" << params_per_segment << "=" << buf;
        }
        std::cout << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-linear sequence store and shape-query tool"};
    app.require_subcommand(1);

    std::string home;
    app.add_option("--home", home, "catalog root (default: $SEQBREAK_HOME or ./seqbreak_home)");

    std::string path, id, pattern_text, fit = "interp", bounds_text = "20:2000", kind_text;
    double epsilon = 0.0, phi = 0.3;
    bool do_normalize = false, occurrences = false;
    std::size_t params_per_segment = 0;
    long long n = 0, delta = 0;
    GeneratorSpec gen_spec;
    std::vector<long long> spacing;
    bool has_amplitude = false, has_period = false, has_noise = false, has_flank = false,
         has_length = false;

    auto* ingest = app.add_subcommand("ingest", "parse a sample file into the catalog");
    ingest->add_option("path", path, "input file, one sample per line")->required();
    ingest->add_option("--id", id, "catalog id (default: file stem)");

    auto* gen = app.add_subcommand("generate", "generate a deterministic fixture series");
    gen->add_option("kind", kind_text, "goalpost | ecg_like | noise | ramp")->required();
    gen->add_option("--id", id, "catalog id (default: kind-seed)");
    auto* opt_len = gen->add_option("--length", gen_spec.length, "series length");
    auto* opt_amp = gen->add_option("--amplitude", gen_spec.amplitude, "feature amplitude");
    auto* opt_per = gen->add_option("--period", gen_spec.period, "spike spacing (ecg_like)");
    auto* opt_noi = gen->add_option("--noise", gen_spec.noise, "uniform noise half-range");
    auto* opt_fla = gen->add_option("--flank", gen_spec.flank, "rise/fall width in samples");
    gen->add_option("--spacing", spacing, "explicit spike gaps (ecg_like)")->delimiter(',');
    gen->add_option("--seed", gen_spec.seed, "rng seed");

    auto* seg = app.add_subcommand("segment", "break a series and persist the representation");
    seg->add_option("id", id, "catalog id")->required();
    seg->add_option("--epsilon", epsilon, "error tolerance in the units segmented")->required();
    seg->add_option("--fit", fit, "interp | regress")->check(CLI::IsMember({"interp", "regress"}));
    seg->add_flag("--normalize", do_normalize, "segment the mean-0/var-1 series instead of raw");
    seg->add_option("--params-per-segment", params_per_segment,
                    "report compression for this parameter count too");

    auto* sig = app.add_subcommand("signature", "print the slope signature of a representation");
    sig->add_option("id", id, "catalog id")->required();
    sig->add_option("--phi", phi, "slope threshold (default 0.3)");

    auto* pk = app.add_subcommand("peaks", "print peak records and peak-to-peak intervals");
    pk->add_option("id", id, "catalog id")->required();
    pk->add_option("--phi", phi, "slope threshold (default 0.3)");

    auto* idx = app.add_subcommand("index", "build the interval inverted file");
    idx->add_option("--phi", phi, "slope threshold (default 0.3)");
    idx->add_option("--bounds", bounds_text, "admissible interval range MIN:MAX");

    auto* qp = app.add_subcommand("query-pattern", "ids whose whole signature matches a pattern");
    qp->add_option("pattern", pattern_text, "regex over P/N/Z (aliases +,-,0)")->required();
    qp->add_option("--phi", phi, "slope threshold (default 0.3)");
    qp->add_flag("--occurrences", occurrences, "also print substring occurrence spans");

    auto* qi = app.add_subcommand("query-interval", "ids with a peak interval of n +/- delta");
    qi->add_option("n", n, "interval length")->required();
    qi->add_option("--delta", delta, "tolerance (default 0)");

    auto* plot = app.add_subcommand("plot", "write raw points plus segment lines for plotting");
    plot->add_option("id", id, "catalog id")->required();

    auto* stats = app.add_subcommand("stats", "catalog summary");
    stats->add_option("--params-per-segment", params_per_segment,
                      "parameter count for the compression column (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;  // --help exits cleanly
    }

    has_length = opt_len->count() > 0;
    has_amplitude = opt_amp->count() > 0;
    has_period = opt_per->count() > 0;
    has_noise = opt_noi->count() > 0;
    has_flank = opt_fla->count() > 0;

    try {
        Catalog catalog(home.empty() ? Catalog::default_root() : std::filesystem::path(home));

        if (app.got_subcommand(ingest)) return cmd_ingest(catalog, path, id);
        if (app.got_subcommand(gen)) {
            GeneratorSpec spec = default_spec(generator_kind_from_string(kind_text));
            if (has_length) spec.length = gen_spec.length;
            if (has_amplitude) spec.amplitude = gen_spec.amplitude;
            if (has_period) spec.period = gen_spec.period;
            if (has_noise) spec.noise = gen_spec.noise;
            if (has_flank) spec.flank = gen_spec.flank;
            spec.spacing = spacing;
            spec.seed = gen_spec.seed;
            spec.id = id;
            return cmd_generate(catalog, spec);
        }
        if (app.got_subcommand(seg))
            return cmd_segment(catalog, id, epsilon, fit, do_normalize, params_per_segment);
        if (app.got_subcommand(sig)) return cmd_signature(catalog, id, phi);
        if (app.got_subcommand(pk)) return cmd_peaks(catalog, id, phi);
        if (app.got_subcommand(idx)) return cmd_index(catalog, phi, parse_bounds(bounds_text));
        if (app.got_subcommand(qp))
            return cmd_query_pattern(catalog, pattern_text, phi, occurrences);
        if (app.got_subcommand(qi)) return cmd_query_interval(catalog, n, delta);
        if (app.got_subcommand(plot)) return cmd_plot(catalog, id);
        if (app.got_subcommand(stats))
            return cmd_stats(catalog, params_per_segment == 0 ? 4 : params_per_segment);
    } catch (const seqbreak::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
