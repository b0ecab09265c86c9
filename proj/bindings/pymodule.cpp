#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "seqbreak/catalog.hpp"
#include "seqbreak/errors.hpp"
#include "seqbreak/generate.hpp"
#include "seqbreak/interval_index.hpp"
#include "seqbreak/pattern.hpp"
#include "seqbreak/peaks.hpp"
#include "seqbreak/segment.hpp"
#include "seqbreak/series.hpp"
#include "seqbreak/signature.hpp"

namespace py = pybind11;
using namespace seqbreak;

PYBIND11_MODULE(_seqbreak, m) {
    m.doc() = "piecewise-linear sequence representations and shape queries";

    py::register_exception<Error>(m, "SeqbreakError", PyExc_RuntimeError);

    py::class_<TimeSeries>(m, "TimeSeries")
        .def(py::init([](std::string id, std::vector<double> samples) {
                 return TimeSeries{std::move(id), std::move(samples)};
             }),
             py::arg("id"), py::arg("samples"))
        .def_readwrite("id", &TimeSeries::id)
        .def_readwrite("samples", &TimeSeries::samples)
        .def("__len__", &TimeSeries::size)
        .def("__getitem__",
             [](const TimeSeries& s, std::size_t t) {
                 if (t >= s.size()) throw py::index_error();
                 return s[t];
             })
        .def("__repr__", [](const TimeSeries& s) {
            return "TimeSeries(id='" + s.id + "', n=" + std::to_string(s.size()) + ")";
        });

    py::class_<NormalizationParams>(m, "NormalizationParams")
        .def(py::init<double, double>(), py::arg("mean"), py::arg("std"))
        .def_readwrite("mean", &NormalizationParams::mean)
        .def_readwrite("std", &NormalizationParams::std);

    py::class_<LinearFunction>(m, "LinearFunction")
        .def(py::init<double, double>(), py::arg("slope"), py::arg("intercept"))
        .def_readwrite("slope", &LinearFunction::slope)
        .def_readwrite("intercept", &LinearFunction::intercept)
        .def("__call__", &LinearFunction::operator())
        .def("__repr__", [](const LinearFunction& f) {
            return "LinearFunction(" + format_real(f.slope) + "*t + " + format_real(f.intercept) +
                   ")";
        });

    py::enum_<FitKind>(m, "FitKind")
        .value("INTERPOLATION", FitKind::kInterpolation)
        .value("REGRESSION", FitKind::kRegression);

    py::enum_<RepLine>(m, "RepLine")
        .value("REGRESSION", RepLine::kRegression)
        .value("BREAK_LINE", RepLine::kBreakLine);

    py::class_<Segment>(m, "Segment")
        .def_readonly("start", &Segment::start)
        .def_readonly("end", &Segment::end)
        .def_readonly("break_line", &Segment::break_line)
        .def_readonly("rep_line", &Segment::rep_line)
        .def_readonly("max_dev", &Segment::max_dev)
        .def_readonly("fit_kind", &Segment::fit_kind)
        .def("__len__", &Segment::length);

    py::class_<RepresentedSequence>(m, "RepresentedSequence")
        .def_readonly("source_id", &RepresentedSequence::source_id)
        .def_readonly("length", &RepresentedSequence::length)
        .def_readonly("epsilon", &RepresentedSequence::epsilon)
        .def_readonly("fit_kind", &RepresentedSequence::fit_kind)
        .def_readonly("segments", &RepresentedSequence::segments)
        .def_readonly("norm", &RepresentedSequence::norm)
        .def("breakpoints", &RepresentedSequence::breakpoints)
        .def("__repr__", [](const RepresentedSequence& r) {
            return "RepresentedSequence(id='" + r.source_id +
                   "', segments=" + std::to_string(r.segments.size()) + ")";
        });

    py::class_<DPConfig>(m, "DPConfig")
        .def(py::init<double, double>(), py::arg("a") = 1.0, py::arg("b") = 1.0)
        .def_readwrite("a", &DPConfig::a)
        .def_readwrite("b", &DPConfig::b);

    py::class_<SlopeConfig>(m, "SlopeConfig")
        .def(py::init<double>(), py::arg("phi") = 0.3)
        .def_readwrite("phi", &SlopeConfig::phi);

    py::class_<SlopeSignature>(m, "SlopeSignature")
        .def_readonly("symbols", &SlopeSignature::symbols)
        .def_readonly("segment_spans", &SlopeSignature::segment_spans)
        .def("__len__", &SlopeSignature::size)
        .def("__str__", [](const SlopeSignature& s) { return s.symbols; });

    py::class_<PatternAST, std::shared_ptr<PatternAST>>(m, "PatternAST")
        .def("__repr__",
             [](const PatternAST& p) { return "PatternAST('" + unparse_pattern(p) + "')"; });

    py::class_<Occurrence>(m, "Occurrence")
        .def_readonly("sym_start", &Occurrence::sym_start)
        .def_readonly("sym_end", &Occurrence::sym_end)
        .def_readonly("series_start", &Occurrence::series_start)
        .def_readonly("series_end", &Occurrence::series_end);

    py::class_<PeakRecord>(m, "PeakRecord")
        .def_readonly("rising_index", &PeakRecord::rising_index)
        .def_readonly("descending_index", &PeakRecord::descending_index)
        .def_readonly("r_start", &PeakRecord::r_start)
        .def_readonly("r_end", &PeakRecord::r_end)
        .def_readonly("d_start", &PeakRecord::d_start)
        .def_readonly("d_end", &PeakRecord::d_end)
        .def_readonly("peak_time", &PeakRecord::peak_time)
        .def_readonly("peak_amplitude", &PeakRecord::peak_amplitude);

    py::class_<IntervalBounds>(m, "IntervalBounds")
        .def(py::init<long long, long long>(), py::arg("min") = 20, py::arg("max") = 2000)
        .def_readwrite("min", &IntervalBounds::min)
        .def_readwrite("max", &IntervalBounds::max);

    py::class_<IntervalIndex>(m, "IntervalIndex")
        .def_readonly("min_interval", &IntervalIndex::min_interval)
        .def_readonly("max_interval", &IntervalIndex::max_interval)
        .def_readonly("postings", &IntervalIndex::postings);

    py::enum_<GeneratorKind>(m, "GeneratorKind")
        .value("GOALPOST", GeneratorKind::kGoalpost)
        .value("ECG_LIKE", GeneratorKind::kEcgLike)
        .value("NOISE", GeneratorKind::kNoise)
        .value("RAMP", GeneratorKind::kRamp);

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init<>())
        .def_readwrite("kind", &GeneratorSpec::kind)
        .def_readwrite("length", &GeneratorSpec::length)
        .def_readwrite("amplitude", &GeneratorSpec::amplitude)
        .def_readwrite("period", &GeneratorSpec::period)
        .def_readwrite("noise", &GeneratorSpec::noise)
        .def_readwrite("flank", &GeneratorSpec::flank)
        .def_readwrite("spacing", &GeneratorSpec::spacing)
        .def_readwrite("seed", &GeneratorSpec::seed)
        .def_readwrite("id", &GeneratorSpec::id);

    // seqcore
    m.def("normalize", &normalize, py::arg("series"));
    m.def("denormalize", &denormalize, py::arg("series"), py::arg("params"));
    m.def("smooth", &smooth, py::arg("series"), py::arg("window"));

    // segmenter
    m.def("fit_interpolation", &fit_interpolation, py::arg("series"), py::arg("i"), py::arg("j"));
    m.def("fit_regression", &fit_regression, py::arg("series"), py::arg("i"), py::arg("j"));
    m.def("max_deviation", &max_deviation, py::arg("series"), py::arg("i"), py::arg("j"),
          py::arg("line"));
    m.def("segment_recursive", &segment_recursive, py::arg("series"), py::arg("epsilon"),
          py::arg("fit") = FitKind::kInterpolation, py::arg("rep") = RepLine::kRegression);
    m.def("segment_dp", &segment_dp, py::arg("series"), py::arg("cfg"),
          py::arg("rep") = RepLine::kRegression);
    m.def("cost", &cost, py::arg("rep"), py::arg("cfg"));
    m.def("reconstruct", &reconstruct, py::arg("rep"));
    m.def("compression_ratio", &compression_ratio, py::arg("rep"), py::arg("params_per_segment"));
    m.def("validate_representation", &validate_representation, py::arg("rep"));

    // slopelang
    m.def("signature", &signature, py::arg("rep"), py::arg("cfg") = SlopeConfig{});
    m.def("signature_from_symbols", &signature_from_symbols, py::arg("symbols"));
    m.def("parse_pattern", &parse_pattern, py::arg("text"));
    m.def("unparse_pattern", &unparse_pattern, py::arg("ast"));
    m.def(
        "full_match",
        [](const PatternAST& ast, const SlopeSignature& sig) { return full_match(ast, sig); },
        py::arg("ast"), py::arg("sig"));
    m.def(
        "full_match_symbols",
        [](const PatternAST& ast, const std::string& symbols) { return full_match(ast, symbols); },
        py::arg("ast"), py::arg("symbols"));
    m.def("find_occurrences", &find_occurrences, py::arg("ast"), py::arg("sig"));

    // peakindex
    m.def("find_peaks", &find_peaks, py::arg("rep"), py::arg("series"),
          py::arg("cfg") = SlopeConfig{});
    m.def("intervals", &intervals, py::arg("peaks"));
    m.def("build_index", &build_index, py::arg("db"), py::arg("bounds") = IntervalBounds{});
    m.def("query_interval", &query_interval, py::arg("index"), py::arg("n"), py::arg("delta"));

    // storage
    m.def("generate", &generate, py::arg("spec"));
    m.def("default_spec", &default_spec, py::arg("kind"));
    m.def("read_series_file", &read_series_file, py::arg("path"), py::arg("id") = "");
    m.def("write_series_file", &write_series_file, py::arg("path"), py::arg("series"));
    m.def(
        "save_representation",
        [](const std::string& path, const RepresentedSequence& rep) {
            save_representation_file(path, rep);
        },
        py::arg("path"), py::arg("rep"));
    m.def("load_representation", &load_representation_file, py::arg("path"));
    m.def("save_index", &save_index_file, py::arg("path"), py::arg("index"));
    m.def("load_index", &load_index_file, py::arg("path"));
    m.def(
        "representation_text",
        [](const RepresentedSequence& rep) {
            std::ostringstream out;
            save_representation(out, rep);
            return out.str();
        },
        py::arg("rep"));

    m.attr("__version__") = "0.1.0";
}
