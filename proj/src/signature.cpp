#include "seqbreak/signature.hpp"

#include <cmath>

#include "seqbreak/errors.hpp"

namespace seqbreak {

char classify_slope(double slope, const SlopeConfig& cfg) {
    if (!(cfg.phi >= 0.0) || !std::isfinite(cfg.phi)) throw Error("phi must be finite and >= 0");
    if (slope > cfg.phi) return 'P';
    if (slope < -cfg.phi) return 'N';
    return 'Z';
}

SlopeSignature signature(const RepresentedSequence& rep, const SlopeConfig& cfg) {
    SlopeSignature sig;
    sig.symbols.reserve(rep.segments.size());
    sig.segment_spans.reserve(rep.segments.size());
    for (const Segment& seg : rep.segments) {
        sig.symbols.push_back(classify_slope(seg.rep_line.slope, cfg));
        sig.segment_spans.emplace_back(seg.start, seg.end);
    }
    return sig;
}

SlopeSignature signature_from_symbols(const std::string& symbols) {
    SlopeSignature sig;
    sig.symbols = symbols;
    for (char c : symbols)
        if (c != 'P' && c != 'N' && c != 'Z')
            throw Error(std::string("signature symbol must be P, N or Z, got '") + c + "'");
    sig.segment_spans.reserve(symbols.size());
    for (std::size_t k = 0; k < symbols.size(); ++k) sig.segment_spans.emplace_back(k, k);
    return sig;
}

}  // namespace seqbreak
