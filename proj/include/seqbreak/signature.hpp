#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqbreak/segment.hpp"

namespace seqbreak {

/// Slope threshold phi: a segment reads P when its rep slope exceeds phi,
/// N below -phi, Z in between.
struct SlopeConfig {
    double phi = 0.3;
};

/// Per-segment quantization of a represented sequence, one symbol per
/// segment in order, plus the (start, end) sample span behind each symbol.
struct SlopeSignature {
    std::string symbols;  // over {P, N, Z}
    std::vector<std::pair<std::size_t, std::size_t>> segment_spans;

    std::size_t size() const { return symbols.size(); }
};

char classify_slope(double slope, const SlopeConfig& cfg);

SlopeSignature signature(const RepresentedSequence& rep, const SlopeConfig& cfg);

/// A bare signature whose k-th symbol spans the single index k; handy when
/// matching strings that did not come from a representation.
SlopeSignature signature_from_symbols(const std::string& symbols);

}  // namespace seqbreak
