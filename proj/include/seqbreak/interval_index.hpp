#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace seqbreak {

/// Inverted file over peak-to-peak interval lengths: interval -> sorted,
/// duplicate-free list of sequence ids containing it. Built once, then
/// immutable; readers may share it freely.
struct IntervalIndex {
    long long min_interval = 0;
    long long max_interval = 0;
    std::map<long long, std::vector<std::string>> postings;
};

struct IntervalBounds {
    long long min = 20;
    long long max = 2000;
};

/// Throws IntervalOutOfBounds (naming the id and value) when any interval
/// falls outside the bounds.
IntervalIndex build_index(const std::vector<std::pair<std::string, std::vector<long long>>>& db,
                          const IntervalBounds& bounds = {});

/// Ids with at least one interval in [n - delta, n + delta], sorted and
/// duplicate-free. n must lie within the index bounds.
std::vector<std::string> query_interval(const IntervalIndex& index, long long n, long long delta);

/// Text format: header `IDX <min> <max>`, then one line per posting,
/// `<interval_length> <id> <id> ...`, sorted by interval length.
void save_index(std::ostream& out, const IntervalIndex& index);
void save_index_file(const std::string& path, const IntervalIndex& index);
IntervalIndex load_index(std::istream& in);
IntervalIndex load_index_file(const std::string& path);

}  // namespace seqbreak
