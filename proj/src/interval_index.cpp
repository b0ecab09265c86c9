#include "seqbreak/interval_index.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "seqbreak/errors.hpp"

namespace seqbreak {

IntervalIndex build_index(const std::vector<std::pair<std::string, std::vector<long long>>>& db,
                          const IntervalBounds& bounds) {
    if (bounds.min < 1 || bounds.max < bounds.min) throw Error("bad interval bounds");
    IntervalIndex index;
    index.min_interval = bounds.min;
    index.max_interval = bounds.max;
    for (const auto& [id, lengths] : db) {
        for (long long v : lengths) {
            if (v < bounds.min || v > bounds.max)
                throw IntervalOutOfBounds(id, v, bounds.min, bounds.max);
            index.postings[v].push_back(id);
        }
    }
    for (auto& [len, ids] : index.postings) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    return index;
}

std::vector<std::string> query_interval(const IntervalIndex& index, long long n, long long delta) {
    if (n < index.min_interval || n > index.max_interval)
        throw Error("query value " + std::to_string(n) + " outside index bounds");
    if (delta < 0) throw Error("delta must be >= 0");

    std::vector<std::string> out;
    auto it = index.postings.lower_bound(n - delta);
    for (; it != index.postings.end() && it->first <= n + delta; ++it)
        out.insert(out.end(), it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void save_index(std::ostream& out, const IntervalIndex& index) {
    out << "IDX " << index.min_interval << ' ' << index.max_interval << '\n';
    for (const auto& [len, ids] : index.postings) {
        out << len;
        for (const std::string& id : ids) out << ' ' << id;
        out << '\n';
    }
}

void save_index_file(const std::string& path, const IntervalIndex& index) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    save_index(out, index);
}

IntervalIndex load_index(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty index stream");
    std::istringstream head(line);
    std::string tag;
    IntervalIndex index;
    if (!(head >> tag >> index.min_interval >> index.max_interval) || tag != "IDX")
        throw IoError("bad index header: '" + line + "'");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long len = 0;
        if (!(ls >> len)) throw IoError("bad posting line: '" + line + "'");
        std::vector<std::string> ids;
        std::string id;
        while (ls >> id) ids.push_back(id);
        if (ids.empty()) throw IoError("posting without ids: '" + line + "'");
        index.postings[len] = std::move(ids);
    }
    return index;
}

IntervalIndex load_index_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_index(in);
}

}  // namespace seqbreak
