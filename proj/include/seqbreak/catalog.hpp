#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqbreak/series.hpp"

namespace seqbreak {

/// On-disk layout under the catalog root:
///   manifest.txt          one line per entry: <id> <raw-path> <fnv64-checksum>
///   raw/<id>.txt          ingested sample files
///   rep/<id>.rep          persisted representations
///   idx/intervals.idx     the interval index
///   plot/<id>.plot        plot-data exports
/// Writers take an advisory lock file (catalog.lock); readers don't.
class Catalog {
public:
    explicit Catalog(std::filesystem::path root);

    /// SEQBREAK_HOME when set, else ./seqbreak_home.
    static std::filesystem::path default_root();

    struct Entry {
        std::string id;
        std::filesystem::path raw_path;
        std::string checksum;
    };

    /// Parses and stores a sample file under `id` (file stem by default).
    /// Throws ParseError / DuplicateId.
    Entry ingest_file(const std::filesystem::path& path, const std::string& id = "");
    Entry ingest_series(const TimeSeries& series);

    bool has(const std::string& id) const { return entries_.count(id) > 0; }
    std::vector<std::string> ids() const;

    /// Throws UnknownId.
    TimeSeries load_raw(const std::string& id) const;

    std::filesystem::path root() const { return root_; }
    std::filesystem::path raw_path(const std::string& id) const;
    std::filesystem::path rep_path(const std::string& id) const;
    std::filesystem::path index_path() const;
    std::filesystem::path plot_path(const std::string& id) const;
    bool has_representation(const std::string& id) const;

    /// Ids with a persisted representation, sorted.
    std::vector<std::string> represented_ids() const;

private:
    void load_manifest();
    void save_manifest() const;
    void require_known(const std::string& id) const;

    std::filesystem::path root_;
    std::map<std::string, Entry> entries_;
};

/// FNV-1a 64-bit of a file's bytes, hex encoded; the manifest checksum.
std::string file_checksum(const std::filesystem::path& path);

/// RAII advisory lock (single catalog writer). Throws IoError if the lock
/// is already held.
class CatalogLock {
public:
    explicit CatalogLock(const std::filesystem::path& root);
    ~CatalogLock();
    CatalogLock(const CatalogLock&) = delete;
    CatalogLock& operator=(const CatalogLock&) = delete;

private:
    std::filesystem::path path_;
    bool held_ = false;
};

}  // namespace seqbreak
