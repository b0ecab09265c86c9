#include "seqbreak/catalog.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "seqbreak/errors.hpp"

namespace seqbreak {

namespace fs = std::filesystem;

std::string file_checksum(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize k = 0; k < in.gcount(); ++k) {
            h ^= static_cast<unsigned char>(buf[k]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

static void validate_id(const std::string& id) {
    if (id.empty()) throw Error("id must not be empty");
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) throw Error("id contains unsupported character: '" + id + "'");
    }
}

Catalog::Catalog(fs::path root) : root_(std::move(root)) {
    fs::create_directories(root_);
    fs::create_directories(root_ / "raw");
    fs::create_directories(root_ / "rep");
    fs::create_directories(root_ / "idx");
    fs::create_directories(root_ / "plot");
    load_manifest();
}

fs::path Catalog::default_root() {
    if (const char* env = std::getenv("SEQBREAK_HOME"); env && *env) return fs::path(env);
    return fs::path("seqbreak_home");
}

void Catalog::load_manifest() {
    entries_.clear();
    std::ifstream in(root_ / "manifest.txt");
    if (!in) return;  // fresh catalog
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Entry e;
        std::string rel;
        if (!(ls >> e.id >> rel >> e.checksum))
            throw IoError("bad manifest line: '" + line + "'");
        e.raw_path = root_ / rel;
        entries_[e.id] = e;
    }
}

void Catalog::save_manifest() const {
    const fs::path tmp = root_ / "manifest.txt.tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write manifest");
        for (const auto& [id, e] : entries_)
            out << id << ' ' << fs::relative(e.raw_path, root_).generic_string() << ' '
                << e.checksum << '\n';
    }
    fs::rename(tmp, root_ / "manifest.txt");
}

Catalog::Entry Catalog::ingest_file(const fs::path& path, const std::string& id) {
    std::string use_id = id.empty() ? path.stem().string() : id;
    validate_id(use_id);
    if (entries_.count(use_id)) throw DuplicateId(use_id);

    // Parse first so a bad file never lands in the catalog.
    TimeSeries series = read_series_file(path.string(), use_id);

    CatalogLock lock(root_);
    const fs::path dest = raw_path(use_id);
    write_series_file(dest.string(), series);

    Entry e{use_id, dest, file_checksum(dest)};
    entries_[use_id] = e;
    save_manifest();
    return e;
}

Catalog::Entry Catalog::ingest_series(const TimeSeries& series) {
    validate_id(series.id);
    if (entries_.count(series.id)) throw DuplicateId(series.id);
    check_series(series);

    CatalogLock lock(root_);
    const fs::path dest = raw_path(series.id);
    write_series_file(dest.string(), series);

    Entry e{series.id, dest, file_checksum(dest)};
    entries_[series.id] = e;
    save_manifest();
    return e;
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [id, e] : entries_) out.push_back(id);
    return out;
}

void Catalog::require_known(const std::string& id) const {
    if (!entries_.count(id)) throw UnknownId(id);
}

TimeSeries Catalog::load_raw(const std::string& id) const {
    require_known(id);
    return read_series_file(entries_.at(id).raw_path.string(), id);
}

fs::path Catalog::raw_path(const std::string& id) const { return root_ / "raw" / (id + ".txt"); }
fs::path Catalog::rep_path(const std::string& id) const { return root_ / "rep" / (id + ".rep"); }
fs::path Catalog::index_path() const { return root_ / "idx" / "intervals.idx"; }
fs::path Catalog::plot_path(const std::string& id) const {
    return root_ / "plot" / (id + ".plot");
}

bool Catalog::has_representation(const std::string& id) const {
    return fs::exists(rep_path(id));
}

std::vector<std::string> Catalog::represented_ids() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : entries_)
        if (has_representation(id)) out.push_back(id);
    return out;
}

CatalogLock::CatalogLock(const fs::path& root) : path_(root / "catalog.lock") {
    const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0)
        throw IoError("catalog is locked by another writer ('" + path_.string() +
                      "' exists; remove it if stale)");
    ::close(fd);
    held_ = true;
}

CatalogLock::~CatalogLock() {
    if (held_) {
        std::error_code ec;
        fs::remove(path_, ec);
    }
}

}  // namespace seqbreak
