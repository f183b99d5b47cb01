#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "quartica/zeta.hpp"

namespace quartica {

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Persistent store of point counts keyed by (curve, p, m). Each entry keeps
/// the modulus of the field it was counted in, so a reload can confirm that
/// the same F_{p^m} is meant.
class PointCache {
public:
    static constexpr int kVersion = 1;

    struct Entry {
        PointCount count;
        std::vector<std::uint64_t> modulus;  // ascending, monic
    };
    using Key = std::tuple<std::string, std::uint64_t, unsigned>;

    /// Missing file: empty cache. Corrupt JSON: CacheError with the byte
    /// offset. Wrong version, duplicate keys or a modulus that differs from
    /// the field construction: CacheError.
    static PointCache load(const std::string& path);
    static PointCache parse(const std::string& text);

    /// Canonical text: entries sorted by key, two-space indent, final newline.
    std::string dump() const;
    /// Writes atomically (temporary file plus rename); creates the directory.
    void save(const std::string& path) const;

    const Entry* find(const std::string& curve, std::uint64_t p, unsigned m) const;
    /// Throws CacheError on a duplicate key.
    void insert(const PointCount& count);
    std::size_t size() const { return entries_.size(); }
    const std::map<Key, Entry>& entries() const { return entries_; }
    bool dirty() const { return dirty_; }

private:
    std::map<Key, Entry> entries_;
    bool dirty_ = false;
};

/// QUARTICA_CACHE if set, else $XDG_CACHE_HOME/quartica/counts.json, else
/// $HOME/.cache/quartica/counts.json, else ./quartica-cache.json.
std::string default_cache_path();

/// A CountFn that consults the cache first and records new counts. When
/// `log` is non-null, hits and timed misses are reported there.
CountFn caching_counter(PointCache& cache, unsigned workers, std::ostream* log = nullptr);

}  // namespace quartica
