#include "quartica/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quartica/finite_field.hpp"

namespace quartica {

using nlohmann::json;

namespace {

std::vector<std::uint64_t> field_modulus(std::uint64_t p, unsigned m) { return make_field(p, m)->modulus; }

}  // namespace

PointCache PointCache::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CacheError("corrupt cache file at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("entries"))
        throw CacheError("cache file must be an object with 'version' and 'entries'");
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kVersion)
        throw CacheError("cache version " + doc["version"].dump() + " not supported (expected " +
                         std::to_string(kVersion) + "); refusing to use it");
    if (!doc["entries"].is_array()) throw CacheError("'entries' must be a list");
    PointCache cache;
    std::size_t index = 0;
    for (const auto& e : doc["entries"]) {
        try {
            PointCount c{e.at("curve").get<std::string>(), e.at("p").get<std::uint64_t>(), e.at("m").get<unsigned>(),
                         e.at("N").get<std::uint64_t>()};
            auto modulus = e.at("modulus").get<std::vector<std::uint64_t>>();
            if (modulus != field_modulus(c.p, c.m))
                throw CacheError("entry " + std::to_string(index) + " was counted in a different model of GF(" +
                                 std::to_string(c.p) + "^" + std::to_string(c.m) + ")");
            Key k{c.curve, c.p, c.m};
            if (cache.entries_.count(k))
                throw CacheError("duplicate cache entry for " + c.curve + " p=" + std::to_string(c.p) +
                                 " m=" + std::to_string(c.m));
            cache.entries_.emplace(k, Entry{c, std::move(modulus)});
        } catch (const json::exception& ex) {
            throw CacheError("malformed cache entry " + std::to_string(index) + ": " + ex.what());
        } catch (const std::invalid_argument& ex) {
            throw CacheError("invalid cache entry " + std::to_string(index) + ": " + ex.what());
        }
        ++index;
    }
    return cache;
}

PointCache PointCache::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return PointCache{};
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string PointCache::dump() const {
    json entries = json::array();
    for (const auto& [key, e] : entries_) {
        entries.push_back(json{{"curve", e.count.curve},
                               {"p", e.count.p},
                               {"m", e.count.m},
                               {"N", e.count.N},
                               {"modulus", e.modulus}});
    }
    json doc{{"version", kVersion}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

void PointCache::save(const std::string& path) const {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write cache file " + tmp.string());
        out << dump();
        if (!out) throw CacheError("failed writing cache file " + tmp.string());
    }
    fs::rename(tmp, target);
}

const PointCache::Entry* PointCache::find(const std::string& curve, std::uint64_t p, unsigned m) const {
    auto it = entries_.find(Key{curve, p, m});
    return it == entries_.end() ? nullptr : &it->second;
}

void PointCache::insert(const PointCount& count) {
    Key k{count.curve, count.p, count.m};
    if (entries_.count(k))
        throw CacheError("duplicate cache entry for " + count.curve + " p=" + std::to_string(count.p) +
                         " m=" + std::to_string(count.m));
    entries_.emplace(k, Entry{count, field_modulus(count.p, count.m)});
    dirty_ = true;
}

std::string default_cache_path() {
    if (const char* env = std::getenv("QUARTICA_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/quartica/counts.json";
    if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/quartica/counts.json";
    return "quartica-cache.json";
}

CountFn caching_counter(PointCache& cache, unsigned workers, std::ostream* log) {
    return [&cache, workers, log](const std::string& label, std::uint64_t p, unsigned m) -> std::uint64_t {
        if (const auto* e = cache.find(label, p, m)) {
            if (log) *log << "cache hit: " << label << " p=" << p << " m=" << m << " N=" << e->count.N << "\n";
            return e->count.N;
        }
        auto start = std::chrono::steady_clock::now();
        auto c = count_model(label, p, m, workers);
        if (log) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            *log << "counted: " << label << " p=" << p << " m=" << m << " N=" << c.N << " in " << dt.count()
                 << "s\n";
        }
        cache.insert(c);
        return c.N;
    };
}

}  // namespace quartica
