#include "magnetic/app/cache.hpp"

#include "magnetic/series_json.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace magnetic::app {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

std::string DiskCache::file_name(const std::string& key) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

std::optional<QSeries> DiskCache::load(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(*dir_ / file_name(key));
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.value("key", std::string()) != key) return std::nullopt;
        return series_from_json(j.at("series"));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void DiskCache::store(const std::string& key, const QSeries& f) const {
    if (!dir_) return;
    static std::atomic<unsigned> counter{0};
    fs::create_directories(*dir_);
    Json j;
    j["key"] = key;
    j["series"] = to_json(f);
    std::ostringstream tag;
    tag << ".tmp-" << std::this_thread::get_id() << "-" << counter++;
    fs::path final_path = *dir_ / file_name(key);
    fs::path tmp = final_path;
    tmp += tag.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump() << "\n";
    }
    fs::rename(tmp, final_path);
}

DiskCache resolve_cache(const std::string& flag_dir, bool no_cache) {
    if (no_cache) return DiskCache();
    if (!flag_dir.empty()) return DiskCache(flag_dir);
    if (const char* env = std::getenv(kCacheEnv); env && *env) return DiskCache(env);
    return DiskCache();
}

std::string series_key(const std::string& normalized_expr, long prec) {
    return normalized_expr + "@" + std::to_string(prec);
}

}  // namespace magnetic::app
