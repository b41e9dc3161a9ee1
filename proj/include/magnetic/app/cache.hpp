#pragma once

#include "magnetic/qseries.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace magnetic::app {

inline constexpr const char* kCacheEnv = "MAGNETIC_CACHE_DIR";

// One JSON file per key, named by a 64-bit FNV-1a hash; the full key is stored
// inside and compared on load. Files are published by rename.
class DiskCache {
public:
    DiskCache() = default;
    explicit DiskCache(std::filesystem::path dir);

    bool enabled() const { return dir_.has_value(); }
    const std::optional<std::filesystem::path>& dir() const { return dir_; }

    std::optional<QSeries> load(const std::string& key) const;
    void store(const std::string& key, const QSeries& f) const;

    static std::string file_name(const std::string& key);

private:
    std::optional<std::filesystem::path> dir_;
};

// Flag value first, then the environment; disabled when neither is set or no_cache holds.
DiskCache resolve_cache(const std::string& flag_dir, bool no_cache);

std::string series_key(const std::string& normalized_expr, long prec);

}  // namespace magnetic::app
