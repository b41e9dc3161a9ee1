#pragma once

#include "magnetic/qseries.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace magnetic {

// Longest expansion computed so far per key; shorter requests are served by
// truncation. Entries are immutable and replaced only by longer ones.
class SeriesMemo {
public:
    template <class Build>
    QSeries get(const std::string& key, long prec, Build&& build) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end() && it->second->prec() >= prec) return it->second->truncated(prec);
        }
        auto fresh = std::make_shared<const QSeries>(build(prec));
        if (fresh->prec() < prec) throw PrecisionError("memoized builder fell short for " + key);
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = table_[key];
        if (!slot || slot->prec() < fresh->prec()) slot = fresh;
        return fresh->truncated(prec);
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        table_.clear();
    }

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const QSeries>> table_;
};

}  // namespace magnetic
