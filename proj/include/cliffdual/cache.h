// Copyright 2026 The cliffdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFDUAL_CACHE_H
#define CLIFFDUAL_CACHE_H

#include <optional>
#include <string>

#include "json.hpp"

namespace cliffdual {

constexpr int CACHE_FORMAT_VERSION = 1;

/// Directory for on-disk caches. Empty string disables caching.
struct CacheDir {
    std::string path;

    /// CLIFFDUAL_CACHE if set, otherwise the given fallback.
    static CacheDir from_env(const std::string &fallback = "");
    bool enabled() const {
        return !path.empty();
    }
    /// Payload of a cache file if present, of the given kind, and of the current version.
    std::optional<nlohmann::json> load(const std::string &name, const std::string &kind) const;
    /// Writes {"format": kind, "version": ..., "payload": payload} atomically.
    void store(const std::string &name, const std::string &kind, const nlohmann::json &payload) const;
};

}  // namespace cliffdual

#endif
