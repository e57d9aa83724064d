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

#include "cliffdual/cache.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace cliffdual {

CacheDir CacheDir::from_env(const std::string &fallback) {
    const char *env = std::getenv("CLIFFDUAL_CACHE");
    return CacheDir{env ? std::string(env) : fallback};
}

std::optional<nlohmann::json> CacheDir::load(const std::string &name, const std::string &kind) const {
    if (!enabled()) {
        return std::nullopt;
    }
    std::ifstream in(std::filesystem::path(path) / name);
    if (!in) {
        return std::nullopt;
    }
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("format", "") != kind || j.value("version", 0) != CACHE_FORMAT_VERSION ||
        !j.contains("payload")) {
        return std::nullopt;
    }
    return j.at("payload");
}

void CacheDir::store(const std::string &name, const std::string &kind, const nlohmann::json &payload) const {
    if (!enabled()) {
        return;
    }
    std::filesystem::path dir(path);
    std::filesystem::create_directories(dir);
    std::filesystem::path tmp = dir / (name + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cache: cannot write " + tmp.string());
        }
        nlohmann::json j = {{"format", kind}, {"version", CACHE_FORMAT_VERSION}, {"payload", payload}};
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, dir / name);
}

}  // namespace cliffdual
