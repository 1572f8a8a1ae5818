#pragma once

#include <json.hpp>

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace comin {

inline constexpr int kCacheSchemaVersion = 1;

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

/// One-file-per-entry result cache: content-addressed names, checksummed
/// JSON payloads, atomic write-rename. Corrupt or version-mismatched files
/// behave as misses.
class DiskCache {
  public:
    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path default_dir() {
        if (const char* env = std::getenv("COMIN_CACHE_DIR")) return env;
        if (const char* home = std::getenv("HOME"))
            return std::filesystem::path(home) / ".cache" / "comin";
        return std::filesystem::path(".comin-cache");
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> get(const std::string& space, const std::string& kind,
                                      const std::string& params, std::ostream* warn = nullptr) {
        auto p = path_for(space, kind, params);
        std::ifstream in(p);
        if (!in) return std::nullopt;
        try {
            nlohmann::json wrapper = nlohmann::json::parse(in);
            if (wrapper.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
            if (wrapper.at("space").get<std::string>() != space ||
                wrapper.at("kind").get<std::string>() != kind ||
                wrapper.at("params").get<std::string>() != params)
                return std::nullopt;
            std::string payload = wrapper.at("payload").dump();
            if (wrapper.at("checksum").get<std::string>() != hex64(fnv1a64(payload))) {
                if (warn)
                    *warn << "warning: cache entry " << p.filename().string()
                          << " failed its checksum; recomputing\n";
                std::error_code ec;
                std::filesystem::remove(p, ec);
                return std::nullopt;
            }
            return wrapper.at("payload");
        } catch (const nlohmann::json::exception&) {
            if (warn)
                *warn << "warning: cache entry " << p.filename().string()
                      << " is unreadable; recomputing\n";
            std::error_code ec;
            std::filesystem::remove(p, ec);
            return std::nullopt;
        }
    }

    void put(const std::string& space, const std::string& kind, const std::string& params,
             const nlohmann::json& payload) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        nlohmann::json wrapper;
        wrapper["schema_version"] = kCacheSchemaVersion;
        wrapper["space"] = space;
        wrapper["kind"] = kind;
        wrapper["params"] = params;
        wrapper["payload"] = payload;
        wrapper["checksum"] = hex64(fnv1a64(payload.dump()));
        auto p = path_for(space, kind, params);
        auto tmp = p;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << wrapper.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, p, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    std::filesystem::path path_for(const std::string& space, const std::string& kind,
                                   const std::string& params) const {
        std::string key = std::to_string(kCacheSchemaVersion) + "|" + space + "|" + kind + "|" +
                          params;
        std::string name = kind + "-" + sanitize(space) +
                           (params.empty() ? "" : "-" + sanitize(params)) + "-" +
                           hex64(fnv1a64(key)) + ".json";
        return dir_ / name;
    }

  private:
    static std::string sanitize(const std::string& s) {
        std::string out;
        for (char c : s) out += (isalnum(static_cast<unsigned char>(c)) ? c : '_');
        return out;
    }

    std::filesystem::path dir_;
};

}  // namespace comin
