#include "qbranch/cache.hpp"

#include <unistd.h>

#include <atomic>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace qbranch {

namespace fs = std::filesystem;

namespace {

constexpr std::uint32_t kFormatVersion = 1;
constexpr char kMagic[4] = {'Q', 'B', 'C', 'H'};

std::uint64_t fnv64(const unsigned char* data, size_t len) {
    std::uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::atomic<bool> cache_disabled_warned{false};

void warn_once(const std::string& msg) {
    if (!cache_disabled_warned.exchange(true))
        std::cerr << "qbranch: " << msg << "; continuing without cache\n";
}

std::optional<fs::path> usable_cache_dir() {
    std::string dir = cache_directory();
    if (dir.empty()) return std::nullopt;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return std::nullopt;
    // probe writability
    fs::path probe = fs::path(dir) / ".probe";
    std::ofstream f(probe, std::ios::binary | std::ios::trunc);
    if (!f) return std::nullopt;
    f.close();
    fs::remove(probe, ec);
    return fs::path(dir);
}

std::string key_file_name(const std::string& key) {
    std::uint64_t h = fnv64((const unsigned char*)key.data(), key.size());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf) + ".qbch";
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back((unsigned char)(v >> (8 * i)));
}

void put_i64(std::vector<unsigned char>& out, std::int64_t v) {
    auto u = (std::uint64_t)v;
    for (int i = 0; i < 8; ++i) out.push_back((unsigned char)(u >> (8 * i)));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= (std::uint32_t)p[i] << (8 * i);
    return v;
}

std::int64_t get_i64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= (std::uint64_t)p[i] << (8 * i);
    return (std::int64_t)v;
}

}  // namespace

std::string cache_directory() {
    if (const char* env = std::getenv("QBRANCH_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return (fs::path(xdg) / "qbranch").string();
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "qbranch").string();
    return {};
}

std::string character_cache_key(const RootSystem& rs, const IVec& lambda) {
    std::ostringstream os;
    os << "char/v" << kFormatVersion << "/" << rs.label() << "/";
    for (size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
    return os.str();
}

std::optional<Character> cache_get(const std::string& key, int rank) {
    auto dir = usable_cache_dir();
    if (!dir) return std::nullopt;
    fs::path file = *dir / key_file_name(key);
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    auto reject = [&]() -> std::optional<Character> {
        std::error_code ec;
        fs::remove(file, ec);  // corrupt or stale: recompute
        return std::nullopt;
    };
    if (data.size() < 4 + 4 + 4 + 4 + 8) return reject();
    if (std::memcmp(data.data(), kMagic, 4) != 0) return reject();
    size_t pos = 4;
    std::uint32_t version = get_u32(&data[pos]);
    pos += 4;
    if (version != kFormatVersion) return reject();
    std::uint32_t file_rank = get_u32(&data[pos]);
    pos += 4;
    std::uint32_t count = get_u32(&data[pos]);
    pos += 4;
    if ((int)file_rank != rank) return reject();
    size_t payload_len = (size_t)count * (2 * file_rank + 8);
    if (data.size() != pos + payload_len + 8) return reject();
    std::uint64_t stored = (std::uint64_t)get_i64(&data[pos + payload_len]);
    if (fnv64(&data[pos], payload_len) != stored) return reject();

    Character ch;
    ch.rank = rank;
    ch.entries.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        IVec w(rank);
        for (int j = 0; j < rank; ++j) {
            std::int16_t c = (std::int16_t)(data[pos] | (data[pos + 1] << 8));
            pos += 2;
            w[j] = c;
        }
        Int mult = get_i64(&data[pos]);
        pos += 8;
        if (mult <= 0) return reject();
        ch.entries.emplace(vec_to_key(w), mult);
    }
    return ch;
}

bool cache_put(const std::string& key, const Character& ch) {
    auto dir = usable_cache_dir();
    if (!dir) {
        warn_once("cache directory '" + cache_directory() + "' is not usable");
        return false;
    }
    std::vector<unsigned char> payload;
    payload.reserve(ch.entries.size() * (2 * ch.rank + 8));
    // stable order for byte-identical files
    std::vector<std::pair<WeightKey, Int>> sorted(ch.entries.begin(), ch.entries.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [k, m] : sorted) {
        for (int j = 0; j < ch.rank; ++j) {
            payload.push_back((unsigned char)(k.c[j] & 0xff));
            payload.push_back((unsigned char)((k.c[j] >> 8) & 0xff));
        }
        put_i64(payload, m);
    }
    std::vector<unsigned char> data;
    data.insert(data.end(), kMagic, kMagic + 4);
    put_u32(data, kFormatVersion);
    put_u32(data, (std::uint32_t)ch.rank);
    put_u32(data, (std::uint32_t)ch.entries.size());
    data.insert(data.end(), payload.begin(), payload.end());
    put_i64(data, (std::int64_t)fnv64(payload.data(), payload.size()));

    fs::path final_path = *dir / key_file_name(key);
    fs::path tmp = final_path;
    tmp += ".tmp." + std::to_string((unsigned long)::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            warn_once("cannot write to cache directory");
            return false;
        }
        out.write((const char*)data.data(), (std::streamsize)data.size());
        if (!out) {
            warn_once("short write to cache directory");
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);  // atomic publish
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

Character cached_freudenthal(const RootSystem& rs, const IVec& lambda, Int dim_cap) {
    // The cap is enforced on the exact dimension whether or not we hit.
    BigInt dim = rs.weyl_dimension(lambda);
    if (dim > dim_cap) {
        std::ostringstream os;
        os << "freudenthal: dimension " << dim << " exceeds cap " << dim_cap;
        throw std::invalid_argument(os.str());
    }
    std::string key = character_cache_key(rs, lambda);
    if (auto hit = cache_get(key, rs.rank)) return *hit;
    Character ch = freudenthal(rs, lambda, dim_cap);
    cache_put(key, ch);
    return ch;
}

}  // namespace qbranch
