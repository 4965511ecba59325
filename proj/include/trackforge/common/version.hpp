#pragma once

#include <cstdint>
#include <string>

namespace trackforge {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a over a canonical string; used to stamp output files with a
// config fingerprint so every reported number is traceable.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(const std::string& s);

// "# trackforge <version> config=<hash>" — first line of every CSV we emit.
std::string file_header(const std::string& config_hash);

}  // namespace trackforge
