#include "trackforge/common/version.hpp"

#include <cstdio>

namespace trackforge {

std::string hash_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

std::string file_header(const std::string& config_hash) {
    return std::string("# trackforge ") + kVersion + " config=" + config_hash;
}

}  // namespace trackforge
