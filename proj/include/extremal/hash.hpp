#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace extremal {

// FNV-1a, 64-bit: the checksum for shipped data files and the seed for the
// stub reviewer. Stable across platforms (defined on bytes, no endianness).
inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

// The checksum as it appears in manifests: 16 lowercase hex digits.
inline std::string fnv1a64_hex(std::string_view bytes) {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return out;
}

} // namespace extremal
