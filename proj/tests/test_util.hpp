#pragma once

#include <atomic>
#include <filesystem>
#include <string>

#include <unistd.h>

namespace test_util {

// Fresh path under the system temp dir; unique per process and call.
inline std::filesystem::path unique_temp_path(const std::string &stem) {
    static std::atomic<int> counter{0};
    return std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
}

} // namespace test_util
