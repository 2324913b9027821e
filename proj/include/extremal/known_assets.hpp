#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace extremal {

// Result of checking one manifest entry.
struct KnownAssetReport {
    std::string name;
    bool passed = false;
    std::string detail; // score summary on pass, first mismatch on fail
};

struct VerificationSummary {
    std::vector<KnownAssetReport> reports;
    bool all_passed() const {
        for (const auto &report : reports)
            if (!report.passed)
                return false;
        return !reports.empty();
    }
};

// Check every entry of <data_dir>/manifest.json: the referenced payload file
// must match its recorded fnv1a64 checksum, parse under the problem's
// schema, and evaluate inside the expected envelope (validity, raw-metric
// range or exact value, individual metrics). Mismatches come back as failed
// reports; unreadable/malformed manifest or files throw std::runtime_error
// (an IO problem, not a scoring regression).
VerificationSummary verify_known_assets(const std::filesystem::path &data_dir);

} // namespace extremal
