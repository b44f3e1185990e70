#ifndef BRAIDSTAB_SCENARIO_HPP
#define BRAIDSTAB_SCENARIO_HPP

#include <cstdint>
#include <string>

namespace braidstab {

enum class ReportFormat { Csv, Json, Both };

struct RunOptions {
    std::string scenario_path;
    std::string out_dir;
    std::uint64_t seed = 1;
    bool seed_from_cli = false; // a --seed flag beats the scenario's "seed"
    int threads = 1;
    ReportFormat format = ReportFormat::Both;
};

// Executes one CLI command against a scenario file, writing artifacts into
// out_dir. Exit codes: 0 ok (including labeled hypothesis failures),
// 1 falsification rows present (stability), 2 schema violation or missing
// sections/files.
int run_command(const std::string& command, const RunOptions& opt);

// Schema validation entry, throws ScenarioError with a path-precise message.
void validate_scenario_text(const std::string& json_text);

} // namespace braidstab

#endif
