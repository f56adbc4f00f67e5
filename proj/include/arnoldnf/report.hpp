// Rendering of outcomes, the command-line run and the round-trip harness.
#pragma once

#include "arnoldnf/classify.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arnoldnf {

struct RunConfig {
    std::string input;
    std::vector<std::string> vars{"x", "y"};
    bool json = false;
    bool trace = false;
    int digits = 10;
    std::optional<long> truncation;
};

/// "r1^3 = 2, r2^2 = r1", empty over Q.
std::string describe_tower(const FieldTower& t);

std::string render_text(const Outcome& o, int digits, bool steps);
nlohmann::json render_json(const Outcome& o, int digits, bool trace);

/// Exit status 0 on success, 2 on rejection, 1 on parse or usage errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct HarnessConfig {
    std::uint64_t seed = 1;
    int count = 3;
    std::vector<TypeId> types;  // empty: sample_types()
    unsigned threads = 0;       // 0: hardware concurrency
};

/// Identical JSON for identical configs.  Timing goes to `timing`.
nlohmann::json run_harness(const HarnessConfig& cfg, std::ostream* timing = nullptr);

}  // namespace arnoldnf
