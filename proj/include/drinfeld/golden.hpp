#pragma once

#include <string>
#include <vector>

namespace drinfeld {

enum class GoldenStatus { Pass, Fail, Discrepancy };

struct GoldenResult {
    std::string name;
    GoldenStatus status = GoldenStatus::Fail;
    std::string detail;
};

char const * statusName(GoldenStatus s);

/// Worked examples with their expected printed values, recomputed from scratch.
std::vector<GoldenResult> runGoldenExamples();

} // namespace drinfeld
