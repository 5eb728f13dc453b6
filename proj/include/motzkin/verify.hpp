#pragma once

#include <string>
#include <vector>

namespace motzkin {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// quick caps every exhaustive bound at length 5
enum class Scale { quick, full };

constexpr int criterion_count = 11;
CriterionResult run_criterion(int id, Scale scale);
std::string format_result(const CriterionResult& r);

}
