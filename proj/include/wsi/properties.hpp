#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace wsi {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Structural checks that need no reference data. Random inputs are drawn from `seed`.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace wsi
