#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stern/ring.hpp"

namespace stern {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint32_t modulus = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    std::string to_json() const;
};

// matrices, additivity, automata, zeros, reachability, nonperiodicity, symmetry, all
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite and NotOddPrime for composite moduli.
SuiteReport run_suite(std::string_view name, const Ring& ring);

}  // namespace stern
