#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartica/zeta.hpp"

namespace quartica {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // values on success, residual or mismatch on failure
};

struct VerifyOptions {
    std::optional<std::uint64_t> p;   // restrict split/product/genus to one prime
    std::optional<unsigned> depth;    // product depth; default per prime
    std::uint64_t pmax = 103;         // range for split, covers and product N1 checks
};

/// "all", "models", "genus", "richelot", "igusa", "covers", "split", "product".
const std::vector<std::string>& suite_names();

/// Runs one suite (or every suite for "all"); results are in a fixed order.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options, const CountFn& count);

}  // namespace quartica
