#pragma once

#include <stdexcept>
#include <string>

namespace pncoef {

/// Thrown when an operation would exceed its configured resource bound
/// (oracle expansion size, brute-force search space, ...). Callers may
/// retry with a larger bound; the CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pncoef
