#pragma once

#include <stdexcept>
#include <string>

namespace snp {

// Bad or missing configuration input. CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure at run time (non-convergence, NaN state, ...). Exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snp
