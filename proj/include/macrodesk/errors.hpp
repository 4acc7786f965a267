#pragma once

#include <stdexcept>
#include <string>

namespace macrodesk {

// Bad inputs: malformed scenarios, precondition violations. CLI exit code 1.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Economically meaningful failures on valid inputs. CLI exit code 2.
struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidWageError : ValidationError {
    explicit InvalidWageError(const std::string& what) : ValidationError(what) {}
};

struct NoSurplusError : ModelError {
    explicit NoSurplusError(const std::string& what) : ModelError(what) {}
};

struct InfeasibleCreditError : ModelError {
    explicit InfeasibleCreditError(const std::string& what) : ModelError(what) {}
};

struct InconsistentLogError : ValidationError {
    explicit InconsistentLogError(const std::string& what) : ValidationError(what) {}
};

struct InvalidTransfersError : ValidationError {
    explicit InvalidTransfersError(const std::string& what) : ValidationError(what) {}
};

struct MultiplierDivergenceError : ModelError {
    explicit MultiplierDivergenceError(const std::string& what) : ModelError(what) {}
};

struct NoEquilibriumError : ModelError {
    explicit NoEquilibriumError(const std::string& what) : ModelError(what) {}
};

struct NoInteriorEquilibriumError : ModelError {
    explicit NoInteriorEquilibriumError(const std::string& what) : ModelError(what) {}
};

}  // namespace macrodesk
