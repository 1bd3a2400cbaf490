#pragma once

#include <stdexcept>
#include <string>

namespace mactc {

// Negative SNR and similar math-domain violations.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Allocation breaks nonnegativity or a power equality beyond tolerance.
class InfeasibleAllocation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Zero gain or coincident nodes where a formula divides by them.
class SingularChannel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegeneratePhase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, std::string diagnostics)
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

}  // namespace mactc
