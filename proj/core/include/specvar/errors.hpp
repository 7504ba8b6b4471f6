#pragma once

#include <stdexcept>
#include <string>

namespace specvar {

/// Base class for all domain errors the library reports. The CLI maps these
/// to exit code 2 with a machine-readable error object.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    /// Stable machine-readable tag, e.g. "NotDivisible".
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct NotDivisible : DomainError {
    explicit NotDivisible(const std::string& what) : DomainError("NotDivisible", what) {}
};

struct NotInteger : DomainError {
    explicit NotInteger(const std::string& what) : DomainError("NotInteger", what) {}
};

struct BadExponent : DomainError {
    explicit BadExponent(const std::string& what) : DomainError("BadExponent", what) {}
};

struct OutOfRange : DomainError {
    explicit OutOfRange(const std::string& what) : DomainError("OutOfRange", what) {}
};

struct BadParams : DomainError {
    explicit BadParams(const std::string& what) : DomainError("BadParams", what) {}
};

struct OnCaustic : DomainError {
    explicit OnCaustic(const std::string& what) : DomainError("OnCaustic", what) {}
};

struct ZeroEta : DomainError {
    explicit ZeroEta(const std::string& what) : DomainError("ZeroEta", what) {}
};

struct DegenerateMetric : DomainError {
    explicit DegenerateMetric(const std::string& what) : DomainError("DegenerateMetric", what) {}
};

struct PathOnCaustic : DomainError {
    explicit PathOnCaustic(const std::string& what) : DomainError("PathOnCaustic", what) {}
};

struct NoConvergence : DomainError {
    explicit NoConvergence(const std::string& what) : DomainError("NoConvergence", what) {}
};

}  // namespace specvar
