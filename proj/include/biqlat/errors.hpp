#pragma once

#include <stdexcept>
#include <string>

namespace biqlat {

// Base for all errors that correspond to bad mathematical input rather than
// programming mistakes.  The CLI maps these to exit code 1 and a structured
// error object; `kind` is the stable machine-readable discriminator.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class InvalidQError : public DomainError {
public:
    InvalidQError(std::string reason_kind, const std::string& message)
        : DomainError(std::move(reason_kind), message) {}
};

class NotSquarefreeError : public InvalidQError {
public:
    explicit NotSquarefreeError(const std::string& message)
        : InvalidQError("not-squarefree", message) {}
};

class FieldMismatchError : public DomainError {
public:
    explicit FieldMismatchError(const std::string& message)
        : DomainError("field-mismatch", message) {}
};

class SubfieldError : public DomainError {
public:
    explicit SubfieldError(const std::string& message)
        : DomainError("subfield", message) {}
};

class NotPositiveDefiniteError : public DomainError {
public:
    explicit NotPositiveDefiniteError(const std::string& message)
        : DomainError("not-positive-definite", message) {}
};

class ScaleMismatchError : public DomainError {
public:
    explicit ScaleMismatchError(const std::string& message)
        : DomainError("scale-mismatch", message) {}
};

class EnumerationLimitError : public DomainError {
public:
    explicit EnumerationLimitError(const std::string& message)
        : DomainError("enumeration-limit", message) {}
};

}  // namespace biqlat
