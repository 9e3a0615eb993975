#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlimits {

enum class ErrorKind {
    parse,
    lookup,
    domain,
    infeasible,
    range,
    capacity,
    internal,
    usage,
};

std::string_view to_string(ErrorKind kind);

/// Structured failure raised by every qlimits operation.
///
/// `offending_input()` names the token or argument that caused the failure;
/// `value()` carries a numeric payload where one is meaningful (for example
/// the work floor that an infeasible query fell below).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string offending_input = {},
          std::optional<double> value = std::nullopt)
        : std::runtime_error(message),
          kind_(kind),
          offending_input_(std::move(offending_input)),
          value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& offending_input() const noexcept { return offending_input_; }
    std::optional<double> value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::string offending_input_;
    std::optional<double> value_;
};

}  // namespace qlimits
