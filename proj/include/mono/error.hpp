#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mono {

enum class ErrorKind {
    IndexOutOfRange,
    DuplicateEdge,
    ColoringMismatch,
    EmptyGraph,
    InvalidSpec,
    PreconditionViolated,
    Parse,
};

std::string_view name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mono
