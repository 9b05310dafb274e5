#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locdom {

/// Machine-readable error classes. The CLI maps each one to an exit code.
enum class ErrorCategory {
    input,     ///< malformed or out-of-range user input
    resource,  ///< an exact search exceeded its configured budget
    internal,  ///< a broken internal invariant (a bug, not bad input)
    io,        ///< file could not be read or written
};

inline std::string_view to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::input: return "input";
        case ErrorCategory::resource: return "resource";
        case ErrorCategory::internal: return "internal";
        case ErrorCategory::io: return "io";
    }
    return "internal";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorCategory::input, what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorCategory::resource, what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorCategory::internal, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

}  // namespace locdom
