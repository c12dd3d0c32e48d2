#pragma once

#include <stdexcept>
#include <string>

namespace indpoly {

// Machine-readable error categories; the CLI maps them to exit codes.
enum class ErrorCode {
    parse,            // DSL / input text rejected
    range,            // parameter outside its documented range
    capacity,         // graph or engine size limit exceeded
    closed_form_only, // family exists only as a polynomial, never as a graph
    resource,         // memo table entry cap exceeded
    io,               // file could not be read
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse: return "parse";
        case ErrorCode::range: return "range";
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::closed_form_only: return "closed-form-only";
        case ErrorCode::resource: return "resource";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace indpoly
