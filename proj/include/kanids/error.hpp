#pragma once

#include <stdexcept>
#include <string>

namespace kanids {

// Coarse error categories; the fine-grained condition is the first token of
// the message (e.g. "invalid-range: ...").
enum class ErrorCode {
    io,       // E_IO      missing/unreadable/unwritable files
    parse,    // E_PARSE   malformed CSV input
    schema,   // E_SCHEMA  feature schema disagreement
    config,   // E_CONFIG  invalid arguments or configuration
    data,     // E_DATA    dataset content violates a precondition
    format,   // E_FORMAT  model-file version/checksum failures
    internal, // E_INTERNAL contract misuse inside the library
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace kanids
