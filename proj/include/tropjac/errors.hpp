#pragma once

#include <stdexcept>
#include <string>

namespace tropjac {

// Domain error with a stable machine-readable code. The CLI maps these to
// exit status 2 and a JSON error object; tests match on the code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, const std::string& code, const std::string& message) {
    if (!ok) fail(code, message);
}

} // namespace tropjac
