#ifndef FGA_ERROR_HPP
#define FGA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace fga {

// Domain error with a stable machine-readable code (used by the CLI to pick
// exit statuses and by the JSON output as the "error" field).
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input text or configuration: maps to CLI exit status 2.
class parse_error : public error {
public:
    parse_error(std::string code, const std::string& message)
        : error(std::move(code), message) {}
};

} // namespace fga

#endif
