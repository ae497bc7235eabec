#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquelab {

// Input text could not be parsed. `line` is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An argument referenced a vertex, edge, or pair outside its domain.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A scripted choice did not match the candidates offered at a choice point.
class replay_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration or search cap was exceeded. Carries how much work
// was done before giving up.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& msg, std::uint64_t explored)
        : std::runtime_error(msg), explored_(explored) {}

    std::uint64_t explored() const noexcept { return explored_; }

private:
    std::uint64_t explored_;
};

} // namespace cliquelab
