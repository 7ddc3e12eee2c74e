#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace as2 {

/// Malformed text input; `position()` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace as2
