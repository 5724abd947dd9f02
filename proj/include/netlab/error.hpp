#pragma once

#include <stdexcept>
#include <string>

namespace netlab {

/// Raised for violated preconditions and invalid inputs across the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &message) : std::runtime_error(message) {}
};

} // namespace netlab
