#pragma once

#include <stdexcept>
#include <string>

namespace tqgate {

// Matrix exponential or optimizer failure. Parameter-domain violations use
// std::invalid_argument; the CLI maps the two onto distinct exit codes.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tqgate
