#pragma once

#include <stdexcept>
#include <string>

namespace nflab {

// Raised for inputs outside an operation's domain (bad n, vertex out of
// range, unsupported complex). Messages are single-line and name the field.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nflab
