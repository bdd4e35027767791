#pragma once

#include <stdexcept>
#include <string>

namespace birkhoff {

/// A request that is well-formed but rejected by the mathematics: invalid
/// root type, a precondition on an ideal, an imaginary root where a real one
/// is required, and so on.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace birkhoff
