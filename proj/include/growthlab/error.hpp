#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

/// Raised when an operation's preconditions are violated.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

} // namespace growthlab
