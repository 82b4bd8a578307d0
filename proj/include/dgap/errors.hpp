#pragma once

#include <stdexcept>
#include <string>

namespace dgap {

// Thrown when a computation would exceed a documented size cap
// (polynomial degree cap, subset enumeration cap). The CLI maps this
// to exit status 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dgap
