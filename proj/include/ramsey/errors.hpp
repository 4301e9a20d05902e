#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Thrown when an exact search or sampling loop would exceed its declared budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramsey
