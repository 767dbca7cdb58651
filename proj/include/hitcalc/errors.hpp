#pragma once

#include <stdexcept>
#include <string>

namespace hitcalc {

// Operands of incompatible shape (row lengths, variable counts).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured row, memory or step budget would be exceeded. Computations
// abort with this error rather than return a truncated answer.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hitcalc
