#pragma once

#include <cstddef>
#include <string>

#include "hitcalc/errors.hpp"

namespace hitcalc {

// Resource limits shared by the large linear-algebra builders.
struct Budget {
    std::size_t max_bytes = std::size_t{4} << 30;
    std::size_t max_rows = std::size_t{1} << 26;
    std::size_t max_words = 2'000'000;  // lambda bidegree enumeration
    unsigned threads = 1;

    void require_bytes(std::size_t bytes, const std::string& what) const
    {
        if (bytes > max_bytes)
            throw BudgetError(what + " needs " + std::to_string(bytes >> 20) + " MiB, budget is " +
                              std::to_string(max_bytes >> 20) + " MiB");
    }
    void require_rows(std::size_t rows, const std::string& what) const
    {
        if (rows > max_rows)
            throw BudgetError(what + " has " + std::to_string(rows) + " rows, budget is " +
                              std::to_string(max_rows));
    }
};

}  // namespace hitcalc
