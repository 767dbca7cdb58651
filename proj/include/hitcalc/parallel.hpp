#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hitcalc {

// Splits [0, count) into `threads` contiguous chunks and runs
// body(chunk_index, begin, end) on each. Chunk outputs are meant to be
// concatenated in chunk order, which keeps results independent of the
// thread count.
template <class Body>
std::size_t parallel_chunks(std::size_t count, unsigned threads, Body&& body)
{
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads ? threads : 1, count));
    const std::size_t step = (count + chunks - 1) / std::max<std::size_t>(chunks, 1);
    if (chunks == 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return 1;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] {
            try {
                std::size_t b = std::min(count, c * step);
                std::size_t e = std::min(count, b + step);
                body(c, b, e);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return chunks;
}

}  // namespace hitcalc
