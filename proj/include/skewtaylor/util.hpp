#ifndef SKEWTAYLOR_UTIL_HPP
#define SKEWTAYLOR_UTIL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace skewtaylor {

// Malformed problem data (bad q-matrix, overflowing exponents, schema errors).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation exceeds a configured resource cap. Reported
// distinctly from verification failures (exit code 3 vs 1 in the CLI).
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Runs fn(k) for k in [0, count). With threads <= 1 this is a plain loop.
// Callers must ensure fn only reads shared state and writes disjoint slots.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn)
{
    if (threads <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k)
            fn(k);
        return;
    }
    unsigned nw = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t k = w; k < count; k += nw)
                fn(k);
        });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace skewtaylor

#endif
