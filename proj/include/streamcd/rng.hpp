#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace streamcd {

// mt19937_64 plus a portable bounded draw. std::uniform_int_distribution and
// std::shuffle are implementation-defined, which would break byte-identical
// output across platforms, so the draws are done by masked rejection here.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("SeededRng::below: bound must be positive");
        const std::uint64_t mask = mask_for(bound);
        for (;;) {
            const std::uint64_t r = engine_() & mask;
            if (r < bound)
                return r;
        }
    }

    // uniform in [0, 1), 53-bit resolution
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        partial_shuffle(items, items.size());
    }

    // Fisher-Yates prefix: afterwards the first n elements are a uniform
    // sample without replacement from the whole vector.
    template <typename T>
    void partial_shuffle(std::vector<T> &items, std::size_t n) {
        n = std::min(n, items.size());
        if (items.size() < 2)
            return;
        const std::size_t last = std::min(n, items.size() - 1);
        for (std::size_t i = 0; i < last; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(items.size() - i));
            std::swap(items[i], items[j]);
        }
    }

private:
    static std::uint64_t mask_for(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        return mask;
    }

    std::mt19937_64 engine_;
};

} // namespace streamcd
