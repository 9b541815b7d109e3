#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ncde::rng {

// Every random number in the project is a pure function of
// (seed, stream tag, counter): streams derived from one seed can be
// consumed in any order without perturbing each other.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    Stream(std::uint64_t seed, std::string_view tag)
        : key_(splitmix64(seed ^ fnv1a64(tag))) {}

    Stream fork(std::string_view tag) const { return Stream(splitmix64(key_ ^ fnv1a64(tag))); }
    Stream fork(std::uint64_t index) const { return Stream(splitmix64(key_ ^ splitmix64(index))); }

    std::uint64_t next_u64() { return splitmix64(key_ + ++counter_ * 0x9e3779b97f4a7c15ull); }

    // [0,1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        const double u1 = 1.0 - uniform(); // (0,1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Fisher-Yates; hand-rolled so results do not depend on the standard
    // library's std::shuffle implementation.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace ncde::rng
