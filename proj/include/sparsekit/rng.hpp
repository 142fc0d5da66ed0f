#ifndef SPARSEKIT_RNG_HPP
#define SPARSEKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "sparsekit/types.hpp"

namespace sparsekit {

/// Counter-based splitmix64 generator. Every stream is a pure function of its
/// seed, so trials can be generated in parallel in any order and still
/// reproduce bit-identically.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Derives an independent stream keyed by `tag`.
    SplitMix64 split(std::uint64_t tag) const {
        SplitMix64 g(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
        g();
        return g;
    }

private:
    std::uint64_t state_;
};

/// Mixes one 64-bit word into a running seed (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t h, std::string_view s) {
    for (char c : s) h = mix_seed(h, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    return h;
}

/// Convenience sampling wrapper over a SplitMix64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double normal() { return normal_(gen_); }

    Vector normal_vector(Index n) {
        Vector v(n);
        for (Index i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    Matrix normal_matrix(Index rows, Index cols) {
        Matrix m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = normal();
        return m;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(gen_);
    }

    /// k distinct indices from [0, n), ascending.
    std::vector<Index> sample_without_replacement(Index n, Index k);

private:
    SplitMix64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace sparsekit

#endif
