#pragma once

#include <cstdint>
#include <random>

namespace mcvd::rng {

/// Stateless mix of (master_seed, stream_id) into an independent stream
/// seed. splitmix64 finalizer over the xor of the master with the
/// golden-ratio-spread id; bit-exact on any platform.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
    std::uint64_t z = master_seed ^ (stream_id * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// mt19937_64 wrapped with a polar-method normal sampler. The whole draw
/// sequence is defined by this code plus the standard-mandated engine
/// output, so runs are reproducible bit-for-bit.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mcvd::rng
