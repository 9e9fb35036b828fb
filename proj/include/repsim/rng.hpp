#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace repsim {

// SplitMix64 output function (Steele/Lea/Flood). A bijection on 64-bit words.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Seed for ensemble member `run_index`: the (run_index+1)-th output of the
// SplitMix64 sequence started at base_seed. Distinct indices always give
// distinct seeds (odd increment, bijective mix).
inline std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(base_seed + (run_index + 1) * kGolden);
}

// Seeded source of uniform and exponential variates with a fixed, documented
// mapping so that identical seeds give identical streams on any platform:
//
//   engine             mt19937_64 seeded with the 64-bit seed
//   u01()              (x >> 11) * 2^-53              in [0, 1)
//   u01_open()         ((x >> 12) + 0.5) * 2^-52      in (0, 1)
//   exponential(rate)  -ln(u01_open()) / rate         in (0, inf)
//
// Each call consumes exactly one engine word.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double u01_open() {
        return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
    }

    double exponential(double rate) { return -std::log(u01_open()) / rate; }

    static constexpr std::string_view generator_name() { return "mt19937_64"; }

private:
    std::mt19937_64 engine_;
};

} // namespace repsim
