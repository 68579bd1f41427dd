#pragma once

#include <cstdint>
#include <random>

namespace sga {

// Deterministic sample source. Distributions are hand-rolled on top of
// mt19937_64 so identical seeds give identical streams on every platform
// (std::uniform_real_distribution makes no such guarantee).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = double(eng_() >> 11) * 0x1.0p-53;  // [0,1)
        return lo + (hi - lo) * u;
    }

    // Uniform integer in [lo, hi] without modulo bias worth worrying about here.
    long long uniform_int(long long lo, long long hi) {
        const std::uint64_t span = std::uint64_t(hi - lo + 1);
        return lo + (long long)(eng_() % span);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace sga
