#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace reachrl {

/// Deterministic random source. All sampling goes through hand-written
/// transforms (not std:: distributions) so that a given seed yields the same
/// stream on every standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in {0, ..., n-1}. n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) {
        // Rejection-free modulo is biased for huge n; n here is always far
        // below 2^63 so the bias is < 2^-10 of a draw and irrelevant, but do
        // the cheap rejection anyway to keep the stream unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    /// Standard normal via Box-Muller (no cached second value, so that the
    /// draw count per call is fixed).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Derives an independent child stream; advances this stream by one draw.
    Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    void deserialize(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace reachrl
