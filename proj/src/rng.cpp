#include "cdfdr/rng.hpp"

#include "cdfdr/specfun.hpp"

namespace cdfdr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t SplitRng::mix(std::uint64_t master_seed, std::uint64_t stream) {
    return splitmix64(splitmix64(master_seed) ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
}

SplitRng::SplitRng(std::uint64_t master_seed, std::uint64_t stream)
    : gen_(mix(master_seed, stream)) {}

double SplitRng::uniform() {
    // 53 random bits, offset half a ulp into the open interval.
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double SplitRng::normal() {
    return specfun::normal_quantile(uniform());
}

double SplitRng::normal(double mean, double sd) {
    return mean + sd * normal();
}

} // namespace cdfdr
