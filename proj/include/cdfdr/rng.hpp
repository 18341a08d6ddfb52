#ifndef CDFDR_RNG_HPP_
#define CDFDR_RNG_HPP_

#include <cstdint>
#include <random>

namespace cdfdr {

// Deterministic substream generator: a master seed plus a stream id are mixed
// through splitmix64 into an mt19937_64 seed, so replication r can be rerun
// in isolation and reproduce the batch output bit for bit. The uniform and
// normal transforms avoid std::*_distribution, whose output is
// implementation-defined.
class SplitRng {
public:
    SplitRng(std::uint64_t master_seed, std::uint64_t stream);

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on (0, 1), strictly interior.
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal by inverse-CDF sampling.
    double normal();
    double normal(double mean, double sd);

    static std::uint64_t mix(std::uint64_t master_seed, std::uint64_t stream);

private:
    std::mt19937_64 gen_;
};

} // namespace cdfdr

#endif // CDFDR_RNG_HPP_
