#pragma once

#include <cstdint>
#include <vector>

#include "rmtsf/mops.hpp"
#include "rmtsf/partition.hpp"

namespace rmtsf {

struct SamplerConfig {
    EnsembleSpec ensemble;
    unsigned n = 1;               // matrix size
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct Estimate {
    double mean = 0;
    double standard_error = 0;
    std::uint64_t samples = 0;
};

// Self-contained splitmix64 stream; normals by Box-Muller, two uniforms per
// draw, so the stream layout is independent of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_uniform();  // in (0, 1)
    double next_normal();

private:
    std::uint64_t state_;
};

// One spectrum draw of the configured ensemble (eigenvalues, unsorted order
// as produced by the solver). LUE/JUE require integer gamma >= 0.
std::vector<double> sample_spectrum(const SamplerConfig& config, Rng& rng);

// Empirical E[prod_j p_{mu_j}] with standard error. Deterministic for a
// fixed (seed, workers) pair. Double precision limits useful ranges to
// roughly |mu| <= 10 and n <= 64.
Estimate estimate_trace_moment(const SamplerConfig& config, const Partition& mu);

// Empirical E[prod_j det(t_j - M)] with standard error, p = |t| <= 3.
Estimate estimate_charpoly_product(const SamplerConfig& config, const std::vector<double>& t);

// Empirical mean fraction of rescaled (by 1/(2 sqrt N)) eigenvalues falling
// in [lo, hi], with standard error over matrices.
Estimate estimate_spectral_fraction(const SamplerConfig& config, double lo, double hi);

}  // namespace rmtsf
