#include "rmtsf/montecarlo.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <thread>

#include <Eigen/Dense>

namespace rmtsf {

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_normal() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

using Matrix = Eigen::MatrixXcd;

std::complex<double> standard_complex_normal(Rng& rng) {
    return {rng.next_normal() * M_SQRT1_2, rng.next_normal() * M_SQRT1_2};
}

Matrix gue_matrix(unsigned n, Rng& rng) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        m(i, i) = rng.next_normal();
        for (unsigned j = i + 1; j < n; ++j) {
            std::complex<double> z = standard_complex_normal(rng);
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

Matrix wishart(unsigned n, unsigned cols, Rng& rng) {
    Matrix x(n, cols);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < cols; ++j) x(i, j) = standard_complex_normal(rng);
    return x * x.adjoint();
}

long long integer_gamma(const Rational& g, const char* what) {
    if (!is_integer(g) || g < 0)
        throw std::invalid_argument(std::string(what) + ": sampling requires integer gamma >= 0");
    return static_cast<long long>(numerator(g));
}

Matrix sample_matrix(const SamplerConfig& config, Rng& rng) {
    const unsigned n = config.n;
    switch (config.ensemble.kind) {
        case EnsembleSpec::Kind::hermite:
            return gue_matrix(n, rng);
        case EnsembleSpec::Kind::laguerre: {
            unsigned g = static_cast<unsigned>(integer_gamma(config.ensemble.gamma, "LUE"));
            Matrix x(n, n + g);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n + g; ++j) x(i, j) = standard_complex_normal(rng);
            return x * x.adjoint();
        }
        case EnsembleSpec::Kind::jacobi:
            throw std::logic_error("sample_matrix: JUE handled via the generalized eigenproblem");
    }
    throw std::logic_error("sample_matrix: unreachable");
}

std::vector<double> spectrum_of(const SamplerConfig& config, Rng& rng) {
    const unsigned n = config.n;
    if (config.ensemble.is(EnsembleSpec::Kind::jacobi)) {
        unsigned g1 = static_cast<unsigned>(integer_gamma(config.ensemble.gamma1, "JUE"));
        unsigned g2 = static_cast<unsigned>(integer_gamma(config.ensemble.gamma2, "JUE"));
        Matrix a = wishart(n, n + g1, rng);
        Matrix b = wishart(n, n + g2, rng);
        Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(a, a + b);
        std::vector<double> out(n);
        for (unsigned i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
        return out;
    }
    Matrix m = sample_matrix(config, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    std::vector<double> out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
    return out;
}

std::uint64_t worker_seed(std::uint64_t seed, unsigned worker) {
    Rng mix(seed ^ (0xa0761d6478bd642full * (worker + 1)));
    return mix.next_u64();
}

// Runs `samples` draws split over workers; fn maps one draw to a value.
// Reduction order is fixed by worker index, so results are reproducible.
Estimate parallel_estimate(const SamplerConfig& config,
                           const std::function<double(const SamplerConfig&, Rng&)>& fn) {
    if (config.n == 0) throw std::invalid_argument("SamplerConfig: n must be positive");
    if (config.samples == 0) throw std::invalid_argument("SamplerConfig: samples must be positive");
    const unsigned workers = std::max(1u, config.workers);
    std::vector<double> sums(workers, 0.0), sumsqs(workers, 0.0);
    auto run = [&](unsigned w) {
        std::uint64_t begin = config.samples * w / workers;
        std::uint64_t end = config.samples * (w + 1) / workers;
        Rng rng(worker_seed(config.seed, w));
        double s = 0, s2 = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            double v = fn(config, rng);
            s += v;
            s2 += v * v;
        }
        sums[w] = s;
        sumsqs[w] = s2;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    double sum = 0, sumsq = 0;
    for (unsigned w = 0; w < workers; ++w) {
        sum += sums[w];
        sumsq += sumsqs[w];
    }
    const double n = static_cast<double>(config.samples);
    double mean = sum / n;
    double var = n > 1 ? std::max(0.0, (sumsq - n * mean * mean) / (n - 1)) : 0.0;
    return {mean, std::sqrt(var / n), config.samples};
}

}  // namespace

std::vector<double> sample_spectrum(const SamplerConfig& config, Rng& rng) {
    if (config.n == 0) throw std::invalid_argument("sample_spectrum: n must be positive");
    return spectrum_of(config, rng);
}

Estimate estimate_trace_moment(const SamplerConfig& config, const Partition& mu) {
    return parallel_estimate(config, [&mu](const SamplerConfig& c, Rng& rng) {
        std::vector<double> eig = spectrum_of(c, rng);
        double prod = 1;
        for (unsigned part : mu.parts()) {
            double p = 0;
            for (double x : eig) p += std::pow(x, static_cast<double>(part));
            prod *= p;
        }
        return prod;
    });
}

Estimate estimate_charpoly_product(const SamplerConfig& config, const std::vector<double>& t) {
    if (t.empty() || t.size() > 3)
        throw std::invalid_argument("estimate_charpoly_product: need 1 <= p <= 3");
    if (config.ensemble.is(EnsembleSpec::Kind::jacobi))
        return parallel_estimate(config, [&t](const SamplerConfig& c, Rng& rng) {
            std::vector<double> eig = spectrum_of(c, rng);
            double prod = 1;
            for (double tj : t)
                for (double x : eig) prod *= tj - x;
            return prod;
        });
    return parallel_estimate(config, [&t](const SamplerConfig& c, Rng& rng) {
        Matrix m = sample_matrix(c, rng);
        double prod = 1;
        for (double tj : t) {
            Matrix shifted = tj * Matrix::Identity(c.n, c.n) - m;
            prod *= shifted.determinant().real();
        }
        return prod;
    });
}

Estimate estimate_spectral_fraction(const SamplerConfig& config, double lo, double hi) {
    return parallel_estimate(config, [lo, hi](const SamplerConfig& c, Rng& rng) {
        std::vector<double> eig = spectrum_of(c, rng);
        double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(c.n)));
        unsigned count = 0;
        for (double x : eig) {
            double y = x * scale;
            if (y >= lo && y <= hi) ++count;
        }
        return static_cast<double>(count) / static_cast<double>(c.n);
    });
}

}  // namespace rmtsf
