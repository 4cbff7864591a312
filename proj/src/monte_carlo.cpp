#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "viscoex/errors.hpp"
#include "viscoex/exchange.hpp"

namespace viscoex {

namespace {

// Samples are processed in fixed-size chunks, each with its own engine seeded
// from (seed, chunk index). Sample i therefore always sees the same random
// numbers, and chunk statistics are merged in chunk order.
constexpr std::uint64_t chunk_size = 4096;

struct Normal1d {
    double mean;
    double sd;

    double pdf(double x) const {
        const double z = (x - mean) / sd;
        return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * std::numbers::pi));
    }
};

// Running mean and sum of squared deviations.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double value) {
        count += 1.0;
        const double delta = value - mean;
        mean += delta / count;
        m2 += delta * (value - mean);
    }

    void merge(const Moments& other) {
        if (other.count == 0.0) {
            return;
        }
        const double total = count + other.count;
        const double delta = other.mean - mean;
        mean += delta * other.count / total;
        m2 += other.m2 + delta * delta * count * other.count / total;
        count = total;
    }

    double standard_error() const {
        return count > 1.0 ? std::sqrt(m2 / (count - 1.0) / count) : 0.0;
    }
};

struct ChunkMoments {
    Moments direct;
    Moments exchange;
};

struct Sampler {
    const Orbital& orb1;
    const Orbital& orb2;
    const InteractionKernel& kernel;
    Normal1d density1;  // |phi1|^2
    Normal1d density2;  // |phi2|^2
    Normal1d overlap;   // shape of |phi1 phi2|
    std::uint64_t seed;
    std::uint64_t n_samples;

    ChunkMoments run_chunk(std::uint64_t chunk) const {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(chunk),
                          static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 engine(seq);
        std::normal_distribution<double> normal;

        const std::uint64_t begin = chunk * chunk_size;
        const std::uint64_t end = std::min(n_samples, begin + chunk_size);
        ChunkMoments out;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double a1 = density1.mean + density1.sd * normal(engine);
            const double a2 = density2.mean + density2.sd * normal(engine);
            const double b1 = overlap.mean + overlap.sd * normal(engine);
            const double b2 = overlap.mean + overlap.sd * normal(engine);

            const double p1 = eval_orbital(orb1, a1);
            const double p2 = eval_orbital(orb2, a2);
            const double w_direct = (p1 * p1 * p2 * p2) / (density1.pdf(a1) * density2.pdf(a2));
            out.direct.add(kernel(a2 - a1) * w_direct);

            const double rho_b1 = eval_orbital(orb1, b1) * eval_orbital(orb2, b1);
            const double rho_b2 = eval_orbital(orb1, b2) * eval_orbital(orb2, b2);
            const double w_exchange = (rho_b1 * rho_b2) / (overlap.pdf(b1) * overlap.pdf(b2));
            out.exchange.add(kernel(b2 - b1) * w_exchange);
        }
        return out;
    }
};

}  // namespace

void MonteCarloSpec::validate() const {
    if (n_samples < 1000) {
        throw ConfigError("Monte Carlo needs n_samples >= 1000");
    }
}

ExchangeResult mc_pair_integrals(const Orbital& orb1, const Orbital& orb2,
                                 const InteractionKernel& kernel, const MonteCarloSpec& spec) {
    orb1.validate();
    orb2.validate();
    kernel.validate();
    spec.validate();

    // Product of two Gaussians: precision adds, mean is precision-weighted.
    const double prec1 = 1.0 / (orb1.sigma * orb1.sigma);
    const double prec2 = 1.0 / (orb2.sigma * orb2.sigma);
    const double overlap_mean = (orb1.center * prec1 + orb2.center * prec2) / (prec1 + prec2);
    const Sampler sampler{orb1,
                          orb2,
                          kernel,
                          {orb1.center, orb1.sigma / std::numbers::sqrt2},
                          {orb2.center, orb2.sigma / std::numbers::sqrt2},
                          {overlap_mean, 1.0 / std::sqrt(prec1 + prec2)},
                          spec.seed,
                          spec.n_samples};

    const std::uint64_t n_chunks = (spec.n_samples + chunk_size - 1) / chunk_size;
    std::vector<ChunkMoments> partial(n_chunks);
    unsigned workers = spec.workers != 0 ? spec.workers : std::thread::hardware_concurrency();
    workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(1, n_chunks)));

    const auto work = [&](unsigned worker) {
        for (std::uint64_t c = worker; c < n_chunks; c += workers) {
            partial[c] = sampler.run_chunk(c);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    Moments direct;
    Moments exchange;
    for (const ChunkMoments& chunk : partial) {
        direct.merge(chunk.direct);
        exchange.merge(chunk.exchange);
    }

    ExchangeResult result;
    result.method = IntegrationMethod::monte_carlo;
    result.A = direct.mean;
    result.J0 = exchange.mean;
    result.stderr_A = direct.standard_error();
    result.stderr_J0 = exchange.standard_error();
    result.modulate(0.0);
    return result;
}

}  // namespace viscoex
