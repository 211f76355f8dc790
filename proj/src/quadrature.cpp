#include "projconst/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "projconst/errors.hpp"

namespace projconst {

QuadResult disk_reduce(const DiskFunction& f, int n, const DiskOptions& options) {
    if (n < 2) throw DomainError("disk_reduce: n must be >= 2");
    if (options.theta_points < 1) throw DomainError("disk_reduce: need at least one theta point");
    const int m = options.theta_points;
    const double dtheta = 2.0 * std::numbers::pi / m;
    auto radial = [&](double r) {
        double sum = 0.0;
        for (int k = 0; k < m; ++k) {
            const double theta = -std::numbers::pi + k * dtheta;
            sum += f(std::polar(r, theta));
        }
        const double weight = n == 2 ? 1.0 : std::pow((1.0 - r) * (1.0 + r), n - 2);
        return weight * r * sum * dtheta;
    };
    AdaptiveOptions adaptive;
    adaptive.rel_tol = options.rel_tol;
    QuadResult inner = integrate_adaptive(radial, 0.0, 1.0, adaptive);
    const double factor = (n - 1) / std::numbers::pi;
    inner.value *= factor;
    inner.abs_error_estimate *= factor;
    inner.evaluations *= m;
    return inner;
}

QuadResult disk_reduce_radial(const std::function<double(double)>& g, int n, double rel_tol) {
    if (n < 2) throw DomainError("disk_reduce: n must be >= 2");
    auto radial = [&](double r) {
        const double weight = n == 2 ? 1.0 : std::pow((1.0 - r) * (1.0 + r), n - 2);
        return weight * r * g(r);
    };
    AdaptiveOptions adaptive;
    adaptive.rel_tol = rel_tol;
    QuadResult r = integrate_adaptive(radial, 0.0, 1.0, adaptive);
    const double factor = 2.0 * (n - 1);
    r.value *= factor;
    r.abs_error_estimate *= factor;
    return r;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SphereSampler::SphereSampler(int n, std::uint64_t seed, std::uint64_t stream)
    : n_(n), engine_(mix_seed(seed, stream)) {
    if (n < 1) throw DomainError("SphereSampler: n must be >= 1");
}

double SphereSampler::uniform_open() {
    // 53 random bits mapped to (0, 1].
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

void SphereSampler::next(std::span<std::complex<double>> point) {
    if (static_cast<int>(point.size()) != n_) throw DomainError("SphereSampler: wrong point size");
    double norm2 = 0.0;
    for (auto& z : point) {
        const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
        const double angle = 2.0 * std::numbers::pi * uniform_open();
        z = std::polar(radius, angle);
        norm2 += radius * radius;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : point) z *= inv;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }
    // Chan et al. pairwise merge.
    void merge(const Moments& other) {
        if (other.count == 0.0) return;
        const double total = count + other.count;
        const double delta = other.mean - mean;
        mean += delta * other.count / total;
        m2 += other.m2 + delta * delta * count * other.count / total;
        count = total;
    }
};

}  // namespace

QuadResult mc_first_coordinate(int n, const McConfig& config, const DiskFunction& g) {
    if (n < 2) throw DomainError("mc_first_coordinate: n must be >= 2");
    if (config.samples < 1) throw DomainError("mc_first_coordinate: samples must be >= 1");
    const std::uint64_t chunks = (config.samples + kMcChunk - 1) / kMcChunk;
    std::vector<Moments> partial(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        SphereSampler sampler(n, config.seed, c);
        const std::uint64_t begin = c * kMcChunk;
        const std::uint64_t end = std::min(config.samples, begin + kMcChunk);
        std::vector<std::complex<double>> point(n);
        Moments m;
        for (std::uint64_t i = begin; i < end; ++i) {
            sampler.next(point);
            m.add(g(point[0]));
        }
        partial[c] = m;
    });
    Moments total;
    for (const auto& m : partial) total.merge(m);

    QuadResult result;
    result.value = total.mean;
    result.evaluations = static_cast<long>(config.samples);
    if (total.count > 1.0) {
        result.abs_error_estimate = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
    } else {
        result.reliable = false;
    }
    return result;
}

std::vector<std::complex<double>> sample_sphere(int n, std::size_t count, std::uint64_t seed) {
    std::vector<std::complex<double>> out(count * static_cast<std::size_t>(n));
    SphereSampler sampler(n, seed);
    for (std::size_t i = 0; i < count; ++i) {
        sampler.next(std::span(out).subspan(i * n, n));
    }
    return out;
}

}  // namespace projconst
