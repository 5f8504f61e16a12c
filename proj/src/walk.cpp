#include "walk.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace ecf::sim {

namespace {

// splitmix64 (Steele, Lea, Flood): 64-bit state, golden-gamma increment,
// avalanche finalizer. Small enough to pin the byte-exact output contract.
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGoldenGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Decorrelated starting state for walk w under a master seed.
std::uint64_t walk_stream_seed(std::uint64_t seed, std::int64_t walk) {
  return mix64(seed ^ mix64(static_cast<std::uint64_t>(walk) + 1));
}

struct PartialSums {
  double sum_sq = 0.0;
  double sum_abs = 0.0;
};

PartialSums run_walks(const WalkConfig& config, std::int64_t first, std::int64_t count) {
  PartialSums out;
  for (std::int64_t w = first; w < first + count; ++w) {
    SplitMix64 rng(walk_stream_seed(config.seed, w));
    double x = 0.0, y = 0.0;
    for (std::int64_t s = 0; s < config.n_steps; ++s) {
      const double angle = 2.0 * std::numbers::pi * rng.next_unit();
      x += config.step_length * std::cos(angle);
      y += config.step_length * std::sin(angle);
    }
    const double s_sq = x * x + y * y;
    out.sum_sq += s_sq;
    out.sum_abs += std::sqrt(s_sq);
  }
  return out;
}

}  // namespace

const char* rng_algorithm() { return "splitmix64"; }

WalkStats simulate_walks(const WalkConfig& config) {
  if (config.n_steps < 1) fail(ErrorCode::InvalidConfig, "n_steps must be >= 1");
  if (config.n_walks < 1) fail(ErrorCode::InvalidConfig, "n_walks must be >= 1");
  if (!(config.step_length > 0.0)) fail(ErrorCode::InvalidConfig, "step_length must be positive");

  // Fixed-size blocks keep the reduction order independent of scheduling:
  // threads race over block indices, but each block is summed sequentially
  // and blocks are folded in index order.
  constexpr std::int64_t kBlock = 8192;
  const std::int64_t n_blocks = (config.n_walks + kBlock - 1) / kBlock;
  std::vector<PartialSums> partials(static_cast<std::size_t>(n_blocks));

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<std::int64_t>(hw, n_blocks));
  std::atomic<std::int64_t> next_block{0};
  const auto worker = [&] {
    for (;;) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      const std::int64_t first = b * kBlock;
      const std::int64_t count = std::min(kBlock, config.n_walks - first);
      partials[static_cast<std::size_t>(b)] = run_walks(config, first, count);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  double sum_sq = 0.0, sum_abs = 0.0;
  for (const auto& p : partials) {
    sum_sq += p.sum_sq;
    sum_abs += p.sum_abs;
  }

  WalkStats stats;
  const double n = static_cast<double>(config.n_walks);
  stats.rms_displacement = std::sqrt(sum_sq / n);
  stats.mean_displacement = sum_abs / n;
  stats.predicted_rms = std::sqrt(static_cast<double>(config.n_steps)) * config.step_length;
  stats.relative_deviation = std::abs(stats.rms_displacement - stats.predicted_rms) / stats.predicted_rms;
  return stats;
}

bool verify_sqrt_law(const WalkStats& stats, double tolerance) {
  return stats.relative_deviation <= tolerance;
}

}  // namespace ecf::sim
