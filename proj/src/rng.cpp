#include "ellip/rng.hpp"

#include <cmath>
#include <numbers>

namespace ellip {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         std::array<std::uint32_t, 2>& key) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
  const std::array<std::uint32_t, 4> next = {
      static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
      static_cast<std::uint32_t>(p1),
      static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
      static_cast<std::uint32_t>(p0),
  };
  ctr = next;
  key[0] += kWeyl0;
  key[1] += kWeyl1;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_id_(stream_id) {}

std::array<std::uint32_t, 4> RandomStream::next_block() {
  std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(draw_counter_),
      static_cast<std::uint32_t>(draw_counter_ >> 32),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32),
  };
  std::array<std::uint32_t, 2> key = key_;
  for (int r = 0; r < 10; ++r) philox_round(ctr, key);
  ++draw_counter_;
  return ctr;
}

std::uint64_t RandomStream::next_bits() {
  if (has_pending_bits_) {
    has_pending_bits_ = false;
    return pending_bits_;
  }
  const auto b = next_block();
  pending_bits_ = (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
  has_pending_bits_ = true;
  return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
}

double RandomStream::next_uniform() {
  return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = static_cast<double>((next_bits() >> 11) + 1) * 0x1.0p-53;
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_gaussian_ = true;
  return r * std::cos(theta);
}

void RandomStream::fill_gaussian(std::span<double> out, double stddev) {
  for (double& x : out) x = stddev * next_gaussian();
}

}  // namespace ellip
