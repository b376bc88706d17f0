#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace ellip {

/// Counter-based random stream (Philox 4x32-10). A stream is identified by
/// (seed, stream_id); draws are indexed by an internal 128-bit counter, so the
/// sequence of any stream is reproducible independently of all other streams.
/// Workers may each own a stream without coordination.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Uniform on [0, 1), 53 random bits.
  double next_uniform();

  /// Standard normal N(0, 1) via Box-Muller.
  double next_gaussian();

  void fill_gaussian(std::span<double> out, double stddev);

 private:
  std::array<std::uint32_t, 4> next_block();
  std::uint64_t next_bits();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_id_;
  std::uint64_t draw_counter_ = 0;
  std::uint64_t pending_bits_ = 0;
  bool has_pending_bits_ = false;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace ellip
