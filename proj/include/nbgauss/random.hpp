#ifndef NBGAUSS_RANDOM_HPP
#define NBGAUSS_RANDOM_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace nbgauss {

/// Philox4x64-10 block function (Salmon et al., SC'11): encrypts a 256-bit
/// counter under a 128-bit key.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key) noexcept;

/// A reproducible random stream identified by (seed, stream_id).
///
/// Backed by Philox4x64-10 keyed with (seed, stream_id); block i of the
/// stream is the encryption of counter (i, 0, 0, 0). Streams with different
/// ids are therefore independent keys over the same counter sequence, and
/// creating one costs nothing, whatever the id.
///
/// Satisfies UniformRandomBitGenerator.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    std::uint64_t seed() const noexcept { return key_[0]; }
    std::uint64_t stream_id() const noexcept { return key_[1]; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept;

    /// Standard normal variate (Marsaglia polar method).
    double normal() noexcept;

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 4> buffer_{};
    unsigned position_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace nbgauss

#endif  // NBGAUSS_RANDOM_HPP
