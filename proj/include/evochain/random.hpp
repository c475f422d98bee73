// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>

namespace evochain
{
/// Anything that can produce a uniform integer in [0, n).
template <typename R>
concept UniformSource = requires(R& r, std::uint64_t n) {
    { r.uniform(n) } -> std::convertible_to<std::uint64_t>;
};

/// The simulation's single random stream (SplitMix64).
///
/// The whole state is one 64-bit word, so the stream position can be stored in a
/// snapshot and restored exactly. Every call to uniform() consumes exactly one raw
/// output; the bound is applied with a 128-bit multiply-high instead of rejection,
/// so the number of raw draws per logical draw is fixed and platform-independent.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed = 0) noexcept : state_{seed} {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be non-zero.
    std::uint64_t uniform(std::uint64_t n) noexcept
    {
        const auto wide = static_cast<unsigned __int128>(next()) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return state_; }

    friend bool operator==(const RandomStream&, const RandomStream&) noexcept = default;

private:
    std::uint64_t state_;
};

static_assert(UniformSource<RandomStream>);
}  // namespace evochain
