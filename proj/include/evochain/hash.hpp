// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "types.hpp"
#include <openssl/evp.h>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace evochain
{
using Hash256 = std::array<std::uint8_t, 32>;

inline Hash256 sha256(std::span<const std::uint8_t> data)
{
    Hash256 out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error{"SHA-256 digest failed"};
    return out;
}

inline Hash256 sha256(std::string_view text)
{
    return sha256(std::span{reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

inline std::string hex(const Hash256& h)
{
    return detail::to_hex(h.data(), h.size());
}

inline bool parse_hash(std::string_view text, Hash256& out) noexcept
{
    if (text.size() != 64)
        return false;
    for (std::size_t i = 0; i < 32; ++i)
    {
        const int hi = detail::hex_digit(text[2 * i]);
        const int lo = detail::hex_digit(text[2 * i + 1]);
        if (hi < 0 || lo < 0)
            return false;
        out[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return true;
}
}  // namespace evochain
