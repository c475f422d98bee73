// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evochain
{
/// Every failure the library can report, both as Receipt status and as exception payload.
enum class ErrorCode
{
    OriginNotEoa,
    UnknownOrigin,
    InsufficientGasFunds,
    InsufficientFunds,
    PriceTooLow,
    UnknownAgent,
    UnknownToken,
    InsufficientEnergy,
    NonPayable,
    DuplicateAddress,
    MalformedGenome,
    EmptyDrawing,
    ConfigInvalid,
    MultiRootForest,
    VersionMismatch,
    CorruptSnapshot,
    ArithmeticOverflow,
    UnknownSession,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::OriginNotEoa:
        return "OriginNotEoa";
    case ErrorCode::UnknownOrigin:
        return "UnknownOrigin";
    case ErrorCode::InsufficientGasFunds:
        return "InsufficientGasFunds";
    case ErrorCode::InsufficientFunds:
        return "InsufficientFunds";
    case ErrorCode::PriceTooLow:
        return "PriceTooLow";
    case ErrorCode::UnknownAgent:
        return "UnknownAgent";
    case ErrorCode::UnknownToken:
        return "UnknownToken";
    case ErrorCode::InsufficientEnergy:
        return "InsufficientEnergy";
    case ErrorCode::NonPayable:
        return "NonPayable";
    case ErrorCode::DuplicateAddress:
        return "DuplicateAddress";
    case ErrorCode::MalformedGenome:
        return "MalformedGenome";
    case ErrorCode::EmptyDrawing:
        return "EmptyDrawing";
    case ErrorCode::ConfigInvalid:
        return "ConfigInvalid";
    case ErrorCode::MultiRootForest:
        return "MultiRootForest";
    case ErrorCode::VersionMismatch:
        return "VersionMismatch";
    case ErrorCode::CorruptSnapshot:
        return "CorruptSnapshot";
    case ErrorCode::ArithmeticOverflow:
        return "ArithmeticOverflow";
    case ErrorCode::UnknownSession:
        return "UnknownSession";
    }
    return "Unknown";
}

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string{to_string(code)} + ": " + detail), code_{code}
    {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Integer currency amount. All arithmetic is checked: overflow and underflow throw.
class Wei
{
public:
    constexpr Wei() noexcept = default;
    constexpr explicit Wei(std::uint64_t amount) noexcept : amount_{amount} {}

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return amount_; }

    friend Wei operator+(Wei a, Wei b)
    {
        if (a.amount_ > std::numeric_limits<std::uint64_t>::max() - b.amount_)
            throw Error{ErrorCode::ArithmeticOverflow, "Wei addition overflows"};
        return Wei{a.amount_ + b.amount_};
    }

    friend Wei operator-(Wei a, Wei b)
    {
        if (b.amount_ > a.amount_)
            throw Error{ErrorCode::ArithmeticOverflow, "Wei subtraction underflows"};
        return Wei{a.amount_ - b.amount_};
    }

    friend Wei operator*(Wei a, std::uint64_t factor)
    {
        if (factor != 0 && a.amount_ > std::numeric_limits<std::uint64_t>::max() / factor)
            throw Error{ErrorCode::ArithmeticOverflow, "Wei multiplication overflows"};
        return Wei{a.amount_ * factor};
    }

    Wei& operator+=(Wei other) { return *this = *this + other; }
    Wei& operator-=(Wei other) { return *this = *this - other; }

    friend constexpr auto operator<=>(Wei, Wei) noexcept = default;

private:
    std::uint64_t amount_ = 0;
};

namespace detail
{
constexpr int hex_digit(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

inline std::string to_hex(const std::uint8_t* data, std::size_t size)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(size * 2);
    for (std::size_t i = 0; i < size; ++i)
    {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0x0f]);
    }
    return out;
}
}  // namespace detail

/// 20-byte account identifier, rendered as "0x" + 40 lowercase hex digits.
struct Address
{
    std::array<std::uint8_t, 20> bytes{};

    [[nodiscard]] std::string hex() const { return "0x" + detail::to_hex(bytes.data(), bytes.size()); }

    /// First 8 hex digits, used as node names in tree exports.
    [[nodiscard]] std::string short_hex() const { return detail::to_hex(bytes.data(), 4); }

    /// Parses "0x" + 40 hex digits (either case). Returns false on any deviation.
    static bool parse(std::string_view text, Address& out) noexcept
    {
        if (text.size() != 42 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
            return false;
        for (std::size_t i = 0; i < 20; ++i)
        {
            const int hi = detail::hex_digit(text[2 + 2 * i]);
            const int lo = detail::hex_digit(text[3 + 2 * i]);
            if (hi < 0 || lo < 0)
                return false;
            out.bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
        }
        return true;
    }

    static Address from_hex(std::string_view text)
    {
        Address a;
        if (!parse(text, a))
            throw Error{ErrorCode::ConfigInvalid, "bad address '" + std::string{text} + "'"};
        return a;
    }

    /// Address whose last byte is `n` and all other bytes zero.
    static constexpr Address small(std::uint8_t n) noexcept
    {
        Address a;
        a.bytes[19] = n;
        return a;
    }

    friend constexpr auto operator<=>(const Address&, const Address&) noexcept = default;
};

/// Receives all gas fees and clone costs, keeping total supply exactly conserved.
inline constexpr Address kValidatorSink = Address::small(0);
/// Notional deployer of the genesis agent; never an account.
inline constexpr Address kGenesisDeployer = Address::small(1);
/// Notional creator of gateway session EOAs; never an account.
inline constexpr Address kSessionFaucet = Address::small(2);

/// Integer ratio used for taste weights and thresholds so configs stay float-free.
struct Ratio
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] double to_double() const noexcept
    {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    friend constexpr bool operator==(const Ratio&, const Ratio&) noexcept = default;
};
}  // namespace evochain
