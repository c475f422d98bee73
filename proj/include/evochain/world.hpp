// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "genome.hpp"
#include "hash.hpp"
#include "types.hpp"
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace evochain
{
enum class AccountKind
{
    Eoa,
    AgentContract,
};

struct Account
{
    Address address;
    AccountKind kind = AccountKind::Eoa;
    Wei balance;
    /// Transactions originated (EOA) or children deployed (agent).
    std::uint64_t nonce = 0;

    friend bool operator==(const Account&, const Account&) = default;
};

/// Flat per-call gas fees, charged to the originating EOA.
struct GasSchedule
{
    Wei buy{5};
    Wei poke{7};
    Wei transfer{1};

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

struct EconomicsParams
{
    Wei base_price{100};
    Wei poke_reward{10};
    Wei child_endowment{0};
    Wei gas_clone{50};

    /// Minimum agent balance at which a poke makes the agent replicate.
    [[nodiscard]] Wei replication_threshold() const
    {
        return gas_clone + poke_reward + child_endowment;
    }

    friend bool operator==(const EconomicsParams&, const EconomicsParams&) = default;
};

struct MutationSettings
{
    /// Point mutations applied per replication; 1 is the classic single-gene step.
    unsigned genes_per_replication = 1;

    friend bool operator==(const MutationSettings&, const MutationSettings&) = default;
};

struct WorldParams
{
    GasSchedule gas;
    EconomicsParams econ;
    MutationSettings mutation;

    friend bool operator==(const WorldParams&, const WorldParams&) = default;
};

/// Per-agent storage. All agents share one logic contract, identified by logic_ref.
struct AgentState
{
    Address address;
    Genome genome;
    std::optional<Address> parent;
    std::uint64_t generation = 0;
    std::uint64_t born_at = 0;
    std::vector<Address> children;
    std::uint32_t logic_ref = 1;
    std::uint64_t nfts_sold = 0;

    friend bool operator==(const AgentState&, const AgentState&) = default;
};

struct NftToken
{
    std::uint64_t token_id = 0;
    Address minter;
    Address owner;
    Genome genome_snapshot;
    Hash256 svg_hash{};

    friend bool operator==(const NftToken&, const NftToken&) = default;
};

enum class CallKind
{
    BuyNft,
    Poke,
    Transfer,
};

constexpr std::string_view to_string(CallKind call) noexcept
{
    switch (call)
    {
    case CallKind::BuyNft:
        return "BuyNft";
    case CallKind::Poke:
        return "Poke";
    case CallKind::Transfer:
        return "Transfer";
    }
    return "?";
}

struct Transaction
{
    Address origin;
    Address target;
    Wei value;
    CallKind call = CallKind::Transfer;
    std::uint64_t tick = 0;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

namespace event
{
/// Audit record written for every transaction that reached the dispatcher.
struct TxApplied
{
    Address origin;
    Address target;
    CallKind call = CallKind::Transfer;
    Wei value;
    Wei gas;
    std::optional<ErrorCode> error;

    friend bool operator==(const TxApplied&, const TxApplied&) = default;
};

struct Sold
{
    std::uint64_t token_id = 0;
    Address agent;
    Address buyer;
    Wei price;

    friend bool operator==(const Sold&, const Sold&) = default;
};

struct Replicated
{
    Address child;
    Address parent;

    friend bool operator==(const Replicated&, const Replicated&) = default;
};

struct RewardPaid
{
    Address keeper;
    Wei amount;

    friend bool operator==(const RewardPaid&, const RewardPaid&) = default;
};

/// The only sanctioned change to total supply.
struct FaucetIssued
{
    Address account;
    Wei amount;

    friend bool operator==(const FaucetIssued&, const FaucetIssued&) = default;
};
}  // namespace event

using Event = std::variant<event::TxApplied, event::Sold, event::Replicated, event::RewardPaid,
    event::FaucetIssued>;

struct LogEntry
{
    std::uint64_t seq = 0;
    std::uint64_t tick = 0;
    Event event;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

struct Receipt
{
    std::optional<ErrorCode> error;
    Wei gas_charged;
    std::vector<Event> events;

    [[nodiscard]] bool ok() const noexcept { return !error.has_value(); }
};

/// Complete ledger state; the unit of determinism and snapshotting.
struct WorldState
{
    WorldParams params;
    std::map<Address, Account> accounts;
    std::map<Address, AgentState> agents;
    /// Agent addresses in creation order.
    std::vector<Address> birth_order;
    /// tokens[i].token_id == i + 1.
    std::vector<NftToken> tokens;
    std::uint64_t tick = 0;
    Wei initial_supply;
    Wei faucet_issued;
    /// Cumulative value of all NFT sales.
    Wei sales_volume;
    std::vector<LogEntry> log;

    [[nodiscard]] const Account* find_account(const Address& a) const
    {
        const auto it = accounts.find(a);
        return it == accounts.end() ? nullptr : &it->second;
    }

    [[nodiscard]] const AgentState* find_agent(const Address& a) const
    {
        const auto it = agents.find(a);
        return it == agents.end() ? nullptr : &it->second;
    }

    [[nodiscard]] Wei balance_of(const Address& a) const
    {
        const auto* acc = find_account(a);
        return acc ? acc->balance : Wei{};
    }

    void append_log(Event e) { log.push_back({log.size(), tick, std::move(e)}); }

    friend bool operator==(const WorldState&, const WorldState&) = default;
};
}  // namespace evochain
