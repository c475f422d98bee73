// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "agentvm.hpp"
#include "config.hpp"
#include "world.hpp"
#include <set>

namespace evochain
{
/// Builds the tick-0 world: validator sink, funded buyer and keeper EOAs, and the genesis agent.
inline WorldState init_world(const ScenarioConfig& config)
{
    WorldState w;
    w.params = config.params;

    std::set<Address> seen;
    const auto add = [&](const Address& a, AccountKind kind, Wei balance) {
        if (!seen.insert(a).second)
            throw Error{ErrorCode::DuplicateAddress, a.hex()};
        w.accounts.emplace(a, Account{a, kind, balance, 0});
        w.initial_supply += balance;
    };

    add(kValidatorSink, AccountKind::Eoa, Wei{});
    for (const auto& b : config.buyers)
        add(b.address, AccountKind::Eoa, b.balance);
    for (const auto& k : config.keepers)
        add(k.address, AccountKind::Eoa, k.balance);

    const auto genesis = genesis_address();
    add(genesis, AccountKind::AgentContract, config.genesis_balance);
    AgentState agent;
    agent.address = genesis;
    agent.genome = config.genesis_genome;
    w.agents.emplace(genesis, std::move(agent));
    w.birth_order.push_back(genesis);
    return w;
}

/// Sum of all balances.
inline Wei total_supply(const WorldState& world)
{
    Wei sum;
    for (const auto& [_, acc] : world.accounts)
        sum += acc.balance;
    return sum;
}

/// Supply the world must hold: initial funding plus all faucet issuance.
inline Wei expected_supply(const WorldState& world)
{
    return world.initial_supply + world.faucet_issued;
}

/// Mints new currency into an EOA (created if absent). Recorded as a FaucetIssued event.
inline void issue_faucet(WorldState& world, const Address& to, Wei amount)
{
    const auto it = world.accounts.find(to);
    if (it != world.accounts.end() && it->second.kind != AccountKind::Eoa)
        throw Error{ErrorCode::OriginNotEoa, "faucet target must be an EOA"};
    world.faucet_issued += amount;
    detail::credit(world, to, amount);
    world.append_log(event::FaucetIssued{to, amount});
}

inline Wei gas_fee(const GasSchedule& gas, CallKind call) noexcept
{
    switch (call)
    {
    case CallKind::BuyNft:
        return gas.buy;
    case CallKind::Poke:
        return gas.poke;
    case CallKind::Transfer:
        return gas.transfer;
    }
    return Wei{};
}

/// The only way state changes: an EOA-originated transaction.
///
/// Origin and gas-affordability failures leave the world untouched. Otherwise the flat fee
/// moves to the sink and the origin nonce increments before dispatch; a dispatch error
/// leaves only those two effects (plus the audit log entry).
template <UniformSource R>
Receipt apply_transaction(WorldState& world, const Transaction& tx, R& rng)
{
    Receipt r;
    const auto origin_it = world.accounts.find(tx.origin);
    if (origin_it == world.accounts.end())
    {
        r.error = ErrorCode::UnknownOrigin;
        return r;
    }
    if (origin_it->second.kind != AccountKind::Eoa)
    {
        r.error = ErrorCode::OriginNotEoa;
        return r;
    }
    const Wei fee = gas_fee(world.params.gas, tx.call);
    if (origin_it->second.balance < fee)
    {
        r.error = ErrorCode::InsufficientGasFunds;
        return r;
    }

    origin_it->second.balance -= fee;
    ++origin_it->second.nonce;
    detail::credit(world, kValidatorSink, fee);

    Receipt inner;
    switch (tx.call)
    {
    case CallKind::Transfer:
        if (world.accounts.at(tx.origin).balance < tx.value)
        {
            inner.error = ErrorCode::InsufficientFunds;
            break;
        }
        world.accounts.at(tx.origin).balance -= tx.value;
        detail::credit(world, tx.target, tx.value);
        break;
    case CallKind::BuyNft:
        inner = buy_nft(world, tx.origin, tx.target, tx.value);
        break;
    case CallKind::Poke:
        if (tx.value != Wei{})
            inner.error = ErrorCode::NonPayable;
        else
            inner = poke(world, tx.origin, tx.target, rng);
        break;
    }

    r.error = inner.error;
    r.gas_charged = fee;
    r.events = std::move(inner.events);
    world.append_log(event::TxApplied{tx.origin, tx.target, tx.call, tx.value, fee, r.error});
    for (const auto& e : r.events)
        world.append_log(e);
    return r;
}
}  // namespace evochain
