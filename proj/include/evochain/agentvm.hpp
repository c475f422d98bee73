// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "morphogen.hpp"
#include "random.hpp"
#include "world.hpp"
#include <array>
#include <cstdint>
#include <vector>

// Agent contract semantics. Every operation validates all of its preconditions before
// touching state, so an error leaves the world exactly as it was.

namespace evochain
{
/// Listed NFT price of an agent: base_price * (1 + price gene).
inline Wei agent_price(const AgentState& agent, const EconomicsParams& econ)
{
    return econ.base_price * (1 + static_cast<std::uint64_t>(agent.genome.price));
}

/// Deterministic creation address: last 20 bytes of SHA-256(parent || big-endian nonce).
inline Address derive_child_address(const Address& parent, std::uint64_t nonce)
{
    std::array<std::uint8_t, 28> preimage{};
    std::copy(parent.bytes.begin(), parent.bytes.end(), preimage.begin());
    for (int i = 0; i < 8; ++i)
        preimage[20 + i] = static_cast<std::uint8_t>(nonce >> (56 - 8 * i));
    const auto digest = sha256(preimage);
    Address out;
    std::copy(digest.end() - 20, digest.end(), out.bytes.begin());
    return out;
}

inline Address genesis_address()
{
    return derive_child_address(kGenesisDeployer, 0);
}

namespace detail
{
inline Account& account_at(WorldState& world, const Address& a)
{
    return world.accounts.at(a);
}

inline void credit(WorldState& world, const Address& to, Wei amount)
{
    auto& acc = world.accounts[to];
    acc.address = to;
    acc.balance += amount;
}
}  // namespace detail

/// Sells one freshly minted NFT of `agent` to `buyer` for the full attached value.
/// Gas has already been charged by the dispatcher.
inline Receipt buy_nft(WorldState& world, const Address& buyer, const Address& agent, Wei value)
{
    Receipt r;
    const auto it = world.agents.find(agent);
    if (it == world.agents.end())
    {
        r.error = ErrorCode::UnknownAgent;
        return r;
    }
    auto& buyer_acc = detail::account_at(world, buyer);
    if (buyer_acc.balance < value)
    {
        r.error = ErrorCode::InsufficientFunds;
        return r;
    }
    if (value < agent_price(it->second, world.params.econ))
    {
        r.error = ErrorCode::PriceTooLow;
        return r;
    }

    const auto& genome = it->second.genome;
    const auto balance_after = detail::account_at(world, agent).balance + value;

    NftToken token;
    token.token_id = world.tokens.size() + 1;
    token.minter = agent;
    token.owner = buyer;
    token.genome_snapshot = genome;
    token.svg_hash = phenotype_hash(genome);

    buyer_acc.balance -= value;
    detail::account_at(world, agent).balance = balance_after;
    ++it->second.nfts_sold;
    world.sales_volume += value;
    r.events.emplace_back(event::Sold{token.token_id, agent, buyer, value});
    world.tokens.push_back(std::move(token));
    return r;
}

/// Withdraw-pattern trigger: if the agent can afford it, it pays the keeper, pays the
/// clone cost to the sink, and deploys one mutated child.
template <UniformSource R>
Receipt poke(WorldState& world, const Address& keeper, const Address& agent, R& rng)
{
    Receipt r;
    const auto it = world.agents.find(agent);
    if (it == world.agents.end())
    {
        r.error = ErrorCode::UnknownAgent;
        return r;
    }
    const auto& econ = world.params.econ;
    const Wei threshold = econ.replication_threshold();
    auto& agent_acc = detail::account_at(world, agent);
    if (agent_acc.balance < threshold)
    {
        r.error = ErrorCode::InsufficientEnergy;
        return r;
    }

    auto& parent = it->second;
    const Address child_addr = derive_child_address(agent, agent_acc.nonce);
    if (world.accounts.contains(child_addr))
        throw Error{ErrorCode::DuplicateAddress, "child address collision " + child_addr.hex()};

    Genome child_genome = parent.genome;
    for (unsigned i = 0; i < world.params.mutation.genes_per_replication; ++i)
        child_genome = mutate(child_genome, rng);

    agent_acc.balance -= threshold;
    ++agent_acc.nonce;
    detail::credit(world, keeper, econ.poke_reward);
    detail::credit(world, kValidatorSink, econ.gas_clone);

    Account child_acc;
    child_acc.address = child_addr;
    child_acc.kind = AccountKind::AgentContract;
    child_acc.balance = econ.child_endowment;
    world.accounts.emplace(child_addr, child_acc);

    AgentState child;
    child.address = child_addr;
    child.genome = child_genome;
    child.parent = agent;
    child.generation = parent.generation + 1;
    child.born_at = world.tick;
    child.logic_ref = parent.logic_ref;
    parent.children.push_back(child_addr);
    world.agents.emplace(child_addr, std::move(child));
    world.birth_order.push_back(child_addr);

    r.events.emplace_back(event::Replicated{child_addr, agent});
    r.events.emplace_back(event::RewardPaid{keeper, econ.poke_reward});
    return r;
}

inline const NftToken& token_at(const WorldState& world, std::uint64_t token_id)
{
    if (token_id == 0 || token_id > world.tokens.size())
        throw Error{ErrorCode::UnknownToken, "token " + std::to_string(token_id)};
    return world.tokens[token_id - 1];
}

inline Address owner_of(const WorldState& world, std::uint64_t token_id)
{
    return token_at(world, token_id).owner;
}

/// Token ids minted by one agent, ascending.
inline std::vector<std::uint64_t> tokens_of_minter(const WorldState& world, const Address& minter)
{
    std::vector<std::uint64_t> ids;
    for (const auto& t : world.tokens)
    {
        if (t.minter == minter)
            ids.push_back(t.token_id);
    }
    return ids;
}
}  // namespace evochain
