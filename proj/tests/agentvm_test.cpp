// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_utils.hpp"
#include <gtest/gtest.h>
#include <set>

using namespace evochain;
using namespace evochain::test;

namespace
{
struct Fixture
{
    ScenarioConfig config = small_config();
    WorldState world = init_world(config);
    Address buyer = config.buyers[0].address;
    Address keeper = config.keepers[0].address;
    Address genesis = genesis_address();
    RandomStream rng{3};

    void set_agent_balance(std::uint64_t v) { world.accounts.at(genesis).balance = Wei{v}; }
};
}  // namespace

TEST(agentvm, price_formula)
{
    EconomicsParams econ;
    AgentState a;
    a.genome.price = 0;
    EXPECT_EQ(agent_price(a, econ).value(), 100u);
    a.genome.price = 7;
    EXPECT_EQ(agent_price(a, econ).value(), 800u);
    a.genome.price = 15;
    EXPECT_EQ(agent_price(a, econ).value(), 1600u);
}

TEST(agentvm, buy_at_exact_price)
{
    Fixture f;
    const auto price = agent_price(f.world.agents.at(f.genesis), f.world.params.econ);
    const auto r = buy_nft(f.world, f.buyer, f.genesis, price);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(f.world.tokens.size(), 1u);
    EXPECT_EQ(f.world.balance_of(f.genesis), Wei{200} + price);
}

TEST(agentvm, buy_credits_full_value)
{
    Fixture f;
    const auto price = agent_price(f.world.agents.at(f.genesis), f.world.params.econ);
    const auto value = price + Wei{10};
    ASSERT_TRUE(buy_nft(f.world, f.buyer, f.genesis, value).ok());
    EXPECT_EQ(f.world.balance_of(f.genesis), Wei{200} + value);
    EXPECT_EQ(f.world.balance_of(f.buyer), Wei{1000} - value);
    EXPECT_EQ(f.world.sales_volume, value);
    EXPECT_EQ(f.world.agents.at(f.genesis).nfts_sold, 1u);
}

TEST(agentvm, consecutive_tokens)
{
    Fixture f;
    const auto price = agent_price(f.world.agents.at(f.genesis), f.world.params.econ);
    ASSERT_TRUE(buy_nft(f.world, f.buyer, f.genesis, price).ok());
    ASSERT_TRUE(buy_nft(f.world, f.config.buyers[1].address, f.genesis, price).ok());
    ASSERT_EQ(f.world.tokens.size(), 2u);
    EXPECT_EQ(f.world.tokens[0].token_id, 1u);
    EXPECT_EQ(f.world.tokens[1].token_id, 2u);
    EXPECT_EQ(f.world.tokens[0].svg_hash, f.world.tokens[1].svg_hash);
    EXPECT_EQ(f.world.tokens[0].svg_hash, sha256(render_genome_svg(f.config.genesis_genome)));
    EXPECT_EQ(tokens_of_minter(f.world, f.genesis), (std::vector<std::uint64_t>{1, 2}));
}

TEST(agentvm, owner_of)
{
    Fixture f;
    const auto price = agent_price(f.world.agents.at(f.genesis), f.world.params.econ);
    ASSERT_TRUE(buy_nft(f.world, f.buyer, f.genesis, price).ok());
    EXPECT_EQ(owner_of(f.world, 1), f.buyer);
    for (const std::uint64_t id : {0, 2, 99})
    {
        try
        {
            owner_of(f.world, id);
            FAIL() << id;
        }
        catch (const Error& e)
        {
            EXPECT_EQ(e.code(), ErrorCode::UnknownToken);
        }
    }
}

TEST(agentvm, poke_below_threshold)
{
    Fixture f;
    const auto threshold = f.world.params.econ.replication_threshold();
    f.set_agent_balance(threshold.value() - 1);
    const auto before = f.world;
    const auto r = poke(f.world, f.keeper, f.genesis, f.rng);
    EXPECT_EQ(r.error, ErrorCode::InsufficientEnergy);
    EXPECT_EQ(f.world, before);
    EXPECT_EQ(f.rng, RandomStream{3});
}

TEST(agentvm, poke_at_threshold)
{
    Fixture f;
    const auto& econ = f.world.params.econ;
    f.set_agent_balance(econ.replication_threshold().value());
    const auto keeper_before = f.world.balance_of(f.keeper);
    const auto sink_before = f.world.balance_of(kValidatorSink);
    const auto r = poke(f.world, f.keeper, f.genesis, f.rng);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(f.world.balance_of(f.genesis).value(), 0u);
    EXPECT_EQ(f.world.balance_of(f.keeper), keeper_before + econ.poke_reward);
    EXPECT_EQ(f.world.balance_of(kValidatorSink), sink_before + econ.gas_clone);
    ASSERT_EQ(f.world.agents.size(), 2u);

    const auto child_addr = derive_child_address(f.genesis, 0);
    const auto& child = f.world.agents.at(child_addr);
    EXPECT_EQ(child.parent, f.genesis);
    EXPECT_EQ(child.generation, 1u);
    EXPECT_EQ(child.logic_ref, f.world.agents.at(f.genesis).logic_ref);
    EXPECT_EQ(f.world.accounts.at(child_addr).kind, AccountKind::AgentContract);
    EXPECT_EQ(f.world.accounts.at(child_addr).balance, econ.child_endowment);
    EXPECT_EQ(f.world.accounts.at(f.genesis).nonce, 1u);
    EXPECT_EQ(f.world.agents.at(f.genesis).children, (std::vector<Address>{child_addr}));

    RandomStream replay{3};
    EXPECT_EQ(child.genome, mutate(f.config.genesis_genome, replay));
    EXPECT_EQ(f.rng, replay);
}

TEST(agentvm, child_endowment_moves_to_child)
{
    Fixture f;
    f.world.params.econ.child_endowment = Wei{30};
    const auto threshold = f.world.params.econ.replication_threshold();
    EXPECT_EQ(threshold.value(), 90u);
    f.set_agent_balance(100);
    const auto supply = total_supply(f.world);
    ASSERT_TRUE(poke(f.world, f.keeper, f.genesis, f.rng).ok());
    EXPECT_EQ(f.world.balance_of(f.genesis).value(), 10u);
    EXPECT_EQ(f.world.balance_of(derive_child_address(f.genesis, 0)).value(), 30u);
    EXPECT_EQ(total_supply(f.world), supply);
}

TEST(agentvm, gate_matches_brute_force)
{
    RandomStream params_rng{17};
    for (int set = 0; set < 5; ++set)
    {
        EconomicsParams econ;
        econ.gas_clone = Wei{1 + params_rng.uniform(100)};
        econ.poke_reward = Wei{params_rng.uniform(50)};
        econ.child_endowment = Wei{params_rng.uniform(40)};
        const auto threshold = econ.gas_clone.value() + econ.poke_reward.value() +
                               econ.child_endowment.value();
        for (std::uint64_t balance = 0; balance <= 2 * threshold; ++balance)
        {
            Fixture f;
            f.world.params.econ = econ;
            f.set_agent_balance(balance);
            const auto r = poke(f.world, f.keeper, f.genesis, f.rng);
            const bool oracle = balance >= threshold;
            ASSERT_EQ(r.ok(), oracle) << "balance " << balance << " threshold " << threshold;
            EXPECT_EQ(f.world.agents.size(), oracle ? 2u : 1u);
            const auto expected = oracle ? balance - threshold : balance;
            EXPECT_EQ(f.world.balance_of(f.genesis).value(), expected);
        }
    }
}

TEST(agentvm, child_address_derivation)
{
    const auto a = derive_child_address(genesis_address(), 5);
    EXPECT_EQ(a, derive_child_address(genesis_address(), 5));

    // Independent preimage construction.
    std::string preimage(reinterpret_cast<const char*>(genesis_address().bytes.data()), 20);
    for (int shift = 56; shift >= 0; shift -= 8)
        preimage.push_back(static_cast<char>((5ULL >> shift) & 0xff));
    const auto digest = sha256(preimage);
    EXPECT_TRUE(std::equal(digest.begin() + 12, digest.end(), a.bytes.begin()));
}

TEST(agentvm, child_addresses_are_distinct)
{
    RandomStream rng{23};
    std::set<Address> seen;
    for (int i = 0; i < 10000; ++i)
    {
        Address parent;
        for (auto& b : parent.bytes)
            b = static_cast<std::uint8_t>(rng.uniform(256));
        const auto nonce = rng.uniform(1000);
        EXPECT_NE(derive_child_address(parent, nonce), derive_child_address(parent, nonce + 1));
        Address other = parent;
        other.bytes[rng.uniform(20)] ^= static_cast<std::uint8_t>(1 + rng.uniform(255));
        EXPECT_NE(derive_child_address(parent, nonce), derive_child_address(other, nonce));
        seen.insert(derive_child_address(parent, nonce));
    }
    EXPECT_EQ(seen.size(), 10000u);
}
