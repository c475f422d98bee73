// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_utils.hpp"
#include <gtest/gtest.h>

using namespace evochain;
using namespace evochain::test;

TEST(simulation, zero_ticks_is_init_world)
{
    auto c = busy_config(1, 0);
    const auto r = run(c);
    EXPECT_EQ(r.world, init_world(c));
    EXPECT_EQ(r.tree.nodes.size(), 1u);
    EXPECT_TRUE(r.tree.edges.empty());
    EXPECT_TRUE(r.stats.series.empty());
}

TEST(simulation, no_buyers_no_growth)
{
    auto c = busy_config(1, 200);
    c.buyers.clear();
    c.genesis_balance = Wei{59};
    const auto r = run(c);
    EXPECT_EQ(r.world.agents.size(), 1u);
    EXPECT_EQ(r.stats.series.size(), 200u);
    EXPECT_EQ(r.stats.series.back().population, 1u);
}

TEST(simulation, busy_world_grows_and_conserves)
{
    Simulation sim{busy_config(5, 300)};
    const auto initial = total_supply(sim.world());
    for (int i = 0; i < 300; ++i)
    {
        sim.step();
        ASSERT_EQ(total_supply(sim.world()), initial);
    }
    EXPECT_GT(sim.world().agents.size(), 10u);
    EXPECT_GT(sim.world().tokens.size(), 10u);
    const auto& last = sim.stats().series.back();
    EXPECT_EQ(last.tick, 300u);
    EXPECT_EQ(last.population, sim.world().agents.size());
    EXPECT_EQ(last, sample_stats(sim.world()));
}

TEST(simulation, deterministic)
{
    const auto a = run(busy_config(9, 200));
    const auto b = run(busy_config(9, 200));
    EXPECT_EQ(state_hash(a.world), state_hash(b.world));
    EXPECT_EQ(export_stats_csv(a.stats), export_stats_csv(b.stats));
    EXPECT_EQ(export_tree_dot(a.tree), export_tree_dot(b.tree));
    const auto c = run(busy_config(10, 200));
    EXPECT_NE(state_hash(a.world), state_hash(c.world));
}

TEST(simulation, snapshot_round_trip)
{
    Simulation sim{busy_config(3, 100)};
    sim.advance(100);
    const auto doc = sim.snapshot();
    const auto restored = Simulation::restore(doc);
    EXPECT_EQ(restored.snapshot(), doc);
    EXPECT_EQ(restored.world(), sim.world());
    EXPECT_EQ(restored.stats(), sim.stats());
    EXPECT_EQ(restored.rng(), sim.rng());
    EXPECT_EQ(restored.config(), sim.config());
}

TEST(simulation, resume_equivalence)
{
    const auto config = busy_config(4, 400);
    Simulation straight{config};
    straight.run_until(400);

    Simulation first{config};
    first.run_until(200);
    auto resumed = Simulation::restore(first.snapshot());
    resumed.run_until(400);
    EXPECT_EQ(resumed.snapshot(), straight.snapshot());
}

TEST(simulation, corrupt_snapshots)
{
    Simulation sim{busy_config(3, 20)};
    sim.advance(20);
    const auto doc = sim.snapshot();
    const auto code_of = [](const std::string& text) {
        try
        {
            Simulation::restore(text);
        }
        catch (const Error& e)
        {
            return e.code();
        }
        return ErrorCode::UnknownSession;
    };
    EXPECT_EQ(code_of(doc.substr(0, doc.size() / 2)), ErrorCode::CorruptSnapshot);
    EXPECT_EQ(code_of(doc.substr(0, doc.size() - 5)), ErrorCode::CorruptSnapshot);
    EXPECT_EQ(code_of(""), ErrorCode::CorruptSnapshot);

    auto flipped = doc;
    flipped[10] = flipped[10] == '1' ? '2' : '1';
    EXPECT_EQ(code_of(flipped), ErrorCode::CorruptSnapshot);

    // Well-hashed body with the wrong format tag.
    auto j = nlohmann::json::parse(doc.substr(0, doc.rfind("\n#sha256:")));
    j["format"] = "evochain-snapshot/0";
    auto body = j.dump();
    EXPECT_EQ(code_of(body + "\n#sha256:" + hex(sha256(body)) + "\n"), ErrorCode::VersionMismatch);

    // Well-hashed body whose tree disagrees with the world.
    j["format"] = std::string{kSnapshotFormat};
    j["tree"]["nodes"][0]["born_at"] = 7;
    body = j.dump();
    EXPECT_EQ(code_of(body + "\n#sha256:" + hex(sha256(body)) + "\n"), ErrorCode::CorruptSnapshot);
}

TEST(simulation, submit_and_faucet)
{
    auto c = small_config();
    c.serve.scripted_actors = false;
    Simulation sim{c};
    sim.advance(3);
    EXPECT_EQ(sim.world().tick, 3u);
    EXPECT_TRUE(sim.world().log.empty());
    const auto eoa = addr(0xf0, 1);
    sim.faucet(eoa, Wei{500});
    const auto r = sim.submit({eoa, genesis_address(), Wei{300}, CallKind::BuyNft, 0});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(sim.world().log.back().tick, 3u);
    EXPECT_EQ(total_supply(sim.world()), expected_supply(sim.world()));
}

TEST(simulation, stats_csv)
{
    EXPECT_EQ(detail::fixed4(1, 3), "0.3333");
    EXPECT_EQ(detail::fixed4(2, 3), "0.6667");
    EXPECT_EQ(detail::fixed4(-5, 2), "-2.5000");
    EXPECT_EQ(detail::fixed4(0, 0), "0.0000");
    RunStats s;
    TickStats t;
    t.tick = 1;
    t.population = 2;
    t.generation_sum = 1;
    t.max_generation = 1;
    t.gene_sums[kDepthGene] = 9;
    s.series.push_back(t);
    const auto csv = export_stats_csv(s);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), stats_csv_header().substr(0, stats_csv_header().size() - 1));
    EXPECT_NE(csv.find("\n1,2,0,0,0,0.5000,1,"), std::string::npos);
    EXPECT_NE(csv.find(",4.5000,"), std::string::npos);
}
