// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "config.hpp"
#include "ledger.hpp"
#include "market.hpp"
#include "phylo.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include <json.hpp>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evochain
{
inline constexpr std::string_view kSnapshotFormat = "evochain-snapshot/1";

/// One row of run statistics, sampled at the end of a tick. Means are kept as integer
/// sums over the population so that state stays float-free.
struct TickStats
{
    std::uint64_t tick = 0;
    std::uint64_t population = 0;
    /// Agents whose balance reaches the replication threshold.
    std::uint64_t active = 0;
    std::uint64_t nfts_sold = 0;
    std::uint64_t volume = 0;
    std::uint64_t generation_sum = 0;
    std::uint64_t max_generation = 0;
    std::array<std::int64_t, kGeneCount> gene_sums{};

    friend bool operator==(const TickStats&, const TickStats&) = default;
};

struct RunStats
{
    std::vector<TickStats> series;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

inline TickStats sample_stats(const WorldState& world)
{
    TickStats s;
    s.tick = world.tick;
    s.population = world.agents.size();
    s.nfts_sold = world.tokens.size();
    s.volume = world.sales_volume.value();
    const Wei threshold = world.params.econ.replication_threshold();
    for (const auto& [addr, agent] : world.agents)
    {
        if (world.balance_of(addr) >= threshold)
            ++s.active;
        s.generation_sum += agent.generation;
        s.max_generation = std::max(s.max_generation, agent.generation);
        for (std::size_t i = 0; i < kGeneCount; ++i)
            s.gene_sums[i] += get_gene(agent.genome, i);
    }
    return s;
}

namespace detail
{
/// sum / n with exactly four decimals, rounded half away from zero, integer-only.
inline std::string fixed4(std::int64_t sum, std::uint64_t n)
{
    if (n == 0)
        return "0.0000";
    const bool negative = sum < 0;
    const auto mag = static_cast<unsigned __int128>(negative ? -sum : sum) * 10000;
    const auto q = static_cast<std::uint64_t>((mag + n / 2) / n);
    std::string frac = std::to_string(q % 10000);
    frac.insert(0, 4 - frac.size(), '0');
    return (negative && q != 0 ? "-" : "") + std::to_string(q / 10000) + "." + frac;
}
}  // namespace detail

inline std::string stats_csv_header()
{
    std::string h = "tick,population,active,nfts_sold,volume_wei,mean_generation,max_generation";
    for (std::size_t i = 0; i < kGeneCount; ++i)
        h += ",mean_" + std::string{gene_name(i)};
    return h + "\n";
}

inline std::string export_stats_csv(const RunStats& stats)
{
    std::string out = stats_csv_header();
    for (const auto& s : stats.series)
    {
        out += std::to_string(s.tick) + ',' + std::to_string(s.population) + ',' +
               std::to_string(s.active) + ',' + std::to_string(s.nfts_sold) + ',' +
               std::to_string(s.volume) + ',' +
               detail::fixed4(static_cast<std::int64_t>(s.generation_sum), s.population) + ',' +
               std::to_string(s.max_generation);
        for (const auto sum : s.gene_sums)
            out += ',' + detail::fixed4(sum, s.population);
        out += '\n';
    }
    return out;
}

inline nlohmann::json stats_to_json(const RunStats& stats)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : stats.series)
    {
        rows.push_back({s.tick, s.population, s.active, s.nfts_sold, s.volume, s.generation_sum,
            s.max_generation, s.gene_sums});
    }
    return {{"columns", {"tick", "population", "active", "nfts_sold", "volume", "generation_sum",
                            "max_generation", "gene_sums"}},
        {"rows", rows}};
}

inline RunStats stats_from_json(const nlohmann::json& j)
{
    RunStats stats;
    for (const auto& r : j.at("rows"))
    {
        TickStats s;
        s.tick = r.at(0).get<std::uint64_t>();
        s.population = r.at(1).get<std::uint64_t>();
        s.active = r.at(2).get<std::uint64_t>();
        s.nfts_sold = r.at(3).get<std::uint64_t>();
        s.volume = r.at(4).get<std::uint64_t>();
        s.generation_sum = r.at(5).get<std::uint64_t>();
        s.max_generation = r.at(6).get<std::uint64_t>();
        s.gene_sums = r.at(7).get<std::array<std::int64_t, kGeneCount>>();
        stats.series.push_back(s);
    }
    return stats;
}

/// Deterministic discrete-time driver.
///
/// Each tick: the world clock advances; every buyer acts in config order, its transactions
/// applied immediately; then every keeper likewise; then statistics are sampled. One
/// random stream serves the whole run. Draw order within a tick: every buyer's agent
/// sampling in config order, then the mutation draws of each successful poke in
/// application order. Buy transactions draw nothing.
class Simulation
{
public:
    explicit Simulation(ScenarioConfig config)
      : config_{std::move(config)}, world_{init_world(config_)}, rng_{config_.seed}
    {}

    void step()
    {
        ++world_.tick;
        if (config_.serve.scripted_actors)
        {
            for (const auto& buyer : config_.buyers)
            {
                for (const auto& tx : buyer_act(world_, buyer, config_.price_weight, rng_))
                    apply_transaction(world_, tx, rng_);
            }
            for (const auto& keeper : config_.keepers)
            {
                for (const auto& tx : keeper_act(world_, keeper))
                    apply_transaction(world_, tx, rng_);
            }
        }
        stats_.series.push_back(sample_stats(world_));
    }

    void advance(std::uint64_t ticks)
    {
        for (std::uint64_t i = 0; i < ticks; ++i)
            step();
    }

    /// Advances until the world clock reaches `tick` (no-op if already there).
    void run_until(std::uint64_t tick)
    {
        while (world_.tick < tick)
            step();
    }

    /// Applies an externally submitted transaction (e.g. from a human via the gateway).
    Receipt submit(Transaction tx)
    {
        tx.tick = world_.tick;
        return apply_transaction(world_, tx, rng_);
    }

    void faucet(const Address& to, Wei amount) { issue_faucet(world_, to, amount); }

    [[nodiscard]] const ScenarioConfig& config() const noexcept { return config_; }
    [[nodiscard]] const WorldState& world() const noexcept { return world_; }
    [[nodiscard]] const RunStats& stats() const noexcept { return stats_; }
    [[nodiscard]] const RandomStream& rng() const noexcept { return rng_; }
    [[nodiscard]] PhyloTree tree() const { return build_tree(world_); }

    /// Canonical snapshot document: sorted-key JSON body, then a "#sha256:<hex>" footer
    /// line hashing the body.
    [[nodiscard]] std::string snapshot() const
    {
        nlohmann::json j;
        j["format"] = kSnapshotFormat;
        j["config"] = config_to_json(config_);
        j["world"] = world_to_json(world_);
        j["tree"] = tree_to_json(tree());
        j["stats"] = stats_to_json(stats_);
        j["rng"] = {{"state", rng_.state()}};
        const auto body = j.dump();
        return body + "\n#sha256:" + hex(sha256(body)) + "\n";
    }

    static Simulation restore(std::string_view document)
    {
        const auto fail = [](const std::string& why) {
            return Error{ErrorCode::CorruptSnapshot, why};
        };
        constexpr std::string_view marker = "\n#sha256:";
        const auto pos = document.rfind(marker);
        if (pos == std::string_view::npos)
            throw fail("missing hash footer");
        const auto body = document.substr(0, pos);
        auto footer = document.substr(pos + marker.size());
        if (!footer.empty() && footer.back() == '\n')
            footer.remove_suffix(1);
        Hash256 expected{};
        if (!parse_hash(footer, expected) || expected != sha256(body))
            throw fail("hash mismatch");

        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(body);
        }
        catch (const nlohmann::json::exception& e)
        {
            throw fail(e.what());
        }
        if (!j.is_object() || !j.contains("format") || j.at("format") != kSnapshotFormat)
            throw Error{ErrorCode::VersionMismatch, "unsupported snapshot format"};

        try
        {
            Simulation sim{parse_config(j.at("config")), world_from_json(j.at("world")),
                RandomStream{j.at("rng").at("state").get<std::uint64_t>()},
                stats_from_json(j.at("stats"))};
            if (tree_to_json(sim.tree()) != j.at("tree"))
                throw fail("tree does not match world");
            return sim;
        }
        catch (const nlohmann::json::exception& e)
        {
            throw fail(e.what());
        }
        catch (const Error& e)
        {
            if (e.code() == ErrorCode::CorruptSnapshot)
                throw;
            throw fail(e.what());
        }
    }

private:
    Simulation(ScenarioConfig config, WorldState world, RandomStream rng, RunStats stats)
      : config_{std::move(config)},
        world_{std::move(world)},
        rng_{rng},
        stats_{std::move(stats)}
    {}

    ScenarioConfig config_;
    WorldState world_;
    RandomStream rng_;
    RunStats stats_;
};

struct RunResult
{
    WorldState world;
    PhyloTree tree;
    RunStats stats;
};

/// Headless run of config.ticks ticks.
inline RunResult run(const ScenarioConfig& config)
{
    Simulation sim{config};
    sim.advance(config.ticks);
    return {sim.world(), sim.tree(), sim.stats()};
}
}  // namespace evochain
