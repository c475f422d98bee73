// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "agentvm.hpp"
#include "config.hpp"
#include "ledger.hpp"
#include "morphogen.hpp"
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace evochain
{
struct FeatureVector
{
    double size = 0;
    double fill = 0;
    double color_dist = 0;
};

/// Largest bounding-box area among depth-8 genomes whose shape genes are all +9 or -9.
/// Used to normalize the fill feature into [0, 1].
inline std::int64_t fill_normalizer()
{
    static const std::int64_t value = [] {
        std::int64_t best = 1;
        for (unsigned mask = 0; mask < 256; ++mask)
        {
            Genome g;
            g.depth = 8;
            for (unsigned i = 0; i < 8; ++i)
                g.shape[i] = (mask >> i) & 1U ? 9 : -9;
            best = std::max(best, bounding_box(develop(g)).area());
        }
        return best;
    }();
    return value;
}

inline FeatureVector phenotype_features(
    const Drawing& drawing, const Genome& genome, const Rgb& preferred_color)
{
    FeatureVector f;
    f.size = static_cast<double>((std::int64_t{1} << genome.depth) - 1) / 255.0;
    const double fill = static_cast<double>(bounding_box(drawing).area()) /
                        static_cast<double>(fill_normalizer());
    f.fill = std::clamp(fill, 0.0, 1.0);
    const double dr = genome.color.r - preferred_color.r;
    const double dg = genome.color.g - preferred_color.g;
    const double db = genome.color.b - preferred_color.b;
    f.color_dist = std::sqrt(dr * dr + dg * dg + db * db) / std::sqrt(3.0 * 255.0 * 255.0);
    return f;
}

/// Linear buyer utility: taste-weighted features minus the weighted normalized price.
inline double buyer_utility(const FeatureVector& f, const Taste& taste, Wei price,
    const EconomicsParams& econ, const Ratio& price_weight)
{
    const double normalized_price =
        static_cast<double>(price.value()) / static_cast<double>(econ.base_price.value());
    return taste.w_size.to_double() * f.size + taste.w_fill.to_double() * f.fill -
           taste.w_color.to_double() * f.color_dist - price_weight.to_double() * normalized_price;
}

/// Draws `k` distinct indices from [0, n) with Floyd's algorithm (exactly k draws) and
/// returns them ascending. If n <= k, returns all indices without drawing.
template <UniformSource R>
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, R& rng)
{
    std::vector<std::size_t> out;
    if (n <= k)
    {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = i;
        return out;
    }
    std::set<std::size_t> chosen;
    for (std::size_t j = n - k; j < n; ++j)
    {
        const auto t = static_cast<std::size_t>(rng.uniform(j + 1));
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

/// Scripted buyer decision for one tick: at most one BuyNft for the best sampled agent.
/// Ties go to the earlier-born agent.
template <UniformSource R>
std::vector<Transaction> buyer_act(const WorldState& world, const BuyerProfile& profile,
    const Ratio& price_weight, R& rng)
{
    const auto& agents = world.birth_order;
    if (agents.empty())
        return {};
    const auto picks = sample_distinct(agents.size(), profile.sample_size, rng);

    const auto& econ = world.params.econ;
    const AgentState* best = nullptr;
    double best_utility = 0;
    for (const auto idx : picks)
    {
        const auto& agent = world.agents.at(agents[idx]);
        const auto features =
            phenotype_features(develop(agent.genome), agent.genome, profile.preferred_color);
        const double u =
            buyer_utility(features, profile.taste, agent_price(agent, econ), econ, price_weight);
        if (best == nullptr || u > best_utility)
        {
            best = &agent;
            best_utility = u;
        }
    }

    if (best_utility < profile.utility_threshold.to_double())
        return {};
    const Wei price = agent_price(*best, econ);
    const Wei cost = price + world.params.gas.buy;
    const Wei balance = world.balance_of(profile.address);
    if (cost > std::min(balance, profile.budget_per_tick))
        return {};
    return {Transaction{profile.address, best->address, price, CallKind::BuyNft, world.tick}};
}

/// Scripted keeper decision: poke ripe agents in address order, only when the reward
/// beats the poke gas and only as many as the keeper can pay gas for.
inline std::vector<Transaction> keeper_act(const WorldState& world, const KeeperProfile& profile)
{
    std::vector<Transaction> out;
    const auto& econ = world.params.econ;
    const Wei gas = world.params.gas.poke;
    if (econ.poke_reward <= gas)
        return out;
    const Wei threshold = econ.replication_threshold();
    Wei budget = world.balance_of(profile.address);
    for (const auto& [address, _] : world.agents)
    {
        if (out.size() >= profile.max_pokes_per_tick || budget < gas)
            break;
        if (world.balance_of(address) >= threshold)
        {
            out.push_back({profile.address, address, Wei{}, CallKind::Poke, world.tick});
            budget -= gas;
        }
    }
    return out;
}
}  // namespace evochain
