// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "genome.hpp"
#include "world.hpp"
#include <json.hpp>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace evochain
{
inline constexpr std::string_view kScenarioFormat = "evochain-scenario/1";

struct Taste
{
    Ratio w_size;
    Ratio w_fill;
    Ratio w_color;

    friend bool operator==(const Taste&, const Taste&) = default;
};

/// Scripted buyer: stands in for human selection in headless runs.
struct BuyerProfile
{
    Address address;
    Wei balance;
    Wei budget_per_tick;
    Taste taste;
    Rgb preferred_color;
    Ratio utility_threshold;
    std::uint32_t sample_size = 1;

    friend bool operator==(const BuyerProfile&, const BuyerProfile&) = default;
};

/// Scripted keeper: pokes ripe agents for the reward.
struct KeeperProfile
{
    Address address;
    Wei balance;
    std::uint32_t max_pokes_per_tick = 1;

    friend bool operator==(const KeeperProfile&, const KeeperProfile&) = default;
};

struct ServeSettings
{
    Wei faucet_cap{10000};
    /// 0 disables timer-driven ticks.
    std::uint64_t tick_interval_ms = 0;
    bool scripted_actors = true;

    friend bool operator==(const ServeSettings&, const ServeSettings&) = default;
};

struct ScenarioConfig
{
    std::uint64_t seed = 0;
    std::uint64_t ticks = 0;
    WorldParams params;
    /// Weight of the normalized price in buyer utility.
    Ratio price_weight{1, 1};
    Genome genesis_genome;
    Wei genesis_balance;
    std::vector<BuyerProfile> buyers;
    std::vector<KeeperProfile> keepers;
    ServeSettings serve;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

namespace detail
{
[[noreturn]] inline void config_fail(const std::string& why)
{
    throw Error{ErrorCode::ConfigInvalid, why};
}

inline std::uint64_t get_u64(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key))
        config_fail(std::string{"missing key '"} + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        config_fail(std::string{"'"} + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

inline std::uint64_t get_u64_or(const nlohmann::json& j, const char* key, std::uint64_t fallback)
{
    return j.contains(key) ? get_u64(j, key) : fallback;
}

inline Ratio parse_ratio(const nlohmann::json& v, const std::string& what)
{
    Ratio r;
    if (v.is_number_integer())
    {
        r.num = v.get<std::int64_t>();
        return r;
    }
    if (!v.is_string())
        config_fail(what + " must be an integer or a \"num/den\" string");
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    const auto parse_int = [&](std::string_view part, std::int64_t& out) {
        const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        if (ec != std::errc{} || p != part.data() + part.size() || part.empty())
            config_fail(what + ": bad ratio '" + s + "'");
    };
    parse_int(std::string_view{s}.substr(0, slash), r.num);
    if (slash != std::string::npos)
        parse_int(std::string_view{s}.substr(slash + 1), r.den);
    if (r.den <= 0)
        config_fail(what + ": ratio denominator must be positive");
    return r;
}

inline std::string ratio_text(const Ratio& r)
{
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline void reject_unknown_keys(
    const nlohmann::json& j, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    for (const auto& [key, _] : j.items())
    {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            config_fail("unknown key '" + key + "' in " + where);
    }
}

inline Address get_address(const nlohmann::json& j, const std::string& where)
{
    if (!j.contains("address") || !j.at("address").is_string())
        config_fail(where + ": missing address");
    Address a;
    if (!Address::parse(j.at("address").get<std::string>(), a))
        config_fail(where + ": malformed address");
    return a;
}
}  // namespace detail

/// Parses a scenario document. Structural problems throw ConfigInvalid; genome bound
/// violations throw MalformedGenome. Does not check address uniqueness (init_world does).
inline ScenarioConfig parse_config(const nlohmann::json& j)
{
    using namespace detail;
    if (!j.is_object())
        config_fail("scenario must be an object");
    reject_unknown_keys(j,
        {"format", "seed", "ticks", "economics", "genesis_genome", "genesis_balance", "buyers",
            "keepers", "mutation", "serve"},
        "scenario");
    if (!j.contains("format") || j.at("format") != kScenarioFormat)
        config_fail("format must be \"" + std::string{kScenarioFormat} + "\"");

    ScenarioConfig c;
    c.seed = get_u64(j, "seed");
    c.ticks = get_u64(j, "ticks");

    if (j.contains("economics"))
    {
        const auto& e = j.at("economics");
        reject_unknown_keys(e,
            {"base_price", "poke_reward", "child_endowment", "gas_clone", "gas_buy", "gas_poke",
                "gas_transfer", "price_weight"},
            "economics");
        auto& econ = c.params.econ;
        auto& gas = c.params.gas;
        econ.base_price = Wei{get_u64_or(e, "base_price", econ.base_price.value())};
        econ.poke_reward = Wei{get_u64_or(e, "poke_reward", econ.poke_reward.value())};
        econ.child_endowment = Wei{get_u64_or(e, "child_endowment", econ.child_endowment.value())};
        econ.gas_clone = Wei{get_u64_or(e, "gas_clone", econ.gas_clone.value())};
        gas.buy = Wei{get_u64_or(e, "gas_buy", gas.buy.value())};
        gas.poke = Wei{get_u64_or(e, "gas_poke", gas.poke.value())};
        gas.transfer = Wei{get_u64_or(e, "gas_transfer", gas.transfer.value())};
        if (e.contains("price_weight"))
            c.price_weight = parse_ratio(e.at("price_weight"), "price_weight");
    }
    if (c.params.econ.base_price == Wei{0})
        config_fail("base_price must be positive");

    if (!j.contains("genesis_genome"))
        config_fail("missing key 'genesis_genome'");
    c.genesis_genome = genome_from_json_value(j.at("genesis_genome"));
    c.genesis_balance = Wei{get_u64(j, "genesis_balance")};

    if (!j.contains("buyers") || !j.at("buyers").is_array())
        config_fail("buyers must be an array");
    for (const auto& b : j.at("buyers"))
    {
        reject_unknown_keys(b,
            {"address", "balance", "budget_per_tick", "taste", "preferred_color",
                "utility_threshold", "sample_size"},
            "buyer");
        BuyerProfile p;
        p.address = get_address(b, "buyer");
        p.balance = Wei{get_u64(b, "balance")};
        p.budget_per_tick = Wei{get_u64(b, "budget_per_tick")};
        if (b.contains("taste"))
        {
            const auto& t = b.at("taste");
            reject_unknown_keys(t, {"w_size", "w_fill", "w_color"}, "taste");
            if (t.contains("w_size"))
                p.taste.w_size = parse_ratio(t.at("w_size"), "w_size");
            if (t.contains("w_fill"))
                p.taste.w_fill = parse_ratio(t.at("w_fill"), "w_fill");
            if (t.contains("w_color"))
                p.taste.w_color = parse_ratio(t.at("w_color"), "w_color");
        }
        if (b.contains("preferred_color"))
        {
            const auto& pc = b.at("preferred_color");
            if (!pc.is_array() || pc.size() != 3)
                config_fail("preferred_color must be [r,g,b]");
            int rgb[3];
            for (int i = 0; i < 3; ++i)
            {
                if (!pc[i].is_number_integer() || pc[i].get<int>() < 0 || pc[i].get<int>() > 255)
                    config_fail("preferred_color channels must be integers in [0,255]");
                rgb[i] = pc[i].get<int>();
            }
            p.preferred_color = {rgb[0], rgb[1], rgb[2]};
        }
        p.utility_threshold = b.contains("utility_threshold") ?
                                  parse_ratio(b.at("utility_threshold"), "utility_threshold") :
                                  Ratio{};
        const auto k = get_u64_or(b, "sample_size", 1);
        if (k < 1 || k > 1000000)
            config_fail("sample_size must be >= 1");
        p.sample_size = static_cast<std::uint32_t>(k);
        c.buyers.push_back(p);
    }

    if (!j.contains("keepers") || !j.at("keepers").is_array())
        config_fail("keepers must be an array");
    for (const auto& k : j.at("keepers"))
    {
        reject_unknown_keys(k, {"address", "balance", "max_pokes_per_tick"}, "keeper");
        KeeperProfile p;
        p.address = get_address(k, "keeper");
        p.balance = Wei{get_u64(k, "balance")};
        const auto m = get_u64_or(k, "max_pokes_per_tick", 1);
        if (m < 1 || m > 1000000)
            config_fail("max_pokes_per_tick must be >= 1");
        p.max_pokes_per_tick = static_cast<std::uint32_t>(m);
        c.keepers.push_back(p);
    }

    if (j.contains("mutation"))
    {
        const auto& m = j.at("mutation");
        reject_unknown_keys(m, {"genes_per_replication"}, "mutation");
        const auto n = get_u64_or(m, "genes_per_replication", 1);
        if (n < 1 || n > 64)
            config_fail("genes_per_replication must be in [1, 64]");
        c.params.mutation.genes_per_replication = static_cast<unsigned>(n);
    }

    if (j.contains("serve"))
    {
        const auto& s = j.at("serve");
        reject_unknown_keys(s, {"faucet_cap", "tick_interval_ms", "scripted_actors"}, "serve");
        c.serve.faucet_cap = Wei{get_u64_or(s, "faucet_cap", c.serve.faucet_cap.value())};
        c.serve.tick_interval_ms = get_u64_or(s, "tick_interval_ms", 0);
        if (s.contains("scripted_actors"))
        {
            if (!s.at("scripted_actors").is_boolean())
                config_fail("scripted_actors must be a boolean");
            c.serve.scripted_actors = s.at("scripted_actors").get<bool>();
        }
    }
    return c;
}

inline ScenarioConfig parse_config_text(std::string_view text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw Error{ErrorCode::ConfigInvalid, e.what()};
    }
    return parse_config(j);
}

inline ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw Error{ErrorCode::ConfigInvalid, "cannot open config '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

/// Canonical config document (sorted keys, integers and ratio strings only).
inline nlohmann::json config_to_json(const ScenarioConfig& c)
{
    using detail::ratio_text;
    nlohmann::json j;
    j["format"] = kScenarioFormat;
    j["seed"] = c.seed;
    j["ticks"] = c.ticks;
    const auto& econ = c.params.econ;
    const auto& gas = c.params.gas;
    j["economics"] = {{"base_price", econ.base_price.value()},
        {"poke_reward", econ.poke_reward.value()},
        {"child_endowment", econ.child_endowment.value()},
        {"gas_clone", econ.gas_clone.value()}, {"gas_buy", gas.buy.value()},
        {"gas_poke", gas.poke.value()}, {"gas_transfer", gas.transfer.value()},
        {"price_weight", ratio_text(c.price_weight)}};
    j["genesis_genome"] = nlohmann::json::parse(genome_to_json(c.genesis_genome));
    j["genesis_balance"] = c.genesis_balance.value();
    j["buyers"] = nlohmann::json::array();
    for (const auto& b : c.buyers)
    {
        j["buyers"].push_back({{"address", b.address.hex()}, {"balance", b.balance.value()},
            {"budget_per_tick", b.budget_per_tick.value()},
            {"taste", {{"w_size", ratio_text(b.taste.w_size)},
                          {"w_fill", ratio_text(b.taste.w_fill)},
                          {"w_color", ratio_text(b.taste.w_color)}}},
            {"preferred_color",
                {b.preferred_color.r, b.preferred_color.g, b.preferred_color.b}},
            {"utility_threshold", ratio_text(b.utility_threshold)},
            {"sample_size", b.sample_size}});
    }
    j["keepers"] = nlohmann::json::array();
    for (const auto& k : c.keepers)
    {
        j["keepers"].push_back({{"address", k.address.hex()}, {"balance", k.balance.value()},
            {"max_pokes_per_tick", k.max_pokes_per_tick}});
    }
    j["mutation"] = {{"genes_per_replication", c.params.mutation.genes_per_replication}};
    j["serve"] = {{"faucet_cap", c.serve.faucet_cap.value()},
        {"tick_interval_ms", c.serve.tick_interval_ms},
        {"scripted_actors", c.serve.scripted_actors}};
    return j;
}

/// Non-fatal findings. A keeper reward that does not cover poke gas is allowed (it
/// demonstrates an economy that stalls) but reported.
inline std::vector<std::string> config_warnings(const ScenarioConfig& c)
{
    std::vector<std::string> out;
    if (c.params.econ.poke_reward <= c.params.gas.poke)
        out.emplace_back("poke_reward <= gas_poke: keepers will never poke and the economy stalls");
    if (c.buyers.empty())
        out.emplace_back("no buyers: agents can never earn and will not replicate");
    return out;
}
}  // namespace evochain
