// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "genome.hpp"
#include "hash.hpp"
#include "world.hpp"
#include <json.hpp>
#include <optional>
#include <string>

// Canonical JSON forms of ledger state. nlohmann::json keeps object keys sorted, and no
// value is floating point, so dump() output is byte-stable and hashable.

namespace evochain
{
namespace detail
{
[[noreturn]] inline void corrupt(const std::string& why)
{
    throw Error{ErrorCode::CorruptSnapshot, why};
}

inline Address read_address(const nlohmann::json& v)
{
    Address a;
    if (!v.is_string() || !Address::parse(v.get<std::string>(), a))
        corrupt("bad address");
    return a;
}

inline std::optional<ErrorCode> error_code_from_string(std::string_view s)
{
    for (int i = 0; i <= static_cast<int>(ErrorCode::UnknownSession); ++i)
    {
        const auto code = static_cast<ErrorCode>(i);
        if (to_string(code) == s)
            return code;
    }
    return std::nullopt;
}

inline CallKind call_from_string(std::string_view s)
{
    for (const auto c : {CallKind::BuyNft, CallKind::Poke, CallKind::Transfer})
    {
        if (to_string(c) == s)
            return c;
    }
    corrupt("bad call kind");
}

inline Wei read_wei(const nlohmann::json& v)
{
    if (!v.is_number_unsigned())
        corrupt("bad amount");
    return Wei{v.get<std::uint64_t>()};
}
}  // namespace detail

inline nlohmann::json genome_json(const Genome& g)
{
    return nlohmann::json::parse(genome_to_json(g));
}

inline nlohmann::json event_to_json(const Event& e)
{
    return std::visit(
        [](const auto& ev) -> nlohmann::json {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, event::TxApplied>)
            {
                return {{"type", "TxApplied"}, {"origin", ev.origin.hex()},
                    {"target", ev.target.hex()}, {"call", to_string(ev.call)},
                    {"value", ev.value.value()}, {"gas", ev.gas.value()},
                    {"status", ev.error ? std::string{to_string(*ev.error)} : "Ok"}};
            }
            else if constexpr (std::is_same_v<T, event::Sold>)
            {
                return {{"type", "Sold"}, {"token_id", ev.token_id}, {"agent", ev.agent.hex()},
                    {"buyer", ev.buyer.hex()}, {"price", ev.price.value()}};
            }
            else if constexpr (std::is_same_v<T, event::Replicated>)
            {
                return {{"type", "Replicated"}, {"child", ev.child.hex()},
                    {"parent", ev.parent.hex()}};
            }
            else if constexpr (std::is_same_v<T, event::RewardPaid>)
            {
                return {{"type", "RewardPaid"}, {"keeper", ev.keeper.hex()},
                    {"amount", ev.amount.value()}};
            }
            else
            {
                return {{"type", "FaucetIssued"}, {"account", ev.account.hex()},
                    {"amount", ev.amount.value()}};
            }
        },
        e);
}

inline Event event_from_json(const nlohmann::json& j)
{
    using namespace detail;
    const auto type = j.at("type").get<std::string>();
    if (type == "TxApplied")
    {
        event::TxApplied ev{read_address(j.at("origin")), read_address(j.at("target")),
            call_from_string(j.at("call").get<std::string>()), read_wei(j.at("value")),
            read_wei(j.at("gas")), std::nullopt};
        const auto status = j.at("status").get<std::string>();
        if (status != "Ok")
        {
            ev.error = error_code_from_string(status);
            if (!ev.error)
                corrupt("bad status");
        }
        return ev;
    }
    if (type == "Sold")
    {
        return event::Sold{j.at("token_id").get<std::uint64_t>(), read_address(j.at("agent")),
            read_address(j.at("buyer")), read_wei(j.at("price"))};
    }
    if (type == "Replicated")
        return event::Replicated{read_address(j.at("child")), read_address(j.at("parent"))};
    if (type == "RewardPaid")
        return event::RewardPaid{read_address(j.at("keeper")), read_wei(j.at("amount"))};
    if (type == "FaucetIssued")
        return event::FaucetIssued{read_address(j.at("account")), read_wei(j.at("amount"))};
    corrupt("unknown event type " + type);
}

inline nlohmann::json receipt_to_json(const Receipt& r)
{
    nlohmann::json j;
    j["status"] = r.error ? std::string{to_string(*r.error)} : "Ok";
    j["gas_charged"] = r.gas_charged.value();
    j["events"] = nlohmann::json::array();
    for (const auto& e : r.events)
        j["events"].push_back(event_to_json(e));
    return j;
}

inline nlohmann::json params_to_json(const WorldParams& p)
{
    return {{"base_price", p.econ.base_price.value()}, {"poke_reward", p.econ.poke_reward.value()},
        {"child_endowment", p.econ.child_endowment.value()},
        {"gas_clone", p.econ.gas_clone.value()}, {"gas_buy", p.gas.buy.value()},
        {"gas_poke", p.gas.poke.value()}, {"gas_transfer", p.gas.transfer.value()},
        {"genes_per_replication", p.mutation.genes_per_replication}};
}

/// Accounts sorted by address with {address, kind, balance, nonce}.
inline nlohmann::json accounts_to_json(const WorldState& w)
{
    auto out = nlohmann::json::array();
    for (const auto& [addr, acc] : w.accounts)
    {
        out.push_back({{"address", addr.hex()},
            {"kind", acc.kind == AccountKind::Eoa ? "eoa" : "agent"},
            {"balance", acc.balance.value()}, {"nonce", acc.nonce}});
    }
    return out;
}

inline nlohmann::json agent_to_json(const AgentState& a)
{
    nlohmann::json j;
    j["address"] = a.address.hex();
    j["genome"] = genome_json(a.genome);
    j["parent"] = a.parent ? nlohmann::json(a.parent->hex()) : nlohmann::json(nullptr);
    j["generation"] = a.generation;
    j["born_at"] = a.born_at;
    j["children"] = nlohmann::json::array();
    for (const auto& c : a.children)
        j["children"].push_back(c.hex());
    j["logic_ref"] = a.logic_ref;
    j["nfts_sold"] = a.nfts_sold;
    return j;
}

inline nlohmann::json world_to_json(const WorldState& w)
{
    nlohmann::json j;
    j["params"] = params_to_json(w.params);
    j["accounts"] = accounts_to_json(w);
    j["agents"] = nlohmann::json::array();
    for (const auto& addr : w.birth_order)
        j["agents"].push_back(agent_to_json(w.agents.at(addr)));
    j["tokens"] = nlohmann::json::array();
    for (const auto& t : w.tokens)
    {
        j["tokens"].push_back({{"token_id", t.token_id}, {"minter", t.minter.hex()},
            {"owner", t.owner.hex()}, {"genome", genome_json(t.genome_snapshot)},
            {"svg_hash", hex(t.svg_hash)}});
    }
    j["tick"] = w.tick;
    j["initial_supply"] = w.initial_supply.value();
    j["faucet_issued"] = w.faucet_issued.value();
    j["sales_volume"] = w.sales_volume.value();
    j["log"] = nlohmann::json::array();
    for (const auto& e : w.log)
    {
        auto ej = event_to_json(e.event);
        ej["seq"] = e.seq;
        ej["tick"] = e.tick;
        j["log"].push_back(std::move(ej));
    }
    return j;
}

inline WorldState world_from_json(const nlohmann::json& j)
{
    using namespace detail;
    try
    {
        WorldState w;
        const auto& p = j.at("params");
        w.params.econ.base_price = read_wei(p.at("base_price"));
        w.params.econ.poke_reward = read_wei(p.at("poke_reward"));
        w.params.econ.child_endowment = read_wei(p.at("child_endowment"));
        w.params.econ.gas_clone = read_wei(p.at("gas_clone"));
        w.params.gas.buy = read_wei(p.at("gas_buy"));
        w.params.gas.poke = read_wei(p.at("gas_poke"));
        w.params.gas.transfer = read_wei(p.at("gas_transfer"));
        w.params.mutation.genes_per_replication = p.at("genes_per_replication").get<unsigned>();

        for (const auto& a : j.at("accounts"))
        {
            Account acc;
            acc.address = read_address(a.at("address"));
            const auto kind = a.at("kind").get<std::string>();
            if (kind != "eoa" && kind != "agent")
                corrupt("bad account kind");
            acc.kind = kind == "eoa" ? AccountKind::Eoa : AccountKind::AgentContract;
            acc.balance = read_wei(a.at("balance"));
            acc.nonce = a.at("nonce").get<std::uint64_t>();
            if (!w.accounts.emplace(acc.address, acc).second)
                corrupt("duplicate account");
        }
        for (const auto& a : j.at("agents"))
        {
            AgentState s;
            s.address = read_address(a.at("address"));
            s.genome = genome_from_json_value(a.at("genome"));
            if (!a.at("parent").is_null())
                s.parent = read_address(a.at("parent"));
            s.generation = a.at("generation").get<std::uint64_t>();
            s.born_at = a.at("born_at").get<std::uint64_t>();
            for (const auto& c : a.at("children"))
                s.children.push_back(read_address(c));
            s.logic_ref = a.at("logic_ref").get<std::uint32_t>();
            s.nfts_sold = a.at("nfts_sold").get<std::uint64_t>();
            w.birth_order.push_back(s.address);
            if (!w.agents.emplace(s.address, std::move(s)).second)
                corrupt("duplicate agent");
        }
        for (const auto& t : j.at("tokens"))
        {
            NftToken tok;
            tok.token_id = t.at("token_id").get<std::uint64_t>();
            tok.minter = read_address(t.at("minter"));
            tok.owner = read_address(t.at("owner"));
            tok.genome_snapshot = genome_from_json_value(t.at("genome"));
            if (!parse_hash(t.at("svg_hash").get<std::string>(), tok.svg_hash))
                corrupt("bad svg hash");
            if (tok.token_id != w.tokens.size() + 1)
                corrupt("token ids out of order");
            w.tokens.push_back(tok);
        }
        w.tick = j.at("tick").get<std::uint64_t>();
        w.initial_supply = read_wei(j.at("initial_supply"));
        w.faucet_issued = read_wei(j.at("faucet_issued"));
        w.sales_volume = read_wei(j.at("sales_volume"));
        for (const auto& e : j.at("log"))
        {
            const auto seq = e.at("seq").get<std::uint64_t>();
            if (seq != w.log.size())
                corrupt("event log out of order");
            w.log.push_back({seq, e.at("tick").get<std::uint64_t>(), event_from_json(e)});
        }
        return w;
    }
    catch (const nlohmann::json::exception& e)
    {
        corrupt(e.what());
    }
    catch (const Error& e)
    {
        if (e.code() == ErrorCode::CorruptSnapshot)
            throw;
        corrupt(e.what());
    }
}

/// SHA-256 of the canonical world document.
inline Hash256 state_hash(const WorldState& w)
{
    return sha256(world_to_json(w).dump());
}
}  // namespace evochain
