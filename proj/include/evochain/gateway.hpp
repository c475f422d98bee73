// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "simulation.hpp"
#include <json.hpp>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace evochain
{
struct HttpRequest
{
    std::string method;
    /// Path, optionally followed by "?query".
    std::string target;
    std::string body;
};

struct HttpResponse
{
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

struct ApiSession
{
    std::string session_id;
    Address bound_eoa;
    std::chrono::system_clock::time_point created_at;
};

/// HTTP status for a rejected ledger action.
constexpr int http_status(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InsufficientGasFunds:
    case ErrorCode::InsufficientFunds:
        return 402;
    case ErrorCode::UnknownAgent:
    case ErrorCode::UnknownToken:
        return 404;
    case ErrorCode::UnknownSession:
    case ErrorCode::MalformedGenome:
    case ErrorCode::ConfigInvalid:
        return 400;
    default:
        return 409;
    }
}

/// The live-simulation API.
///
/// Every request, read or write, runs under one mutex around the simulation, so mutations
/// are linearizable and each response reflects a state where the caller's command was
/// applied atomically. Sessions bind an opaque token to a faucet-funded EOA.
class Gateway
{
public:
    static constexpr std::uint64_t kMaxTicksPerRequest = 10000;
    static constexpr std::size_t kEventPageSize = 500;

    explicit Gateway(ScenarioConfig config) : sim_{std::move(config)}
    {
        std::random_device rd;
        secret_ = std::to_string(rd()) + ":" + std::to_string(rd()) + ":" + std::to_string(rd());
    }

    HttpResponse handle(const HttpRequest& req)
    {
        std::lock_guard lock{mu_};
        try
        {
            return route(req);
        }
        catch (const nlohmann::json::exception& e)
        {
            return error_response(400, "MalformedBody", e.what());
        }
        catch (const BadRequest& e)
        {
            return error_response(400, "MalformedBody", e.what());
        }
        catch (const Error& e)
        {
            return error_response(http_status(e.code()), std::string{to_string(e.code())}, e.what());
        }
    }

    /// Advances the scripted actors; used by POST /api/tick and the optional timer.
    std::uint64_t tick(std::uint64_t count)
    {
        std::lock_guard lock{mu_};
        sim_.advance(count);
        return sim_.world().tick;
    }

    /// Runs `fn(const Simulation&)` under the state lock.
    template <typename F>
    auto inspect(F&& fn)
    {
        std::lock_guard lock{mu_};
        return fn(static_cast<const Simulation&>(sim_));
    }

private:
    struct BadRequest : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    static HttpResponse json_response(int status, const nlohmann::json& j)
    {
        return {status, "application/json", j.dump()};
    }

    static HttpResponse error_response(int status, const std::string& code, const std::string& detail = {})
    {
        nlohmann::json j{{"error", code}};
        if (!detail.empty())
            j["detail"] = detail;
        return json_response(status, j);
    }

    static std::vector<std::string_view> split_path(std::string_view path)
    {
        std::vector<std::string_view> parts;
        while (!path.empty())
        {
            if (path.front() == '/')
            {
                path.remove_prefix(1);
                continue;
            }
            const auto slash = path.find('/');
            parts.push_back(path.substr(0, slash));
            if (slash == std::string_view::npos)
                break;
            path.remove_prefix(slash);
        }
        return parts;
    }

    static std::optional<std::string> query_param(std::string_view query, std::string_view key)
    {
        std::size_t start = 0;
        while (start <= query.size())
        {
            std::size_t end = start;
            while (end < query.size() && query[end] != '&')
                ++end;
            const auto pair = query.substr(start, end - start);
            std::size_t eq = 0;
            while (eq < pair.size() && pair[eq] != '=')
                ++eq;
            if (pair.substr(0, eq) == key)
                return std::string{eq < pair.size() ? pair.substr(eq + 1) : std::string_view{}};
            start = end + 1;
        }
        return std::nullopt;
    }

    static nlohmann::json parse_body(const std::string& body)
    {
        auto j = body.empty() ? nlohmann::json::object() : nlohmann::json::parse(body);
        if (!j.is_object())
            throw BadRequest{"body must be a JSON object"};
        return j;
    }

    static std::uint64_t body_u64(const nlohmann::json& j, const char* key)
    {
        if (!j.contains(key) || !j.at(key).is_number_unsigned())
        {
            throw BadRequest{std::string{"'"} + key + "' must be a non-negative integer"};
        }
        return j.at(key).get<std::uint64_t>();
    }

    const AgentState& agent_or_throw(std::string_view text) const
    {
        Address a;
        if (!Address::parse(text, a))
            throw Error{ErrorCode::UnknownAgent, "malformed address"};
        const auto* agent = sim_.world().find_agent(a);
        if (agent == nullptr)
            throw Error{ErrorCode::UnknownAgent, std::string{text}};
        return *agent;
    }

    const ApiSession& session_or_throw(const nlohmann::json& body) const
    {
        if (!body.contains("session_id") || !body.at("session_id").is_string())
            throw Error{ErrorCode::UnknownSession, "missing session_id"};
        const auto it = sessions_.find(body.at("session_id").get<std::string>());
        if (it == sessions_.end())
            throw Error{ErrorCode::UnknownSession, "no such session"};
        return it->second;
    }

    nlohmann::json agent_summary(const AgentState& a) const
    {
        const auto& world = sim_.world();
        const auto balance = world.balance_of(a.address);
        return {{"address", a.address.hex()}, {"generation", a.generation},
            {"balance", balance.value()},
            {"price", agent_price(a, world.params.econ).value()}, {"born_at", a.born_at},
            {"children_count", a.children.size()}, {"nfts_sold", a.nfts_sold},
            {"ripe", balance >= world.params.econ.replication_threshold()}};
    }

    HttpResponse receipt_response(const Receipt& r) const
    {
        auto j = receipt_to_json(r);
        j["tick"] = sim_.world().tick;
        if (r.ok())
            return json_response(200, j);
        return json_response(http_status(*r.error),
            {{"error", std::string{to_string(*r.error)}}, {"receipt", j}});
    }

    HttpResponse route(const HttpRequest& req)
    {
        std::string_view target = req.target;
        const auto qmark = target.find('?');
        const auto path = target.substr(0, qmark);
        const auto query = qmark == std::string_view::npos ? std::string_view{} : target.substr(qmark + 1);
        const auto parts = split_path(path);
        const bool get = req.method == "GET";
        const bool post = req.method == "POST";

        if (parts.size() < 2 || parts[0] != "api")
            return error_response(404, "NotFound");
        const auto& world = sim_.world();

        if (parts[1] == "agents")
        {
            if (parts.size() == 2 && get)
            {
                auto list = nlohmann::json::array();
                for (const auto& addr : world.birth_order)
                    list.push_back(agent_summary(world.agents.at(addr)));
                return json_response(200, list);
            }
            if (parts.size() >= 3)
            {
                const auto& agent = agent_or_throw(parts[2]);
                if (parts.size() == 3 && get)
                {
                    auto j = agent_summary(agent);
                    j["genome"] = genome_json(agent.genome);
                    j["parent"] = agent.parent ? nlohmann::json(agent.parent->hex()) : nlohmann::json(nullptr);
                    j["children"] = nlohmann::json::array();
                    for (const auto& c : agent.children)
                        j["children"].push_back(c.hex());
                    j["tokens"] = tokens_of_minter(world, agent.address);
                    return json_response(200, j);
                }
                if (parts.size() == 4 && get && parts[3] == "phenotype.svg")
                    return {200, "image/svg+xml", render_genome_svg(agent.genome)};
                if (parts.size() == 4 && post && parts[3] == "buy")
                {
                    const auto body = parse_body(req.body);
                    const auto& session = session_or_throw(body);
                    const Wei value{body_u64(body, "value")};
                    return receipt_response(sim_.submit(
                        {session.bound_eoa, agent.address, value, CallKind::BuyNft, 0}));
                }
                if (parts.size() == 4 && post && parts[3] == "poke")
                {
                    const auto body = parse_body(req.body);
                    const auto& session = session_or_throw(body);
                    return receipt_response(sim_.submit(
                        {session.bound_eoa, agent.address, Wei{}, CallKind::Poke, 0}));
                }
            }
            return error_response(404, "NotFound");
        }

        if (parts.size() == 2 && parts[1] == "session" && post)
        {
            const auto body = parse_body(req.body);
            const Wei requested{body_u64(body, "faucet_amount")};
            const Wei amount = std::min(requested, sim_.config().serve.faucet_cap);
            const Address eoa = derive_child_address(kSessionFaucet, session_counter_++);
            if (world.find_account(eoa) != nullptr)
                throw Error{ErrorCode::DuplicateAddress, eoa.hex()};
            sim_.faucet(eoa, amount);
            ApiSession s{hex(sha256(secret_ + "/" + std::to_string(session_counter_))).substr(0, 32),
                eoa, std::chrono::system_clock::now()};
            sessions_.emplace(s.session_id, s);
            return json_response(200, {{"session_id", s.session_id}, {"address", eoa.hex()},
                                          {"faucet_amount", amount.value()},
                                          {"balance", world.balance_of(eoa).value()}});
        }
        if (parts.size() == 2 && parts[1] == "tick" && post)
        {
            const auto body = parse_body(req.body);
            const auto count = body.contains("count") ? body_u64(body, "count") : 1;
            if (count == 0 || count > kMaxTicksPerRequest)
                throw BadRequest{"count must be in [1, 10000]"};
            sim_.advance(count);
            return json_response(200, {{"tick", world.tick}});
        }
        if (parts.size() == 2 && parts[1] == "tree.dot" && get)
            return {200, "text/vnd.graphviz", export_tree_dot(sim_.tree())};
        if (parts.size() == 2 && parts[1] == "stats" && get)
            return json_response(200, stats_series_json());
        if (parts.size() == 2 && parts[1] == "events" && get)
        {
            std::uint64_t since = 0;
            if (const auto s = query_param(query, "since"))
            {
                const auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), since);
                if (ec != std::errc{} || p != s->data() + s->size())
                    return error_response(400, "MalformedBody", "since must be an integer");
            }
            auto events = nlohmann::json::array();
            std::uint64_t next = since;
            for (auto i = since; i < world.log.size() && events.size() < kEventPageSize; ++i)
            {
                auto e = event_to_json(world.log[i].event);
                e["seq"] = world.log[i].seq;
                e["tick"] = world.log[i].tick;
                events.push_back(std::move(e));
                next = i + 1;
            }
            return json_response(200, {{"events", events}, {"next", next}});
        }
        if (parts.size() == 2 && parts[1] == "status" && get)
        {
            return json_response(200,
                {{"tick", world.tick}, {"population", world.agents.size()},
                    {"total_supply", total_supply(world).value()},
                    {"expected_supply", expected_supply(world).value()},
                    {"replication_threshold", world.params.econ.replication_threshold().value()},
                    {"events", world.log.size()}});
        }
        return error_response(404, "NotFound");
    }

    nlohmann::json stats_series_json() const
    {
        nlohmann::json j;
        for (const char* key : {"tick", "population", "active", "nfts_sold", "volume",
                 "max_generation", "mean_generation"})
            j[key] = nlohmann::json::array();
        for (const auto& s : sim_.stats().series)
        {
            j["tick"].push_back(s.tick);
            j["population"].push_back(s.population);
            j["active"].push_back(s.active);
            j["nfts_sold"].push_back(s.nfts_sold);
            j["volume"].push_back(s.volume);
            j["max_generation"].push_back(s.max_generation);
            j["mean_generation"].push_back(
                detail::fixed4(static_cast<std::int64_t>(s.generation_sum), s.population));
        }
        return j;
    }

    std::mutex mu_;
    Simulation sim_;
    std::map<std::string, ApiSession> sessions_;
    std::uint64_t session_counter_ = 0;
    std::string secret_;
};
}  // namespace evochain
