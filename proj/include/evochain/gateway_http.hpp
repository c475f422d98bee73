// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gateway.hpp"
#include <httplib.h>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

namespace evochain
{
/// Binds a Gateway to a cpp-httplib server. All routing lives in Gateway::handle.
class HttpServer
{
public:
    explicit HttpServer(Gateway& gateway) : gateway_{gateway}
    {
        const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
            std::string target = req.path;
            if (!req.params.empty())
            {
                char sep = '?';
                for (const auto& [k, v] : req.params)
                {
                    target += sep + k + "=" + v;
                    sep = '&';
                }
            }
            const auto out = gateway_.handle({req.method, target, req.body});
            res.status = out.status;
            res.set_content(out.body, out.content_type);
        };
        server_.Get(".*", forward);
        server_.Post(".*", forward);
    }

    ~HttpServer() { stop(); }

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds to host:port (port 0 picks a free port) and returns the bound port, or -1.
    int bind(const std::string& host, int port)
    {
        return port == 0 ? server_.bind_to_any_port(host) :
                           (server_.bind_to_port(host, port) ? port : -1);
    }

    /// Serves until stop(). If tick_interval_ms > 0, scripted actors advance on a timer.
    void listen(std::uint64_t tick_interval_ms = 0)
    {
        running_ = true;
        std::jthread ticker;
        if (tick_interval_ms > 0)
        {
            ticker = std::jthread{[this, tick_interval_ms](std::stop_token st) {
                while (!st.stop_requested())
                {
                    std::this_thread::sleep_for(std::chrono::milliseconds(tick_interval_ms));
                    if (!st.stop_requested())
                        gateway_.tick(1);
                }
            }};
        }
        server_.listen_after_bind();
        running_ = false;
    }

    void stop()
    {
        if (server_.is_running())
            server_.stop();
    }

    [[nodiscard]] bool is_running() const { return server_.is_running(); }
    void wait_until_ready() const { server_.wait_until_ready(); }

private:
    Gateway& gateway_;
    httplib::Server server_;
    std::atomic<bool> running_{false};
};
}  // namespace evochain
