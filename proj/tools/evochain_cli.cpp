// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evochain/evochain.hpp>
#include <evochain/gateway_http.hpp>
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace evochain;

namespace
{
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Loads the scenario and applies overrides; also builds the world once so address
/// conflicts surface as config errors.
ScenarioConfig load_checked(const std::string& path, std::optional<std::uint64_t> seed,
    std::optional<std::uint64_t> ticks)
{
    auto config = load_config(path);
    if (seed)
        config.seed = *seed;
    if (ticks)
        config.ticks = *ticks;
    init_world(config);
    for (const auto& w : config_warnings(config))
        std::cerr << "warning: " << w << "\n";
    return config;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
    std::optional<std::uint64_t> ticks, const std::string& out_dir)
{
    ScenarioConfig config;
    try
    {
        config = load_checked(config_path, seed, ticks);
    }
    catch (const Error& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    Simulation sim{config};
    sim.advance(config.ticks);
    write_run_outputs(sim, out_dir);
    std::cout << "ran " << config.ticks << " ticks: " << sim.world().agents.size() << " agents, "
              << sim.world().tokens.size() << " NFTs sold, state "
              << hex(state_hash(sim.world())) << "\n";
    return kExitOk;
}

Genome read_genome_arg(const std::string& arg)
{
    if (!arg.empty() && arg.front() == '{')
        return json_to_genome(arg);
    std::ifstream in{arg, std::ios::binary};
    if (!in)
        throw Error{ErrorCode::MalformedGenome, "cannot open genome file '" + arg + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return json_to_genome(ss.str());
}

int cmd_render(const std::string& genome_arg, const std::string& out, bool fan)
{
    Genome genome;
    try
    {
        genome = read_genome_arg(genome_arg);
    }
    catch (const Error& e)
    {
        std::cerr << "genome error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!fan)
    {
        write_text_file(out, render_genome_svg(genome));
        return kExitOk;
    }

    fs::create_directories(out);
    write_text_file(fs::path{out} / "parent.svg", render_genome_svg(genome));
    const auto mutants = mutation_fan(genome);
    for (const auto& m : mutants)
    {
        std::size_t gene = 0;
        while (get_gene(m, gene) == get_gene(genome, gene))
            ++gene;
        const bool up = get_gene(m, gene) > get_gene(genome, gene);
        const auto name = "mutant_" + std::string{gene_name(gene)} + (up ? "_inc" : "_dec") + ".svg";
        write_text_file(fs::path{out} / name, render_genome_svg(m));
    }
    std::cout << "wrote parent + " << mutants.size() << " mutants to " << out << "\n";
    return kExitOk;
}

int cmd_serve(const std::string& config_path, const std::string& host, int port)
{
    ScenarioConfig config;
    try
    {
        config = load_checked(config_path, std::nullopt, std::nullopt);
    }
    catch (const Error& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    Gateway gateway{config};
    HttpServer server{gateway};
    const int bound = server.bind(host, port);
    if (bound < 0)
    {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return kExitFailure;
    }
    std::cout << "serving on http://" << host << ":" << bound << "/api/agents" << std::endl;
    server.listen(config.serve.tick_interval_ms);
    return kExitOk;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"evochain: self-replicating NFT agents on a minimal account ledger"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> ticks;
    auto* run = app.add_subcommand("run", "Headless simulation run");
    run->add_option("--config", config_path, "Scenario file")->required();
    run->add_option("--seed", seed, "Override scenario seed");
    run->add_option("--ticks", ticks, "Override scenario tick count");
    run->add_option("--out", out_dir, "Output directory")->required();

    std::string genome_arg;
    std::string render_out;
    bool fan = false;
    auto* render = app.add_subcommand("render", "Render a genome's phenotype as SVG");
    render->add_option("--genome", genome_arg, "Genome JSON text or path to a JSON file")->required();
    render->add_option("-o,--out", render_out, "Output SVG file (directory with --fan)")->required();
    render->add_flag("--fan", fan, "Also write every distinct one-step mutant");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON API over a live world");
    serve->add_option("--config", config_path, "Scenario file")->required();
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--port", port, "Port (0 picks a free one)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (*run)
            return cmd_run(config_path, seed, ticks, out_dir);
        if (*render)
            return cmd_render(genome_arg, render_out, fan);
        return cmd_serve(config_path, host, port);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
