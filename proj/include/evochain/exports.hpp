// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "market.hpp"
#include "simulation.hpp"
#include <filesystem>
#include <fstream>
#include <string>

namespace evochain
{
inline void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out)
        throw std::runtime_error{"cannot write " + path.string()};
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

/// Writes a run's artifacts into `dir`:
///   snapshot.json    restorable snapshot
///   tree.dot         lineage, Graphviz
///   tree.nwk         lineage, Newick (single-root worlds only)
///   stats.csv        one row per tick
///   metadata.json    state hash, fill normalizer, config warnings
///   agents/<address>.svg  phenotype of every agent
inline void write_run_outputs(const Simulation& sim, const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir / "agents");
    write_text_file(dir / "snapshot.json", sim.snapshot());
    const auto tree = sim.tree();
    write_text_file(dir / "tree.dot", export_tree_dot(tree));
    if (tree.root_count() == 1)
        write_text_file(dir / "tree.nwk", export_tree_newick(tree));
    write_text_file(dir / "stats.csv", export_stats_csv(sim.stats()));

    nlohmann::json meta;
    meta["state_hash"] = hex(state_hash(sim.world()));
    meta["fill_normalizer"] = fill_normalizer();
    meta["tick"] = sim.world().tick;
    meta["agents"] = sim.world().agents.size();
    meta["warnings"] = config_warnings(sim.config());
    write_text_file(dir / "metadata.json", meta.dump(2) + "\n");

    for (const auto& [addr, agent] : sim.world().agents)
        write_text_file(dir / "agents" / (addr.hex() + ".svg"), render_genome_svg(agent.genome));
}
}  // namespace evochain
