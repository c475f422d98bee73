// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "serialize.hpp"
#include "world.hpp"
#include <json.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evochain
{
struct PhyloNode
{
    Address address;
    std::optional<Address> parent;
    std::uint64_t generation = 0;
    std::uint64_t born_at = 0;
    Genome genome;
    /// Balance at or above the replication threshold; otherwise the agent is stalled.
    bool active = false;

    friend bool operator==(const PhyloNode&, const PhyloNode&) = default;
};

/// Replication lineage. Nodes are in birth order; edges are (parent index, child index)
/// in child birth order.
struct PhyloTree
{
    std::vector<PhyloNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    [[nodiscard]] std::size_t root_count() const noexcept { return nodes.size() - edges.size(); }

    friend bool operator==(const PhyloTree&, const PhyloTree&) = default;
};

inline PhyloTree build_tree(const WorldState& world)
{
    PhyloTree tree;
    std::map<Address, std::size_t> index;
    const Wei threshold = world.params.econ.replication_threshold();
    for (const auto& addr : world.birth_order)
    {
        const auto& agent = world.agents.at(addr);
        index.emplace(addr, tree.nodes.size());
        if (agent.parent)
            tree.edges.emplace_back(index.at(*agent.parent), tree.nodes.size());
        tree.nodes.push_back({addr, agent.parent, agent.generation, agent.born_at, agent.genome,
            world.balance_of(addr) >= threshold});
    }
    return tree;
}

/// Graphviz digraph; nodes in birth order, one edge per replication.
inline std::string export_tree_dot(const PhyloTree& tree)
{
    std::string out = "digraph phylogeny {\n";
    for (const auto& n : tree.nodes)
    {
        out += "  \"" + n.address.short_hex() + "\" [label=\"gen " +
               std::to_string(n.generation) + " @tick " + std::to_string(n.born_at) + "\"];\n";
    }
    for (const auto& [p, c] : tree.edges)
    {
        out += "  \"" + tree.nodes[p].address.short_hex() + "\" -> \"" +
               tree.nodes[c].address.short_hex() + "\";\n";
    }
    out += "}\n";
    return out;
}

namespace detail
{
inline void newick_node(const PhyloTree& tree,
    const std::vector<std::vector<std::size_t>>& children, std::size_t node, std::string& out)
{
    const auto& kids = children[node];
    if (!kids.empty())
    {
        out += '(';
        for (std::size_t i = 0; i < kids.size(); ++i)
        {
            if (i != 0)
                out += ',';
            newick_node(tree, children, kids[i], out);
            out += ':' +
                   std::to_string(tree.nodes[kids[i]].born_at - tree.nodes[node].born_at);
        }
        out += ')';
    }
    out += tree.nodes[node].address.short_hex();
}
}  // namespace detail

/// Newick string with branch lengths in ticks. Only single-root trees are representable.
inline std::string export_tree_newick(const PhyloTree& tree)
{
    if (tree.root_count() != 1)
    {
        throw Error{ErrorCode::MultiRootForest,
            std::to_string(tree.root_count()) + " roots; Newick needs exactly one"};
    }
    std::vector<std::vector<std::size_t>> children(tree.nodes.size());
    for (const auto& [p, c] : tree.edges)
        children[p].push_back(c);
    std::size_t root = 0;
    while (tree.nodes[root].parent)
        ++root;
    std::string out;
    detail::newick_node(tree, children, root, out);
    out += ";\n";
    return out;
}

inline nlohmann::json tree_to_json(const PhyloTree& tree)
{
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : tree.nodes)
    {
        j["nodes"].push_back({{"address", n.address.hex()},
            {"parent", n.parent ? nlohmann::json(n.parent->hex()) : nlohmann::json(nullptr)},
            {"generation", n.generation}, {"born_at", n.born_at}, {"genome", genome_json(n.genome)},
            {"status", n.active ? "active" : "stalled"}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& [p, c] : tree.edges)
        j["edges"].push_back({p, c});
    return j;
}
}  // namespace evochain
