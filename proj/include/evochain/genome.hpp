// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "random.hpp"
#include "types.hpp"
#include <json.hpp>
#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evochain
{
struct Rgb
{
    int r = 0;
    int g = 0;
    int b = 0;

    friend constexpr bool operator==(const Rgb&, const Rgb&) noexcept = default;
};

/// Heritable code of one agent.
///
/// Gene positions, in mutation-index order:
///   0..7   shape genes g1..g8, each in [-9, 9]
///   8      depth (recursion depth), [1, 8]
///   9..11  color red, green, blue, [0, 255]
///   12     thickness (root stroke width), [1, 8]
///   13     price, [0, 15]
struct Genome
{
    std::array<int, 8> shape{};
    int depth = 1;
    Rgb color{};
    int thickness = 1;
    int price = 0;

    friend constexpr bool operator==(const Genome&, const Genome&) noexcept = default;
};

inline constexpr std::size_t kGeneCount = 14;
inline constexpr std::size_t kDepthGene = 8;
inline constexpr std::size_t kPriceGene = 13;

struct GeneBounds
{
    int lo;
    int hi;
};

constexpr GeneBounds gene_bounds(std::size_t index) noexcept
{
    if (index < 8)
        return {-9, 9};
    switch (index)
    {
    case 8:
        return {1, 8};
    case 9:
    case 10:
    case 11:
        return {0, 255};
    case 12:
        return {1, 8};
    default:
        return {0, 15};
    }
}

constexpr std::string_view gene_name(std::size_t index) noexcept
{
    constexpr std::array<std::string_view, kGeneCount> names{"g1", "g2", "g3", "g4", "g5",
        "g6", "g7", "g8", "depth", "red", "green", "blue", "thickness", "price"};
    return index < kGeneCount ? names[index] : "?";
}

constexpr int get_gene(const Genome& g, std::size_t index) noexcept
{
    if (index < 8)
        return g.shape[index];
    switch (index)
    {
    case 8:
        return g.depth;
    case 9:
        return g.color.r;
    case 10:
        return g.color.g;
    case 11:
        return g.color.b;
    case 12:
        return g.thickness;
    default:
        return g.price;
    }
}

constexpr void set_gene(Genome& g, std::size_t index, int value) noexcept
{
    if (index < 8)
    {
        g.shape[index] = value;
        return;
    }
    switch (index)
    {
    case 8:
        g.depth = value;
        break;
    case 9:
        g.color.r = value;
        break;
    case 10:
        g.color.g = value;
        break;
    case 11:
        g.color.b = value;
        break;
    case 12:
        g.thickness = value;
        break;
    default:
        g.price = value;
        break;
    }
}

constexpr bool is_valid(const Genome& g) noexcept
{
    for (std::size_t i = 0; i < kGeneCount; ++i)
    {
        const auto [lo, hi] = gene_bounds(i);
        const int v = get_gene(g, i);
        if (v < lo || v > hi)
            return false;
    }
    return true;
}

inline void validate(const Genome& g)
{
    for (std::size_t i = 0; i < kGeneCount; ++i)
    {
        const auto [lo, hi] = gene_bounds(i);
        const int v = get_gene(g, i);
        if (v < lo || v > hi)
        {
            throw Error{ErrorCode::MalformedGenome, std::string{gene_name(i)} + "=" +
                                                        std::to_string(v) + " outside [" +
                                                        std::to_string(lo) + ", " +
                                                        std::to_string(hi) + "]"};
        }
    }
}

/// Moves one gene by `direction` (+1 or -1). A step that would leave the gene's range is
/// reflected, so the result always differs from the input in exactly this gene by 1.
constexpr Genome step_gene(Genome g, std::size_t index, int direction) noexcept
{
    const auto [lo, hi] = gene_bounds(index);
    const int v = get_gene(g, index);
    int next = v + direction;
    if (next < lo || next > hi)
        next = v - direction;
    set_gene(g, index, next);
    return g;
}

/// Single-gene point mutation.
///
/// Draw protocol (two draws, in order): gene index = uniform(14), then direction =
/// uniform(2) with 0 -> -1 and 1 -> +1.
template <UniformSource R>
Genome mutate(const Genome& g, R& rng)
{
    const auto index = static_cast<std::size_t>(rng.uniform(kGeneCount));
    const int direction = rng.uniform(2) == 0 ? -1 : +1;
    return step_gene(g, index, direction);
}

/// All distinct one-step mutants, in gene order with -1 before +1.
inline std::vector<Genome> mutation_fan(const Genome& g)
{
    std::vector<Genome> out;
    for (std::size_t i = 0; i < kGeneCount; ++i)
    {
        for (const int dir : {-1, +1})
        {
            const auto m = step_gene(g, i, dir);
            if (std::find(out.begin(), out.end(), m) == out.end())
                out.push_back(m);
        }
    }
    return out;
}

// Canonical genome JSON: {"shape":[...],"depth":d,"color":[r,g,b],"thickness":t,"price":p}

inline nlohmann::ordered_json genome_to_json_value(const Genome& g)
{
    nlohmann::ordered_json j;
    j["shape"] = g.shape;
    j["depth"] = g.depth;
    j["color"] = {g.color.r, g.color.g, g.color.b};
    j["thickness"] = g.thickness;
    j["price"] = g.price;
    return j;
}

inline std::string genome_to_json(const Genome& g)
{
    return genome_to_json_value(g).dump();
}

template <typename Json>
Genome genome_from_json_value(const Json& j)
{
    const auto fail = [](const std::string& why) {
        return Error{ErrorCode::MalformedGenome, why};
    };
    if (!j.is_object())
        throw fail("genome must be an object");
    for (const char* key : {"shape", "depth", "color", "thickness", "price"})
    {
        if (!j.contains(key))
            throw fail(std::string{"missing key '"} + key + "'");
    }
    if (j.size() != 5)
        throw fail("unexpected extra keys");

    const auto as_int = [&](const Json& v, const char* what) {
        if (!v.is_number_integer())
            throw fail(std::string{what} + " must be an integer");
        const auto x = v.template get<std::int64_t>();
        if (x < -1000000 || x > 1000000)
            throw fail(std::string{what} + " out of range");
        return static_cast<int>(x);
    };

    Genome g;
    const auto& shape = j.at("shape");
    if (!shape.is_array() || shape.size() != 8)
        throw fail("shape must be an array of 8 integers");
    for (std::size_t i = 0; i < 8; ++i)
        g.shape[i] = as_int(shape[i], "shape gene");

    const auto& color = j.at("color");
    if (!color.is_array() || color.size() != 3)
        throw fail("color must be an array of 3 integers");
    g.color = {as_int(color[0], "red"), as_int(color[1], "green"), as_int(color[2], "blue")};

    g.depth = as_int(j.at("depth"), "depth");
    g.thickness = as_int(j.at("thickness"), "thickness");
    g.price = as_int(j.at("price"), "price");
    validate(g);
    return g;
}

inline Genome json_to_genome(std::string_view text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw Error{ErrorCode::MalformedGenome, e.what()};
    }
    return genome_from_json_value(j);
}
}  // namespace evochain
