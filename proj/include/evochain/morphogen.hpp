// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "genome.hpp"
#include "hash.hpp"
#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace evochain
{
/// One stroke of a phenotype. y grows downward.
struct Segment
{
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;
    int width = 1;
    Rgb color{};

    friend constexpr bool operator==(const Segment&, const Segment&) noexcept = default;
};

/// Developed phenotype: segments in depth-first order, minus-direction child first.
struct Drawing
{
    std::vector<Segment> segments;
};

struct BoundingBox
{
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;

    [[nodiscard]] int width() const noexcept { return max_x - min_x; }
    [[nodiscard]] int height() const noexcept { return max_y - min_y; }
    [[nodiscard]] std::int64_t area() const noexcept
    {
        return static_cast<std::int64_t>(width()) * height();
    }
};

namespace detail
{
struct DirectionTable
{
    std::array<int, 8> dx;
    std::array<int, 8> dy;
};

// dx is antisymmetric and dy symmetric under dir -> (8 - dir) mod 8, which makes every
// drawing mirror-symmetric about x = 0.
constexpr DirectionTable direction_table(const Genome& g) noexcept
{
    const auto& s = g.shape;
    return {
        {0, s[0], s[1], s[2], 0, -s[2], -s[1], -s[0]},
        {-s[3], -s[4], -s[5], s[6], s[7], s[6], -s[5], -s[4]},
    };
}

inline void branch(const Genome& g, const DirectionTable& t, int x, int y, int dir, int depth,
    std::vector<Segment>& out)
{
    const int d = ((dir % 8) + 8) % 8;
    const int x2 = x + depth * t.dx[d];
    const int y2 = y + depth * t.dy[d];
    const int width = (g.thickness * depth + g.depth - 1) / g.depth;
    out.push_back({x, y, x2, y2, width, g.color});
    if (depth > 1)
    {
        branch(g, t, x2, y2, dir - 1, depth - 1, out);
        branch(g, t, x2, y2, dir + 1, depth - 1, out);
    }
}
}  // namespace detail

/// Grows the recursive branching phenotype of a valid genome. Pure.
inline Drawing develop(const Genome& genome)
{
    Drawing drawing;
    drawing.segments.reserve((std::size_t{1} << genome.depth) - 1);
    detail::branch(genome, detail::direction_table(genome), 0, 0, 0, genome.depth,
        drawing.segments);
    return drawing;
}

/// Integer bounding box over all segment endpoints. Drawing must be non-empty.
inline BoundingBox bounding_box(const Drawing& drawing)
{
    if (drawing.segments.empty())
        throw Error{ErrorCode::EmptyDrawing, "drawing has no segments"};
    const auto& first = drawing.segments.front();
    BoundingBox box{first.x1, first.y1, first.x1, first.y1};
    for (const auto& s : drawing.segments)
    {
        box.min_x = std::min({box.min_x, s.x1, s.x2});
        box.max_x = std::max({box.max_x, s.x1, s.x2});
        box.min_y = std::min({box.min_y, s.y1, s.y2});
        box.max_y = std::max({box.max_y, s.y1, s.y2});
    }
    return box;
}

/// Serializes a drawing as a byte-deterministic SVG document.
///
/// The viewBox is the endpoint bounding box grown on every side by
/// max(1, ceil(max(width, height) / 20)). One <line> per segment, in drawing order.
inline std::string render_svg(const Drawing& drawing)
{
    const auto box = bounding_box(drawing);
    const int extent = std::max(box.width(), box.height());
    const int margin = std::max(1, (extent + 19) / 20);

    std::string out;
    out.reserve(64 + drawing.segments.size() * 112);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += std::to_string(box.min_x - margin) + ' ' + std::to_string(box.min_y - margin) + ' ' +
           std::to_string(box.width() + 2 * margin) + ' ' +
           std::to_string(box.height() + 2 * margin) + "\">\n";
    for (const auto& s : drawing.segments)
    {
        out += "<line x1=\"" + std::to_string(s.x1) + "\" y1=\"" + std::to_string(s.y1) +
               "\" x2=\"" + std::to_string(s.x2) + "\" y2=\"" + std::to_string(s.y2) +
               "\" stroke=\"rgb(" + std::to_string(s.color.r) + ',' +
               std::to_string(s.color.g) + ',' + std::to_string(s.color.b) +
               ")\" stroke-width=\"" + std::to_string(s.width) +
               "\" stroke-linecap=\"round\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

inline std::string render_genome_svg(const Genome& genome)
{
    return render_svg(develop(genome));
}

/// Content hash of a genome's rendered phenotype, as stored on minted tokens.
inline Hash256 phenotype_hash(const Genome& genome)
{
    return sha256(render_genome_svg(genome));
}
}  // namespace evochain
