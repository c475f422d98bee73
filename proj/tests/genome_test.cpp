// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_utils.hpp"
#include <gtest/gtest.h>

using namespace evochain;
using namespace evochain::test;

namespace
{
std::size_t differing_genes(const Genome& a, const Genome& b)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < kGeneCount; ++i)
        n += get_gene(a, i) != get_gene(b, i);
    return n;
}

Genome interior_genome()
{
    Genome g;
    g.shape = {1, 2, 3, 4, -1, -2, -3, -4};
    g.depth = 4;
    g.color = {10, 20, 30};
    g.thickness = 3;
    g.price = 5;
    return g;
}

Genome all_at_bounds()
{
    Genome g;
    g.shape = {9, -9, 9, -9, 9, -9, 9, -9};
    g.depth = 8;
    g.color = {0, 255, 0};
    g.thickness = 1;
    g.price = 15;
    return g;
}
}  // namespace

TEST(genome, gene_layout)
{
    EXPECT_EQ(kGeneCount, 14u);
    for (std::size_t i = 0; i < 8; ++i)
        EXPECT_EQ(gene_bounds(i).lo, -9);
    EXPECT_EQ(gene_bounds(kDepthGene).lo, 1);
    EXPECT_EQ(gene_bounds(kDepthGene).hi, 8);
    EXPECT_EQ(gene_bounds(9).hi, 255);
    EXPECT_EQ(gene_bounds(12).hi, 8);
    EXPECT_EQ(gene_bounds(kPriceGene).hi, 15);

    Genome g;
    for (std::size_t i = 0; i < kGeneCount; ++i)
    {
        set_gene(g, i, gene_bounds(i).lo + static_cast<int>(i % 2));
        EXPECT_EQ(get_gene(g, i), gene_bounds(i).lo + static_cast<int>(i % 2));
    }
    EXPECT_TRUE(is_valid(g));
    g.thickness = 0;
    EXPECT_FALSE(is_valid(g));
    EXPECT_THROW(validate(g), Error);
}

TEST(genome, scripted_mutation_example)
{
    auto g = interior_genome();
    g.shape[2] = 2;
    ScriptedDraws draws{{2, 1}};
    const auto child = mutate(g, draws);
    EXPECT_EQ(draws.consumed, 2u);
    EXPECT_EQ(child.shape[2], 3);
    auto expected = g;
    expected.shape[2] = 3;
    EXPECT_EQ(child, expected);
}

TEST(genome, mutation_at_bound_reflects)
{
    auto g = interior_genome();
    g.depth = 8;
    ScriptedDraws up{{kDepthGene, 1}};
    EXPECT_EQ(mutate(g, up).depth, 7);

    g.depth = 1;
    ScriptedDraws down{{kDepthGene, 0}};
    EXPECT_EQ(mutate(g, down).depth, 2);

    g.color.r = 0;
    ScriptedDraws red{{9, 0}};
    EXPECT_EQ(mutate(g, red).color.r, 1);
}

TEST(genome, every_draw_pair_changes_one_gene_by_one)
{
    for (const auto& g : {interior_genome(), all_at_bounds()})
    {
        for (std::uint64_t gene = 0; gene < kGeneCount; ++gene)
        {
            for (std::uint64_t dir = 0; dir < 2; ++dir)
            {
                ScriptedDraws d{{gene, dir}};
                const auto m = mutate(g, d);
                EXPECT_TRUE(is_valid(m));
                EXPECT_EQ(differing_genes(g, m), 1u);
                EXPECT_EQ(std::abs(get_gene(m, gene) - get_gene(g, gene)), 1);
            }
        }
    }
}

TEST(genome, gene_selection_frequency)
{
    RandomStream rng{2024};
    const auto g = interior_genome();
    std::array<int, kGeneCount> counts{};
    constexpr int n = 10000;
    for (int i = 0; i < n; ++i)
    {
        const auto m = mutate(g, rng);
        for (std::size_t k = 0; k < kGeneCount; ++k)
        {
            if (get_gene(m, k) != get_gene(g, k))
                ++counts[k];
        }
    }
    for (const auto c : counts)
        EXPECT_NEAR(static_cast<double>(c) / n, 1.0 / kGeneCount, 0.02);
}

TEST(genome, mutation_fan_enumeration)
{
    // Oracle: every (gene, direction) pair yields a distinct mutant iff the gene is interior.
    const auto count_oracle = [](const Genome& g) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < kGeneCount; ++i)
        {
            const auto [lo, hi] = gene_bounds(i);
            const int v = get_gene(g, i);
            n += (v > lo && v < hi) ? 2 : 1;
        }
        return n;
    };
    const auto interior = interior_genome();
    EXPECT_EQ(mutation_fan(interior).size(), 2 * kGeneCount);
    EXPECT_EQ(mutation_fan(interior).size(), count_oracle(interior));
    EXPECT_EQ(mutation_fan(all_at_bounds()).size(), kGeneCount);
    EXPECT_EQ(mutation_fan(all_at_bounds()).size(), count_oracle(all_at_bounds()));

    const auto fan = mutation_fan(interior);
    EXPECT_EQ(fan[0].shape[0], interior.shape[0] - 1);
    EXPECT_EQ(fan[1].shape[0], interior.shape[0] + 1);
    for (const auto& m : fan)
        EXPECT_EQ(differing_genes(interior, m), 1u);
}

TEST(genome, json_round_trip)
{
    RandomStream rng{11};
    for (int i = 0; i < 200; ++i)
    {
        const auto g = random_genome(rng);
        EXPECT_EQ(json_to_genome(genome_to_json(g)), g);
    }
    EXPECT_EQ(genome_to_json(sample_genome()),
        R"({"shape":[2,3,-1,4,2,-2,1,3],"depth":4,"color":[40,120,200],"thickness":3,"price":2})");
}

TEST(genome, json_errors)
{
    const auto code_of = [](const std::string& text) {
        try
        {
            json_to_genome(text);
        }
        catch (const Error& e)
        {
            return e.code();
        }
        return ErrorCode::UnknownSession;
    };
    const auto malformed = ErrorCode::MalformedGenome;
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7],"depth":4,"color":[1,2,3],"thickness":3,"price":2})"), malformed);
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7,8],"depth":9,"color":[1,2,3],"thickness":3,"price":2})"), malformed);
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7,8],"depth":4,"color":[1,2,256],"thickness":3,"price":2})"), malformed);
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7,8],"depth":4,"color":[1,2,3],"thickness":3})"), malformed);
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7,8],"depth":4,"color":[1,2,3],"thickness":3,"price":2,"x":1})"), malformed);
    EXPECT_EQ(code_of(R"({"shape":[1,2,3,4,5,6,7,8.5],"depth":4,"color":[1,2,3],"thickness":3,"price":2})"), malformed);
    EXPECT_EQ(code_of("[1,2,3]"), malformed);
    EXPECT_EQ(code_of("{"), malformed);
}
