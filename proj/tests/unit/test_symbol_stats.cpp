#include "fixtures.hpp"

#include "axsel/error.hpp"
#include "axsel/symbol_stats.hpp"
#include "axsel/tptp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

using namespace axsel;

TEST(SymbolStats, IdfExamples) {
    oracle::SymbolSets sets(10, std::set<std::string>{"everywhere"});
    sets[3].insert("rare");
    const auto kb = fixtures::kb_from_sets(sets);
    const auto stats = compute_stats(kb);
    EXPECT_EQ(stats.kb_size, 10u);
    const auto every = *kb.find_symbol("everywhere");
    const auto rare = *kb.find_symbol("rare");
    EXPECT_EQ(stats.occ[every], 10u);
    EXPECT_EQ(stats.idf[every], 0.0);
    EXPECT_EQ(stats.occ[rare], 1u);
    EXPECT_NEAR(stats.idf[rare], 2.302585, 1e-6);
}

TEST(SymbolStats, EmptyKb) { EXPECT_THROW(compute_stats(KnowledgeBase{}), EmptyKnowledgeBase); }

TEST(SymbolStats, MultiplicityInsideAnAxiomIsIgnored) {
    const auto kb = parse_kb("fof(a, axiom, p(f(f(f(c))))).\nfof(b, axiom, q).");
    const auto stats = compute_stats(kb);
    EXPECT_EQ(stats.occ[*kb.find_symbol("f")], 1u);
}

TEST(MeanIdf, Examples) {
    const auto all = fixtures::kb_from_sets({{"p", "q"}, {"p", "q"}});
    EXPECT_EQ(mean_idf(compute_stats(all)), 0.0);

    // p in 4 of 4 axioms (idf 0), q in 1 of 4 (idf ln 4)
    const auto kb = fixtures::kb_from_sets({{"p", "q"}, {"p"}, {"p"}, {"p"}});
    EXPECT_NEAR(mean_idf(compute_stats(kb)), std::log(4.0) / 2.0, 1e-15);
}

TEST(SymbolStats, MatchesIndependentRecount) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        const auto sets = fixtures::random_symbol_sets(rng, 20, 12);
        const auto kb = fixtures::kb_from_sets(sets);
        const auto stats = compute_stats(kb);
        const auto occ = oracle::occurrences(sets);
        ASSERT_EQ(stats.occ.size(), occ.size());
        double idf_sum = 0.0;
        std::size_t occ_total = 0;
        for (const auto& [name, count] : occ) {
            const auto s = *kb.find_symbol(name);
            EXPECT_EQ(stats.occ[s], count);
            const double idf = std::log(static_cast<double>(sets.size()) / static_cast<double>(count));
            EXPECT_NEAR(stats.idf[s], idf, 1e-12);
            EXPECT_EQ(stats.idf[s] == 0.0, count == sets.size());
            EXPECT_GE(stats.occ[s], 1u);
            EXPECT_LE(stats.occ[s], sets.size());
            idf_sum += idf;
            occ_total += count;
        }
        EXPECT_NEAR(mean_idf(stats), idf_sum / static_cast<double>(occ.size()), 1e-12);

        std::size_t symbol_total = 0;
        for (const auto& set : sets) symbol_total += set.size();
        EXPECT_EQ(occ_total, symbol_total);

        for (SymbolId a = 0; a < kb.symbol_count(); ++a) {
            for (SymbolId b = 0; b < kb.symbol_count(); ++b) {
                if (stats.occ[a] < stats.occ[b]) EXPECT_GT(stats.idf[a], stats.idf[b]);
            }
        }
    }
}

TEST(SymbolStats, LogBaseIsAUniformScale) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        const auto kb = fixtures::kb_from_sets(fixtures::random_symbol_sets(rng, 25, 10));
        const auto e = compute_stats(kb);
        const auto ten = compute_stats(kb, 10.0);
        for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
            if (e.idf[s] == 0.0) {
                EXPECT_EQ(ten.idf[s], 0.0);
            } else {
                EXPECT_NEAR(e.idf[s] / ten.idf[s], std::log(10.0), 1e-12);
            }
        }
    }
}

TEST(SymbolStats, TsvSortedByDescendingOcc) {
    const auto kb = fixtures::kb_from_sets({{"b", "a"}, {"a"}, {"c", "a"}, {"c"}});
    std::ostringstream out;
    write_stats_tsv(out, kb, compute_stats(kb));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "symbol\tocc\tidf");
    std::vector<std::string> order;
    while (std::getline(in, line)) order.push_back(line.substr(0, line.find('\t')));
    EXPECT_EQ(order, (std::vector<std::string>{"a", "c", "b"}));
}
