#include "fixtures.hpp"

#include "axsel/error.hpp"
#include "axsel/tptp.hpp"
#include "axsel/vector_select.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

using namespace axsel;

namespace {

struct Instance {
    oracle::SymbolSets sets;
    KnowledgeBase kb;
    SymbolStats stats;
    fixtures::RandomEmbedding emb;
    EmbeddingStore store;
    std::map<std::string, std::string> forward;
    SymbolMapping mapping;
};

Instance random_instance(std::mt19937_64& rng, std::size_t max_axioms = 30, std::size_t symbols = 14) {
    Instance in;
    in.sets = fixtures::random_symbol_sets(rng, max_axioms, symbols);
    // occasionally force a symbol into every axiom so zero-idf fallbacks show up
    if (rng() % 3 == 0) {
        for (auto& s : in.sets) s.insert("s0");
    }
    in.kb = fixtures::kb_from_sets(in.sets);
    in.stats = compute_stats(in.kb);
    std::vector<std::string> vocab;
    for (int i = 0; i < 9; ++i) vocab.push_back("t" + std::to_string(i));
    in.emb = fixtures::random_embedding(rng, vocab, 4, rng() % 2 == 0);
    in.store = in.emb.store();
    in.forward = fixtures::random_forward(rng, in.sets, vocab, 0.6);
    in.mapping = fixtures::mapping_from(in.kb, in.store, in.forward);
    return in;
}

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(VectorizeKb, SingleMappedSymbol) {
    const auto kb = fixtures::kb_from_sets({{"dog", "rock"}, {"rock"}});
    const auto store = EmbeddingStore::from_rows({{"dog", {0.5, 2.0}}});
    const auto idx = vectorize_kb(kb, compute_stats(kb), store, build_mapping(kb, store, {}));
    EXPECT_EQ(to_vec(idx.vector(0)), (std::vector<double>{0.5, 2.0}));
    EXPECT_FALSE(idx.present(1));
    EXPECT_TRUE(idx.vector(1).empty());
    EXPECT_EQ(idx.absent_count(), 1u);
    EXPECT_EQ(idx.present_count(), 1u);
}

TEST(VectorizeKb, ZeroIdfFallsBackToUnweightedMean) {
    const auto kb = fixtures::kb_from_sets({{"a", "b"}, {"a", "b", "c"}});
    const auto store = EmbeddingStore::from_rows({{"a", {1.0, 0.0}}, {"b", {0.0, 3.0}}});
    const auto idx = vectorize_kb(kb, compute_stats(kb), store, build_mapping(kb, store, {}));
    EXPECT_TRUE(idx.used_fallback(0));
    EXPECT_EQ(to_vec(idx.vector(0)), (std::vector<double>{0.5, 1.5}));
}

TEST(VectorizeKb, CancellingVectorsAreAbsent) {
    const auto kb = fixtures::kb_from_sets({{"a", "b"}, {"c"}, {"c"}});
    const auto store = EmbeddingStore::from_rows({{"a", {1.0, -1.0}}, {"b", {-1.0, 1.0}}});
    const auto idx = vectorize_kb(kb, compute_stats(kb), store, build_mapping(kb, store, {}));
    EXPECT_FALSE(idx.present(0));
}

TEST(VectorizeKb, MatchesIndependentFormula) {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 300; ++round) {
        const auto in = random_instance(rng);
        const auto idx = vectorize_kb(in.kb, in.stats, in.store, in.mapping);
        ASSERT_EQ(idx.size(), in.kb.size());
        std::size_t absent = 0;
        for (AxiomIndex a = 0; a < in.kb.size(); ++a) {
            const auto want = oracle::axiom_vector(in.sets, a, in.forward, in.emb.vocabulary, in.emb.rows);
            ASSERT_EQ(idx.present(a), want.vector.has_value()) << "round " << round << " axiom " << a;
            if (!want.vector) {
                ++absent;
                continue;
            }
            EXPECT_EQ(idx.used_fallback(a), want.fallback);
            const auto got = idx.vector(a);
            for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], (*want.vector)[i], 1e-9);
        }
        EXPECT_EQ(idx.absent_count(), absent);
    }
}

TEST(VectorizeKb, IdenticalSymbolSetsGiveIdenticalVectors) {
    const auto kb = parse_kb(
        "fof(a, axiom, ![X]: (animal(X) & fluffy(X))).\n"
        "fof(b, axiom, ![X]: (animal(X) | fluffy(X))).\n"
        "fof(c, axiom, rock(r)).\n");
    const auto store = EmbeddingStore::from_rows({{"animal", {1, 2}}, {"fluffy", {3, -1}}});
    const auto idx = vectorize_kb(kb, compute_stats(kb), store, build_mapping(kb, store, {}));
    EXPECT_EQ(to_vec(idx.vector(0)), to_vec(idx.vector(1)));
}

TEST(VectorizeGoal, Examples) {
    const auto kb = fixtures::kb_from_sets({{"dog", "rock"}, {"rock"}, {"cat"}});
    const auto store = EmbeddingStore::from_rows({{"dog", {1, 0}}, {"cat", {0, 1}}, {"tulip", {1, 1}}});
    const auto stats = compute_stats(kb);
    const auto mapping = build_mapping(kb, store, {});
    EXPECT_TRUE(vectorize_goal(fixtures::goal_from_symbols({"rock"}), kb, stats, store, mapping).absent());
    EXPECT_TRUE(vectorize_goal(fixtures::goal_from_symbols({"zebra"}), kb, stats, store, mapping).absent());

    const auto single = vectorize_goal(fixtures::goal_from_symbols({"dog"}), kb, stats, store, mapping);
    EXPECT_EQ(*single.vector, (std::vector<double>{1, 0}));

    // tulip is unknown to the KB: weight mean_idf; dog: its own idf ln 3
    const auto mixed = vectorize_goal(fixtures::goal_from_symbols({"dog", "tulip"}), kb, stats, store, mapping);
    EXPECT_EQ(mixed.unknown_symbol_count, 1u);
    const double w_dog = std::log(3.0);
    const double w_unknown = mean_idf(stats);
    EXPECT_NEAR((*mixed.vector)[0], (w_dog * 1 + w_unknown * 1) / (w_dog + w_unknown), 1e-12);
    EXPECT_NEAR((*mixed.vector)[1], (w_unknown * 1) / (w_dog + w_unknown), 1e-12);
}

TEST(VectorizeGoal, UnknownWordsOnly) {
    const auto kb = fixtures::kb_from_sets({{"c__Flower", "c__Plant"}, {"c__Plant"}, {"c__Vase"}});
    const auto store = EmbeddingStore::from_rows(
        {{"flower", {1, 0, 0}}, {"tulip", {0.9, 0.1, 0}}, {"daisy", {0.8, 0.2, 0}}, {"vase", {0.1, 0, 1}}});
    const auto stats = compute_stats(kb);
    const auto goal = fixtures::goal_from_symbols({"tulip", "daisy", "vase"});
    const auto gv = vectorize_goal(goal, kb, stats, store, build_mapping(kb, store, {}));
    EXPECT_EQ(gv.unknown_symbol_count, 3u);
    ASSERT_FALSE(gv.absent());
    EXPECT_NEAR((*gv.vector)[0], (0.9 + 0.8 + 0.1) / 3.0, 1e-12);
}

TEST(MostSimilar, ExamplesAndErrors) {
    const auto kb = fixtures::kb_from_sets({{"a"}, {"b"}, {"c"}, {"zzz"}});
    const auto store = EmbeddingStore::from_rows({{"a", {1, 0}}, {"b", {1, 1}}, {"c", {0, 1}}});
    const auto stats = compute_stats(kb);
    const auto mapping = build_mapping(kb, store, {});
    const auto idx = vectorize_kb(kb, stats, store, mapping);
    const auto gv = vectorize_goal(fixtures::goal_from_symbols({"b"}), kb, stats, store, mapping);
    const auto all = most_similar(idx, gv, 3);
    EXPECT_EQ(all.ids(kb), (std::vector<std::string>{"a2", "a1", "a3"}));
    EXPECT_DOUBLE_EQ(*all.axioms[0].score, 1.0);
    EXPECT_EQ(all.strategy, "vector");
    EXPECT_THROW(most_similar(idx, gv, 4), KTooLarge);
    EXPECT_THROW(most_similar(idx, GoalVector{}, 1), GoalNotVectorizable);
    EXPECT_TRUE(most_similar(idx, gv, 0).empty());
}

TEST(MostSimilarProperty, MatchesExhaustiveOracle) {
    std::mt19937_64 rng(66);
    for (int round = 0; round < 300; ++round) {
        const auto in = random_instance(rng, 40);
        const auto idx = vectorize_kb(in.kb, in.stats, in.store, in.mapping);
        if (idx.present_count() == 0) continue;
        const auto gv = vectorize_goal(fixtures::goal_from_symbols(fixtures::random_goal(rng, 14, 4)), in.kb, in.stats,
                                       in.store, in.mapping);
        if (gv.absent()) continue;
        oracle::Vectors rows;
        std::vector<AxiomIndex> axiom_of;
        for (AxiomIndex a = 0; a < in.kb.size(); ++a) {
            if (!idx.present(a)) continue;
            rows.push_back(to_vec(idx.vector(a)));
            axiom_of.push_back(a);
        }
        std::vector<AxiomIndex> previous;
        for (std::size_t k = 0; k <= rows.size(); ++k) {
            const auto got = most_similar(idx, gv, k, 1 + round % 4);
            const auto want = oracle::top_k(rows, *gv.vector, k);
            ASSERT_EQ(got.size(), k);
            for (std::size_t i = 0; i < k; ++i) {
                EXPECT_EQ(got.axioms[i].axiom, axiom_of[want[i].first]);
                EXPECT_EQ(*got.axioms[i].score, want[i].second);
            }
            const auto ids = got.indices();
            EXPECT_TRUE(std::equal(previous.begin(), previous.end(), ids.begin()));
            previous = ids;
        }
    }
}

TEST(MostSimilarProperty, LogBaseInvariance) {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 100; ++round) {
        const auto in = random_instance(rng, 40);
        const auto ten = compute_stats(in.kb, 10.0);
        const auto a = vectorize_kb(in.kb, in.stats, in.store, in.mapping);
        const auto b = vectorize_kb(in.kb, ten, in.store, in.mapping);
        for (AxiomIndex ax = 0; ax < in.kb.size(); ++ax) {
            ASSERT_EQ(a.present(ax), b.present(ax));
            if (!a.present(ax)) continue;
            const auto va = a.vector(ax), vb = b.vector(ax);
            for (std::size_t i = 0; i < va.size(); ++i) EXPECT_NEAR(va[i], vb[i], 1e-9);
        }
    }
}

TEST(VbUnion, EqualsUnionOfComponents) {
    std::mt19937_64 rng(68);
    for (int round = 0; round < 200; ++round) {
        const auto in = random_instance(rng, 40);
        const auto idx = vectorize_kb(in.kb, in.stats, in.store, in.mapping);
        const auto goal = fixtures::goal_from_symbols(fixtures::random_goal(rng, 14, 3));
        const auto gv = vectorize_goal(goal, in.kb, in.stats, in.store, in.mapping);
        const auto triggers = build_trigger_index(in.kb, in.stats, 1.0);
        for (int depth = 1; depth <= 3; ++depth) {
            for (std::size_t k : {0u, 1u, 3u, 100u}) {
                const auto u = vb_union_sine(in.kb, goal, triggers, depth, idx, gv, k);
                const auto s = sine_select(in.kb, goal, triggers, depth);
                std::vector<AxiomIndex> v;
                if (!gv.absent()) v = most_similar(idx, gv, std::min(k, idx.present_count())).indices();

                std::vector<AxiomIndex> expected = s.indices();
                for (auto a : v) {
                    if (std::find(expected.begin(), expected.end(), a) == expected.end()) expected.push_back(a);
                }
                EXPECT_EQ(u.indices(), expected);
                const auto s_idx = s.indices();
                for (const auto& sel : u.axioms) {
                    const bool in_s = std::find(s_idx.begin(), s_idx.end(), sel.axiom) != s_idx.end();
                    const bool in_v = std::find(v.begin(), v.end(), sel.axiom) != v.end();
                    EXPECT_EQ(*sel.origin, in_s && in_v ? Origin::both : (in_s ? Origin::sine : Origin::vector));
                }
            }
        }
    }
}

TEST(VbUnion, DisjointComponents) {
    // SInE picks a1..a3 through p; vector part picks the four q-axioms
    const auto kb = fixtures::kb_from_sets({{"p"}, {"p"}, {"p"}, {"q1"}, {"q2"}, {"q3"}, {"q4"}, {"other"}});
    const auto store = EmbeddingStore::from_rows(
        {{"q1", {1, 0}}, {"q2", {0.9, 0.1}}, {"q3", {0.8, 0.2}}, {"q4", {0.7, 0.3}}, {"other", {0, 1}}, {"want", {1, 0.05}}});
    const auto stats = compute_stats(kb);
    const auto mapping = build_mapping(kb, store, {});
    const auto idx = vectorize_kb(kb, stats, store, mapping);
    const auto goal = fixtures::goal_from_symbols({"p", "want"});
    const auto gv = vectorize_goal(goal, kb, stats, store, mapping);
    const auto u = vb_union_sine(kb, goal, build_trigger_index(kb, stats, 1.0), 1, idx, gv, 4);
    EXPECT_EQ(u.size(), 7u);
    EXPECT_EQ(u.strategy, "vb-union");
}

TEST(VectorCache, SaveLoadAndReuse) {
    std::mt19937_64 rng(70);
    const auto in = random_instance(rng, 30);
    const auto dir = fixtures::fresh_temp_dir("cache");
    const auto first = cached_vectorize_kb(dir, in.kb, in.stats, in.store, in.mapping);
    const auto file = dir / ("vectors-" + cache_key(in.kb, in.store, in.mapping) + ".bin");
    ASSERT_TRUE(std::filesystem::exists(file));
    const auto second = cached_vectorize_kb(dir, in.kb, in.stats, in.store, in.mapping);
    ASSERT_EQ(first.size(), second.size());
    for (AxiomIndex a = 0; a < first.size(); ++a) {
        ASSERT_EQ(first.present(a), second.present(a));
        EXPECT_EQ(first.used_fallback(a), second.used_fallback(a));
        EXPECT_EQ(to_vec(first.vector(a)), to_vec(second.vector(a)));
    }

    std::ofstream(dir / "junk.bin") << "not a cache";
    EXPECT_THROW(KbVectorIndex::load(dir / "junk.bin"), IoError);

    const auto other_store = fixtures::random_embedding(rng, in.emb.vocabulary, 4, false).store();
    EXPECT_NE(cache_key(in.kb, other_store, in.mapping), cache_key(in.kb, in.store, in.mapping));
    std::filesystem::remove_all(dir);
}
