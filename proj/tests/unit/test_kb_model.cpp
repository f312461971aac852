#include "fixtures.hpp"

#include "axsel/error.hpp"
#include "axsel/tptp.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace axsel;

namespace {

std::set<std::string> names(const KnowledgeBase& kb, const Axiom& axiom) {
    std::set<std::string> out;
    for (SymbolId s : axiom.symbols) out.insert(kb.symbol_name(s));
    return out;
}

}  // namespace

TEST(ParseKb, SingleAxiom) {
    const auto kb = parse_kb("fof(a1, axiom, ![X]: (dog(X) => animal(X))).");
    ASSERT_EQ(kb.size(), 1u);
    EXPECT_EQ(kb.axiom(0).id, "a1");
    EXPECT_EQ(names(kb, kb.axiom(0)), (std::set<std::string>{"dog", "animal"}));
}

TEST(ParseKb, EmptyStream) {
    EXPECT_EQ(parse_kb("").size(), 0u);
    EXPECT_EQ(parse_kb("% only a comment\n/* and a block */\n").size(), 0u);
}

TEST(ParseKb, CarnivoreAxiom) {
    const auto kb = load_kb(fixtures::data_dir() / "carnivore.p");
    ASSERT_EQ(kb.size(), 1u);
    EXPECT_EQ(names(kb, kb.axiom(0)),
              (std::set<std::string>{"instance", "carnivore", "eating", "agent", "patient", "animal"}));
}

TEST(ParseKb, SourceOrderAndIndex) {
    const auto kb = parse_kb(
        "fof(b, axiom, p(a)).\n"
        "fof(a, axiom, q(a) | p(b)).\n"
        "fof(c, hypothesis, ~r).\n");
    ASSERT_EQ(kb.size(), 3u);
    EXPECT_EQ(kb.axiom(0).id, "b");
    EXPECT_EQ(kb.axiom(1).id, "a");
    EXPECT_EQ(kb.axiom(2).id, "c");
    const auto p = kb.find_symbol("p");
    ASSERT_TRUE(p);
    EXPECT_EQ(std::vector<AxiomIndex>(kb.axioms_with(*p).begin(), kb.axioms_with(*p).end()),
              (std::vector<AxiomIndex>{0, 1}));
    EXPECT_EQ(kb.find_axiom("a"), AxiomIndex{1});
    EXPECT_FALSE(kb.find_axiom("zzz"));
}

TEST(ParseKb, Errors) {
    EXPECT_THROW(parse_kb("fof(a, axiom, p).\nfof(a, axiom, q)."), DuplicateAxiomId);
    EXPECT_THROW(parse_kb("fof(g, conjecture, p)."), UnexpectedConjecture);
    EXPECT_THROW(parse_kb("thf(a, axiom, p)."), UnsupportedConstruct);
    EXPECT_THROW(parse_kb("tff(a, axiom, p)."), UnsupportedConstruct);
    try {
        parse_kb("fof(a, axiom, p).\nfof(b, axiom, (p & )).");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 1u);
    }
}

TEST(ParseKb, EqualityAndTruthAreNotSymbols) {
    const auto kb = parse_kb("fof(a, axiom, ![X]: (f(X) = X & $true & X != c)).");
    EXPECT_EQ(names(kb, kb.axiom(0)), (std::set<std::string>{"f", "c"}));
}

TEST(ParseKb, IncludesOneLevel) {
    const auto dir = fixtures::fresh_temp_dir("include");
    std::ofstream(dir / "part.ax") << "fof(x1, axiom, p(a)).\nfof(x2, axiom, q(b)).\n";
    std::ofstream(dir / "main.p") << "include('part.ax', [x2]).\nfof(m, axiom, r).\n";
    const auto kb = load_kb(dir / "main.p");
    ASSERT_EQ(kb.size(), 2u);
    EXPECT_EQ(kb.axiom(0).id, "x2");
    EXPECT_EQ(kb.axiom(1).id, "m");
    EXPECT_THROW(parse_kb("include('part.ax')."), UnsupportedConstruct);
    std::filesystem::remove_all(dir);
}

TEST(ParseGoal, Examples) {
    const auto g = parse_goal("fof(g, conjecture, p(a)).");
    EXPECT_TRUE(g.premises.empty());
    EXPECT_EQ(g.symbols, (std::vector<std::string>{"a", "p"}));

    const auto h = parse_goal("fof(f1, axiom, q(b)).\nfof(g, conjecture, p(a)).");
    EXPECT_EQ(h.premises.size(), 1u);
    EXPECT_EQ(h.symbols, (std::vector<std::string>{"a", "b", "p", "q"}));

    const auto frat = parse_goal("fof(g, conjecture, ![X]: (tulip(X) & daisy(X) & vase(X))).");
    EXPECT_EQ(frat.symbols, (std::vector<std::string>{"daisy", "tulip", "vase"}));
}

TEST(ParseGoal, Errors) {
    EXPECT_THROW(parse_goal("fof(a, axiom, p)."), NoConjecture);
    EXPECT_THROW(parse_goal("fof(g, conjecture, p).\nfof(h, conjecture, q)."), MultipleConjectures);
    EXPECT_THROW(parse_goal("fof(g, conjecture, p"), SyntaxError);
}

TEST(SymbolsOf, Examples) {
    const auto x = Term::variable("X");
    const auto forall_or = Formula::quantified(
        Quantifier::forall, {"X"},
        Formula::binary(Connective::disjunction, Formula::atom("p", {x}), Formula::atom("q", {x})));
    EXPECT_EQ(symbols_of(forall_or), (std::set<std::string>{"p", "q"}));

    const auto nested = Formula::atom("p", {Term::function("f", {Term::function("a")}), x});
    EXPECT_EQ(symbols_of(nested), (std::set<std::string>{"p", "f", "a"}));
}

TEST(SymbolsOf, StructureIsIgnored) {
    const auto a = parse_goal("fof(g, conjecture, ![X]: (animal(X) & fluffy(X))).");
    const auto b = parse_goal("fof(g, conjecture, ![X]: (animal(X) | fluffy(X))).");
    EXPECT_EQ(a.symbols, b.symbols);

    std::mt19937_64 rng(7);
    const std::vector<Connective> ops{Connective::conjunction, Connective::disjunction, Connective::implication,
                                      Connective::equivalence, Connective::nand, Connective::exclusive_or};
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    for (int round = 0; round < 200; ++round) {
        std::vector<Formula> atoms;
        for (int i = 0; i < 5; ++i) atoms.push_back(Formula::atom("p" + std::to_string(rng() % 7), {Term::variable("X")}));
        auto build = [&] {
            Formula f = atoms[0];
            for (std::size_t i = 1; i < atoms.size(); ++i) f = Formula::binary(ops[pick(rng)], f, atoms[i]);
            return f;
        };
        EXPECT_EQ(symbols_of(build()), symbols_of(Formula::negation(build())));
    }
}

TEST(RoundTrip, SerializeAndReparse) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const auto sets = fixtures::random_symbol_sets(rng, 20, 12);
        const auto kb = fixtures::kb_from_sets(sets);
        std::ostringstream out;
        write_tptp(out, kb);
        const auto again = parse_kb(out.str());
        ASSERT_EQ(again.size(), kb.size());
        for (AxiomIndex a = 0; a < kb.size(); ++a) {
            EXPECT_EQ(again.axiom(a).id, kb.axiom(a).id);
            EXPECT_EQ(names(again, again.axiom(a)), names(kb, kb.axiom(a)));
            EXPECT_EQ(again.axiom(a).formula, kb.axiom(a).formula);
        }
    }
}

TEST(RoundTrip, ParsedTextWithQuotedNames) {
    const std::string text =
        "fof('odd name', axiom, ![X, Y]: (('Big'(X) <=> ~ q(Y, \"distinct\")) <~> (r(X) <= s(c__Foo)))).\n"
        "fof(n2, axiom, ?[Z]: (p(Z) ~| q(Z, 'x y'))).\n";
    const auto kb = parse_kb(text);
    std::ostringstream out;
    write_tptp(out, kb);
    const auto again = parse_kb(out.str());
    ASSERT_EQ(again.size(), 2u);
    for (AxiomIndex a = 0; a < 2; ++a) {
        EXPECT_EQ(again.axiom(a).id, kb.axiom(a).id);
        EXPECT_EQ(again.axiom(a).formula, kb.axiom(a).formula);
        EXPECT_EQ(names(again, again.axiom(a)), names(kb, kb.axiom(a)));
    }
    EXPECT_EQ(kb.axiom(0).id, "odd name");
}

TEST(KnowledgeBase, IndexIsInverseOfSymbolSets) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
        const auto kb = fixtures::kb_from_sets(fixtures::random_symbol_sets(rng, 30, 15));
        for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
            const auto with = kb.axioms_with(s);
            EXPECT_GE(with.size(), 1u);
            for (AxiomIndex a = 0; a < kb.size(); ++a) {
                const auto& syms = kb.axiom(a).symbols;
                const bool contains = std::binary_search(syms.begin(), syms.end(), s);
                const bool listed = std::find(with.begin(), with.end(), a) != with.end();
                EXPECT_EQ(contains, listed);
            }
        }
    }
}
