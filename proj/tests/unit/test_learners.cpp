#include <random>

#include "doctest.h"
#include "goldlab/errors.hpp"
#include "goldlab/learners.hpp"
#include "goldlab/monitors.hpp"
#include "support.hpp"

using namespace goldlab;
using goldlab::testing::bits;
using goldlab::testing::canonicalPrefix;

namespace {

bool same(const Hypothesis& h, const LangDescriptor& d) { return h.isExact() && equalExact(h.descriptor(), d); }

}  // namespace

TEST_SUITE("closed-algebra learners") {
    TEST_CASE("cofinite learner") {
        ScopedRegistry scope;
        const auto m = learners::cofinite();
        CHECK(same(m(Prefix{{60, true}, {2, false}}), LangDescriptor::cofinite({2})));
        CHECK(same(m(Prefix{}), LangDescriptor::naturals()));
        CHECK(same(m(Prefix{{1, false}, {4, false}}), LangDescriptor::cofinite({1, 4})));
    }

    TEST_CASE("split-family learner") {
        ScopedRegistry scope;
        const auto m = learners::splitFamily();
        CHECK(same(m(Prefix{{0, true}, {2, true}}), LangDescriptor::splitAll()));
        CHECK(same(m(Prefix{{0, true}, {3, true}}), LangDescriptor::split({0})));
        CHECK(bits(m(Prefix{{0, true}, {3, true}}).descriptor(), 8) == std::vector<bool>{1, 0, 0, 1, 0, 1, 0, 1});
        CHECK(same(m(Prefix{}), LangDescriptor::splitAll()));
    }

    TEST_CASE("evens learner with a detour through 2ℕ∪{1}") {
        ScopedRegistry scope;
        const auto m = learners::evensWMon();
        CHECK(same(m(Prefix{{0, true}, {1, false}}), LangDescriptor::evensPlusOne()));
        CHECK(same(m(Prefix{{0, true}, {1, false}, {2, true}}), LangDescriptor::evens()));
        CHECK(same(m(Prefix{}), LangDescriptor::evens()));
        CHECK(same(m(Prefix{{0, true}}), LangDescriptor::evens()));
    }

    TEST_CASE("evens pair learner follows 1 ∈ pos") {
        ScopedRegistry scope;
        const auto m = learners::evensPair();
        CHECK(same(m(Prefix{{1, true}}), LangDescriptor::evensPlusOne()));
        CHECK(same(m(Prefix{{1, true}, {2, true}}), LangDescriptor::evensPlusOne()));
        CHECK(same(m(Prefix{{0, true}, {1, false}, {2, true}}), LangDescriptor::evens()));
        for (const auto& l : {LangDescriptor::evens(), LangDescriptor::evensPlusOne()}) {
            const auto tr = runTrace(m, canonicalInformant(l), 20);
            CHECK(checkLim(tr, 0, Vacillation::finite(1), 100).passed());
        }
    }

    TEST_CASE("doubled-pair learner takes the least witness") {
        ScopedRegistry scope;
        const auto m = learners::doubledPair(LangDescriptor::evens());
        CHECK(same(m(Prefix{{2, false}, {3, true}}), LangDescriptor::doubledPair(LangDescriptor::evens(), 1)));
        CHECK(same(m(Prefix{}), LangDescriptor::doubledPair(LangDescriptor::evens(), std::nullopt)));
        CHECK(same(m(Prefix{{4, true}, {9, true}}), LangDescriptor::doubledPair(LangDescriptor::evens(), std::nullopt)));
        CHECK(same(m(Prefix{{10, false}, {11, true}, {2, false}, {3, true}}),
                   LangDescriptor::doubledPair(LangDescriptor::evens(), 1)));
    }

    TEST_CASE("pair distinguisher") {
        ScopedRegistry scope;
        const auto d = LangDescriptor::cofinite({1});
        const auto m = learners::pairDistinguisher(d);
        CHECK(same(m(Prefix{}), LangDescriptor::naturals()));
        CHECK(same(m(Prefix{{1, false}}), d));
        CHECK(same(m(Prefix{{0, true}}), LangDescriptor::naturals()));
    }

    TEST_CASE("enumeration learner picks the first consistent member") {
        ScopedRegistry scope;
        const auto m = learners::enumeration({LangDescriptor::evens(), LangDescriptor::cofinite({1})});
        CHECK(same(m(Prefix{{1, false}}), LangDescriptor::evens()));
        CHECK(same(m(Prefix{{2, false}, {1, false}}), LangDescriptor::finite({})));
        CHECK(same(m(Prefix{}), LangDescriptor::evens()));
        CHECK(same(m(Prefix{{3, true}}), LangDescriptor::cofinite({1})));
    }

    TEST_CASE("length threshold and cycling") {
        ScopedRegistry scope;
        const auto lt = learners::lengthThreshold(2);
        const auto pt = UniformFamily::parityThreshold();
        CHECK(same(lt(canonicalPrefix(LangDescriptor::evens(), 5)), LangDescriptor::uniform(pt, 2)));
        CHECK_THROWS_AS(learners::lengthThreshold(0), PreconditionError);

        const auto p = Hypothesis::exact(LangDescriptor::evens());
        const auto q = pad(p, 1);
        const auto cyc = learners::cycling({p, q});
        const auto tr = runTrace(cyc, canonicalInformant(LangDescriptor::evens()), 6);
        CHECK(goldlab::testing::codes(tr) == std::vector<Code>{p.code(), q.code(), p.code(), q.code(), p.code(), q.code()});
    }

    TEST_CASE("u-shaped wrapper detours at one length only") {
        ScopedRegistry scope;
        const auto m = learners::uShaped(learners::cofinite(), 3, LangDescriptor::finite({0}));
        const auto tr = runTrace(m, canonicalInformant(LangDescriptor::naturals()), 6);
        for (std::size_t t = 0; t < 6; ++t) {
            CHECK(same(tr.hyps[t], t == 3 ? LangDescriptor::finite({0}) : LangDescriptor::naturals()));
        }
    }
}

TEST_SUITE("self-coding learners") {
    TEST_CASE("resolvers check the least element") {
        const auto table = MinResolver::fromTable("t", {{1, LangDescriptor::finite({1, 4})}, {2, LangDescriptor::evens()}});
        CHECK(table(1).key() == LangDescriptor::finite({1, 4}).key());
        CHECK_THROWS_AS(table(2), ConfigError);
        CHECK_THROWS_AS(table(5), ConfigError);
        const auto fam = MinResolver::fromFamily(UniformFamily::anchoredEvens());
        CHECK(bits(fam(3), 9) == std::vector<bool>{0, 0, 0, 1, 1, 0, 1, 0, 1});
    }

    TEST_CASE("min-coded learner") {
        // Oracle: membership of 2(W ∪ E) ∪ (2W+1) evaluated directly.
        ScopedRegistry scope;
        const LangDescriptor w1 = LangDescriptor::finite({1, 4});
        const auto m = learners::minCoded(MinResolver::fromTable("t", {{1, w1}}));
        auto expected = [&](std::optional<Natural> x) {
            std::vector<bool> out(20);
            for (Natural n = 0; n < 20; ++n) {
                const Natural half = n / 2;
                out[n] = n % 2 == 0 ? (w1.contains(half) || half == x) : w1.contains(half);
            }
            return out;
        };
        CHECK(same(m(Prefix{}), LangDescriptor::finite({})));
        const Prefix sigma{{0, false}, {1, false}, {2, true}};
        CHECK(bits(m(sigma).descriptor(), 20) == expected(std::nullopt));
        const Prefix withX = sigma.concat(Prefix{{6, true}, {7, false}});
        CHECK(bits(m(withX).descriptor(), 20) == expected(3));
        // A gap in the k < m condition means no m qualifies.
        CHECK(same(m(Prefix{{2, true}}), LangDescriptor::finite({})));
    }

    TEST_CASE("min-union-exception learner passes ∅ → L → L∪{x}") {
        ScopedRegistry scope;
        const auto m = learners::minUnionException(MinResolver::fromFamily(UniformFamily::anchoredEvens()));
        const auto l = LangDescriptor::uniform(UniformFamily::anchoredEvens(), 3);
        const auto target = LangDescriptor::withException(l, 7);
        const auto tr = runTrace(m, canonicalInformant(target), 30);
        for (std::size_t t = 0; t < 30; ++t) {
            CAPTURE(t);
            if (t <= 3) {
                CHECK(same(tr.hyps[t], LangDescriptor::finite({})));
            } else if (t <= 7) {
                CHECK(same(tr.hyps[t], l));
            } else {
                CHECK(same(tr.hyps[t], target));
            }
        }
        const auto lim = checkLim(tr, 0, Vacillation::finite(1), 200);
        CHECK(lim.passed());
        CHECK(lim.t0 == std::size_t{8});
        CHECK(same(m(Prefix{}), LangDescriptor::finite({})));
    }
}

TEST_SUITE("learner properties") {
    TEST_CASE("learners are deterministic across instances") {
        ScopedRegistry scope;
        std::mt19937_64 rng(21);
        const std::vector<std::function<Learner()>> makers{
            [] { return learners::cofinite(); },
            [] { return learners::splitFamily(); },
            [] { return learners::evensWMon(); },
            [] { return learners::doubledPair(LangDescriptor::evens()); },
            [] { return learners::minUnionException(MinResolver::fromFamily(UniformFamily::anchoredEvens())); },
        };
        for (const auto& make : makers) {
            const auto a = make();
            const auto b = make();
            for (int i = 0; i < 50; ++i) {
                const Prefix sigma = goldlab::testing::shuffled(canonicalPrefix(LangDescriptor::split({1, 3}), rng() % 15),
                                                                rng, rng() % 3);
                CHECK(a(sigma).code() == b(sigma).code());
                CHECK(a(sigma).code() == a(sigma).code());
            }
        }
    }

    TEST_CASE("the cofinite learner is set-driven") {
        ScopedRegistry scope;
        const auto m = learners::cofinite();
        std::mt19937_64 rng(2);
        for (int i = 0; i < 200; ++i) {
            const Prefix c = canonicalPrefix(LangDescriptor::cofinite({1, 4, 9}), rng() % 20);
            CHECK(m(goldlab::testing::shuffled(c, rng, rng() % 4)).code() == m(c).code());
        }
    }

    TEST_CASE("the enumeration learner is consistent and conservative on its family") {
        ScopedRegistry scope;
        const std::vector<LangDescriptor> family{LangDescriptor::finite({0}), LangDescriptor::finite({0, 3}),
                                                 LangDescriptor::evens(), LangDescriptor::naturals()};
        const auto m = learners::enumeration(family);
        for (const auto& l : family) {
            for (const auto& sch : {Schedule::identity(), Schedule::seededBlocks(6, 5)}) {
                const auto tr = runTrace(m, scheduledInformant(l, sch), 200);
                const auto eq = EqOracle::exact(200);
                CHECK(checkRestriction(Restriction::Cons, tr, eq).passed());
                CHECK(checkRestriction(Restriction::Conv, tr, eq).passed());
                CHECK(checkRestriction(Restriction::SMon, tr, eq).passed());
                CHECK(checkLim(tr, 0, Vacillation::finite(1), 200).passed());
            }
        }
    }
}

TEST_SUITE("partial learners") {
    TEST_CASE("linear cost learners halt after factor·|σ| + offset steps") {
        ScopedRegistry scope;
        const auto m = learners::linearCost(learners::cofinite(), 2, 1);
        CHECK(m.kind() == Learner::Kind::Partial);
        const Prefix sigma{{1, false}, {3, true}, {4, false}};
        CHECK(m.cost(sigma) == Budget{7});
        CHECK(std::holds_alternative<Divergence>(m.evaluate(sigma, 6)));
        const auto ans = m.evaluate(sigma, 7);
        REQUIRE(std::holds_alternative<Hypothesis>(ans));
        CHECK(std::get<Hypothesis>(ans).code() == learners::cofinite()(sigma).code());
    }

    TEST_CASE("a trace stops at the first divergence") {
        ScopedRegistry scope;
        const auto m = learners::linearCost(learners::cofinite(), 2, 1);
        const BudgetSchedule budget = [](std::size_t) { return Budget{10}; };
        const auto tr = runTrace(m, canonicalInformant(LangDescriptor::naturals()), 20, budget);
        CHECK(tr.size() == 5);
        REQUIRE(tr.divergence.has_value());
        CHECK(tr.prefix.size() == 5);
        CHECK_THROWS_AS(runTrace(m, canonicalInformant(LangDescriptor::naturals()), 20), PreconditionError);
    }

    TEST_CASE("the unbudgeted call refuses a prefix that never halts") {
        struct Stuck final : Learner::Impl {
            Hypothesis conjecture(const Prefix&) const override { return Hypothesis::exact(LangDescriptor::evens()); }
            std::optional<Budget> cost(const Prefix& s) const override {
                return s.size() == 1 ? std::nullopt : std::optional<Budget>{0};
            }
            Learner::Kind kind() const override { return Learner::Kind::Partial; }
            std::string name() const override { return "stuck"; }
        };
        ScopedRegistry scope;
        const Learner m(std::make_shared<Stuck>());
        CHECK_NOTHROW(m(Prefix{}));
        CHECK_THROWS_AS(m(Prefix{{0, true}}), PreconditionError);
        CHECK(std::holds_alternative<Divergence>(m.evaluate(Prefix{{0, true}}, 1000000)));
    }

    TEST_CASE("empty traces") {
        ScopedRegistry scope;
        const auto tr = runTrace(learners::cofinite(), canonicalInformant(LangDescriptor::evens()), 0);
        CHECK(tr.size() == 0);
        CHECK(tr.prefix.empty());
    }

    TEST_CASE("trace examples") {
        ScopedRegistry scope;
        const auto wmon = runTrace(learners::evensWMon(), canonicalInformant(LangDescriptor::evens()), 5);
        const std::vector<LangDescriptor> want{LangDescriptor::evens(), LangDescriptor::evens(),
                                               LangDescriptor::evensPlusOne(), LangDescriptor::evens(),
                                               LangDescriptor::evens()};
        for (std::size_t t = 0; t < 5; ++t) CHECK(same(wmon.hyps[t], want[t]));
        const auto cof = runTrace(learners::cofinite(), canonicalInformant(LangDescriptor::cofinite({2})), 4);
        for (std::size_t t = 0; t < 3; ++t) CHECK(same(cof.hyps[t], LangDescriptor::naturals()));
        CHECK(same(cof.hyps[3], LangDescriptor::cofinite({2})));
        CHECK(cof.prefix == canonicalPrefix(LangDescriptor::cofinite({2}), 4));
    }
}
