#include <random>

#include "doctest.h"
#include "goldlab/errors.hpp"
#include "goldlab/hypothesis.hpp"
#include "goldlab/pairing.hpp"
#include "support.hpp"

using namespace goldlab;
using goldlab::testing::bits;

namespace {

// A spread of closed-algebra descriptors with all differences below 64.
std::vector<LangDescriptor> closedPool() {
    std::vector<LangDescriptor> pool{
        LangDescriptor::finite({}),
        LangDescriptor::finite({1, 2}),
        LangDescriptor::finite({0, 2, 4}),
        LangDescriptor::cofinite({}),
        LangDescriptor::cofinite({2}),
        LangDescriptor::cofinite({1, 3}),
        LangDescriptor::evens(),
        LangDescriptor::evensPlusOne(),
        LangDescriptor::split({}),
        LangDescriptor::split({0}),
        LangDescriptor::split({0, 1, 2}),
        LangDescriptor::splitAll(),
        LangDescriptor::withException(LangDescriptor::evens(), 1),
        LangDescriptor::withException(LangDescriptor::evens(), 5),
        LangDescriptor::withException(LangDescriptor::finite({1}), 2),
        LangDescriptor::doubledPair(LangDescriptor::finite({0, 1}), std::nullopt),
        LangDescriptor::doubledPair(LangDescriptor::finite({0, 1}), 3),
        LangDescriptor::doubledPair(LangDescriptor::finite({0, 1}), 3, ExceptionSide::Even),
        LangDescriptor::doubledPair(LangDescriptor::evens(), 1),
        LangDescriptor::uniform(UniformFamily::parityThreshold(), 0),
        LangDescriptor::uniform(UniformFamily::parityThreshold(), 3),
        LangDescriptor::uniform(UniformFamily::anchoredEvens(), 2),
        LangDescriptor::uniform(UniformFamily::anchoredEvens(), 3),
    };
    return pool;
}

bool bruteEqual(const LangDescriptor& a, const LangDescriptor& b, Natural n) { return bits(a, n) == bits(b, n); }

bool bruteSubset(const LangDescriptor& a, const LangDescriptor& b, Natural n) {
    for (Natural x = 0; x < n; ++x) {
        if (a.contains(x) && !b.contains(x)) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("descriptors") {
    TEST_CASE("membership examples") {
        CHECK_FALSE(member(LangDescriptor::cofinite({2}), 2));
        CHECK(member(LangDescriptor::cofinite({2}), 3));
        CHECK_FALSE(member(LangDescriptor::evens(), 1));
        CHECK(member(LangDescriptor::evensPlusOne(), 1));
        for (Natural t0 = 0; t0 < 12; ++t0) {
            NatSet x;
            for (Natural i = 0; i <= t0; ++i) x.insert(i);
            const auto s = LangDescriptor::split(x);
            CHECK_FALSE(member(s, 2 * (t0 + 1)));
            CHECK(member(s, 2 * t0));
            CHECK(member(s, 2 * (t0 + 1) + 1));
        }
    }

    TEST_CASE("the doubled pair places the exception on the requested side") {
        const auto base = LangDescriptor::finite({0, 1});
        const auto odd = LangDescriptor::doubledPair(base, 3);
        const auto even = LangDescriptor::doubledPair(base, 3, ExceptionSide::Even);
        // Odd side: 2·base ∪ 2(base∪{x})+1.
        CHECK(bits(odd, 10) == std::vector<bool>{1, 1, 1, 1, 0, 0, 0, 1, 0, 0});
        // Even side: 2(base∪{x}) ∪ 2·base+1.
        CHECK(bits(even, 10) == std::vector<bool>{1, 1, 1, 1, 0, 0, 1, 0, 0, 0});
        CHECK(bits(LangDescriptor::doubledPair(base, std::nullopt), 10) ==
              std::vector<bool>{1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
    }

    TEST_CASE("uniform families") {
        const auto pt = UniformFamily::parityThreshold();
        // L_k = {even x ≤ k} ∪ {odd x > k}
        CHECK(bits(LangDescriptor::uniform(pt, 3), 8) == std::vector<bool>{1, 0, 1, 0, 0, 1, 0, 1});
        const auto ae = UniformFamily::anchoredEvens();
        // L_m = {m} ∪ {even x > m}
        CHECK(bits(LangDescriptor::uniform(ae, 3), 9) == std::vector<bool>{0, 0, 0, 1, 1, 0, 1, 0, 1});
        CHECK_THROWS_AS(UniformFamily::byName("primes"), ConfigError);
    }

    TEST_CASE("exact equality and inclusion examples") {
        CHECK(equalExact(LangDescriptor::finite({1, 2}), LangDescriptor::finite({2, 1})));
        CHECK(equalExact(LangDescriptor::evens(), LangDescriptor::splitAll()));
        CHECK(subsetExact(LangDescriptor::cofinite({2}), LangDescriptor::cofinite({})));
        CHECK_FALSE(equalExact(LangDescriptor::cofinite({2}), LangDescriptor::cofinite({})));
        CHECK_FALSE(subsetExact(LangDescriptor::cofinite({}), LangDescriptor::cofinite({2})));
        // Split(∅) is the odd numbers, Split(All) the evens.
        CHECK_FALSE(equalExact(LangDescriptor::split({}), LangDescriptor::splitAll()));
        CHECK(equalExact(LangDescriptor::withException(LangDescriptor::evens(), 1), LangDescriptor::evensPlusOne()));
    }

    TEST_CASE("exact decisions agree with brute force on [0,1000)") {
        const auto pool = closedPool();
        for (const auto& a : pool) {
            for (const auto& b : pool) {
                CAPTURE(a.key());
                CAPTURE(b.key());
                CHECK(equalExact(a, b) == bruteEqual(a, b, 1000));
                CHECK(subsetExact(a, b) == bruteSubset(a, b, 1000));
            }
        }
    }

    TEST_CASE("randomized descriptors agree with brute force") {
        std::mt19937_64 rng(3);
        auto randomSet = [&](Natural range) {
            NatSet s;
            const auto n = rng() % 4;
            for (std::size_t i = 0; i < n; ++i) s.insert(rng() % range);
            return s;
        };
        auto randomDescriptor = [&]() -> LangDescriptor {
            switch (rng() % 7) {
                case 0: return LangDescriptor::finite(randomSet(20));
                case 1: return LangDescriptor::cofinite(randomSet(20));
                case 2: return LangDescriptor::split(randomSet(10));
                case 3: return LangDescriptor::withException(LangDescriptor::evens(), rng() % 20);
                case 4: return LangDescriptor::doubledPair(LangDescriptor::finite(randomSet(6)), rng() % 6);
                case 5: return LangDescriptor::uniform(UniformFamily::parityThreshold(), rng() % 10);
                default: return rng() % 2 ? LangDescriptor::evens() : LangDescriptor::evensPlusOne();
            }
        };
        for (int i = 0; i < 400; ++i) {
            const auto a = randomDescriptor();
            const auto b = randomDescriptor();
            CAPTURE(a.key());
            CAPTURE(b.key());
            CHECK(equalExact(a, b) == bruteEqual(a, b, 1000));
            CHECK(subsetExact(a, b) == bruteSubset(a, b, 1000));
        }
    }

    TEST_CASE("graph pairs have no symbolic rule") {
        const auto g = LangDescriptor::graph(programs::identity());
        const auto h = LangDescriptor::graph(programs::modThree());
        CHECK_THROWS_AS(equalExact(g, h), UndecidedSymbolically);
        CHECK(member(g, pairEncode(3, 3)));
        CHECK_FALSE(member(g, pairEncode(3, 4)));
    }

    TEST_CASE("descriptor JSON round trip") {
        for (const auto& d : closedPool()) {
            const auto back = descriptorFromJson(toJson(d));
            CHECK(back.key() == d.key());
            CHECK(bits(back, 100) == bits(d, 100));
        }
        CHECK(descriptorFromJson(R"({"kind":"cofinite","X":[2]})").key() == LangDescriptor::cofinite({2}).key());
        CHECK_THROWS_AS(descriptorFromJson(R"({"kind":"primes"})"), ConfigError);
        CHECK_THROWS_AS(descriptorFromJson(R"({"X":[1]})"), ConfigError);
    }
}

TEST_SUITE("anomalies") {
    TEST_CASE("symmetric difference examples") {
        const auto evens = LangDescriptor::evens();
        CHECK(symDiffCount(Hypothesis::exact(evens), evens, 100).value == 0);
        CHECK(symDiffCount(Hypothesis::exact(LangDescriptor::withException(evens, 5)), evens, 100).value == 1);
        CHECK(symDiffCount(Hypothesis::exact(LangDescriptor::cofinite({})), LangDescriptor::cofinite({1, 3}), 100).value ==
              2);
        const auto inf = symDiffCount(Hypothesis::exact(LangDescriptor::evensPlusOne()), LangDescriptor::split({}), 100);
        CHECK(inf.kind == AnomalyCount::Kind::MoreThan);
        CHECK_FALSE(inf.atMost(1000));
    }

    TEST_CASE("exact counts match a brute-force count when differences are small") {
        const auto pool = closedPool();
        for (const auto& a : pool) {
            for (const auto& b : pool) {
                const auto c = symDiffCount(Hypothesis::exact(a), b, 300);
                Natural brute = 0;
                for (Natural x = 0; x < 300; ++x) brute += a.contains(x) != b.contains(x);
                if (c.kind == AnomalyCount::Kind::MoreThan) {
                    CHECK(brute > 20);
                } else {
                    CHECK(c.value == brute);
                }
            }
        }
    }

    TEST_CASE("enumerated hypotheses are counted on the horizon") {
        const auto h = unionVote({Hypothesis::exact(LangDescriptor::finite({1, 4}))});
        const auto c = symDiffCount(h, LangDescriptor::finite({1}), 50);
        CHECK(c.kind == AnomalyCount::Kind::WithinHorizon);
        CHECK(c.value == 1);
    }
}

TEST_SUITE("codes") {
    TEST_CASE("codes are interned by content") {
        ScopedRegistry scope;
        const auto a = Hypothesis::exact(LangDescriptor::evens());
        const auto b = Hypothesis::exact(LangDescriptor::evens());
        const auto c = Hypothesis::exact(LangDescriptor::splitAll());
        CHECK(a.code() == b.code());
        CHECK(a.code() != c.code());
        CHECK(a.code() == 0);
        CHECK(c.code() == 1);
        CHECK(scope.registry().keyOf(a.code()) == a.key());
    }

    TEST_CASE("scoped registries isolate code assignment") {
        Code outer = 0;
        {
            ScopedRegistry s1;
            Hypothesis::exact(LangDescriptor::finite({9}));
            outer = Hypothesis::exact(LangDescriptor::evens()).code();
        }
        ScopedRegistry s2;
        CHECK(Hypothesis::exact(LangDescriptor::evens()).code() == 0);
        CHECK(outer == 1);
    }

    TEST_CASE("adopting a clashing binding throws") {
        ScopedRegistry scope;
        const auto a = Hypothesis::exact(LangDescriptor::evens());
        CHECK_NOTHROW(scope.registry().adopt(a.code(), a.key()));
        CHECK_THROWS_AS(scope.registry().adopt(a.code(), "something else"), ConfigError);
        CHECK_THROWS_AS(scope.registry().adopt(a.code() + 7, a.key()), ConfigError);
    }

    TEST_CASE("pad changes the code and keeps the extension") {
        ScopedRegistry scope;
        const auto p = Hypothesis::exact(LangDescriptor::cofinite({3}));
        const auto q = Hypothesis::exact(LangDescriptor::split({1}));
        CHECK(pad(p, 0).code() != pad(p, 1).code());
        CHECK(pad(p, 0).code() != p.code());
        CHECK(pad(p, 4).code() == pad(p, 4).code());
        CHECK(pad(p, 4).code() != pad(q, 4).code());
        CHECK(pad(p, 2).salt() == Natural{2});
        for (Natural b : {1u, 10u, 100u, 500u}) {
            CHECK(agreeUpTo(pad(p, 0), pad(p, 1), b));
            CHECK(agreeUpTo(pad(p, 0), p, b));
        }
        CHECK_FALSE(agreeUpTo(pad(p, 3), pad(q, 3), 10));
    }

    TEST_CASE("pad is injective and preserves extensions over random inputs") {
        ScopedRegistry scope;
        std::mt19937_64 rng(8);
        const auto pool = closedPool();
        std::map<Code, std::pair<Code, Natural>> seen;
        for (int i = 0; i < 300; ++i) {
            const auto h = Hypothesis::exact(pool[rng() % pool.size()]);
            const Natural salt = rng() % 50;
            const auto padded = pad(h, salt);
            const auto [it, fresh] = seen.emplace(padded.code(), std::pair{h.code(), salt});
            if (!fresh) CHECK(it->second == std::pair{h.code(), salt});
            CHECK(agreeUpTo(h, padded, 500));
        }
    }

    TEST_CASE("indFinite is canonical in its set") {
        ScopedRegistry scope;
        CHECK(indFinite({}).isExact());
        CHECK(indFinite({}).descriptor().key() == LangDescriptor::finite({}).key());
        CHECK(indFinite({2}).descriptor().key() == LangDescriptor::finite({2}).key());
        CHECK(indFinite({1, 2}).code() == indFinite({2, 1}).code());
        CHECK(indFinite({1}).code() != indFinite({2}).code());
    }
}

TEST_SUITE("enumerators") {
    TEST_CASE("lifted descriptors list x at step x+1") {
        const auto e = liftExact(LangDescriptor::evens());
        CHECK(e.enumUpTo(5) == std::vector<Natural>{0, 2, 4});
        const auto f = liftExact(LangDescriptor::finite({7}));
        CHECK(f.enumUpTo(5).empty());
        CHECK(f.enumUpTo(8) == std::vector<Natural>{7});
        CHECK(e.provenance() == Provenance::LiftedExact);
    }

    TEST_CASE("every enumerator kind is monotone and lists what it contains") {
        ScopedRegistry scope;
        const Prefix sigma = goldlab::testing::canonicalPrefix(LangDescriptor::evens(), 6);
        const auto lifted = Hypothesis::exact(LangDescriptor::cofinite({3, 8}));
        std::vector<Hypothesis> hs{
            lifted,
            guardXi(sigma, Hypothesis::exact(LangDescriptor::cofinite({}))),
            unionVote({lifted, Hypothesis::exact(LangDescriptor::evensPlusOne())}),
            graphEncodeG(programs::modThree()),
            Hypothesis::restore(99, "snap", std::nullopt, snapshotEnumerator({1, 5, 9}, 20), std::nullopt),
        };
        for (const auto& h : hs) {
            const auto& e = h.enumerator();
            std::vector<Natural> prev;
            for (Budget t = 0; t < 200; ++t) {
                const auto cur = e.enumUpTo(t);
                CHECK(std::is_sorted(cur.begin(), cur.end()));
                CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
                for (Natural x : cur) CHECK(e.contains(x, t));
                prev = cur;
            }
            CHECK_FALSE(e.bound().empty());
        }
    }

    TEST_CASE("memberUpTo reports In only once enumerated") {
        const auto h = Hypothesis::exact(LangDescriptor::finite({7}));
        CHECK(memberUpTo(h, 7, 7) == MemberStatus::NotYet);
        CHECK(memberUpTo(h, 7, 8) == MemberStatus::In);
        CHECK(memberUpTo(h, 6, 100) == MemberStatus::NotYet);
        CHECK(memberAt(h, 7, 0));  // exact hypotheses answer from the descriptor
    }
}

TEST_SUITE("guard and union vote") {
    TEST_CASE("the guard drops realized commission errors") {
        ScopedRegistry scope;
        const auto h = Hypothesis::exact(LangDescriptor::finite({0, 1, 2}));
        const Prefix sigma{{1, false}, {5, true}, {6, true}};
        const auto g = guardXi(sigma, h);
        CHECK(memberUpTo(g, 0, 1000) == MemberStatus::In);
        CHECK(memberUpTo(g, 2, 1000) == MemberStatus::In);
        CHECK(memberUpTo(g, 1, 1000) == MemberStatus::NotYet);
        CHECK(g.enumerator().provenance() == Provenance::Guard);
    }

    TEST_CASE("the guard code depends only on (h, K)") {
        ScopedRegistry scope;
        const auto h = Hypothesis::exact(LangDescriptor::cofinite({}));
        // K = ∅ whenever ng(σ) misses enumUpTo(h,|σ|) = [0,|σ|).
        const auto a = guardXi(Prefix{{40, false}}, h);
        const auto b = guardXi(Prefix{{50, false}, {3, true}}, h);
        CHECK(a.code() == b.code());
        CHECK(a.code() == guardXi(Prefix{}, h).code());
        // K = {1}
        const auto c = guardXi(Prefix{{1, false}, {0, true}}, h);
        const auto d = guardXi(Prefix{{1, false}, {0, true}, {9, true}}, h);
        CHECK(c.code() == d.code());
        CHECK(c.code() != a.code());
    }

    TEST_CASE("σ ⊑ τ with equal K gives equal guard codes") {
        ScopedRegistry scope;
        const auto h = Hypothesis::exact(LangDescriptor::split({1, 2}));
        // Oracle: compute K by hand from the lifted enumeration and compare.
        std::mt19937_64 rng(4);
        for (int i = 0; i < 200; ++i) {
            std::vector<InfoPair> items;
            const std::size_t n = 1 + rng() % 8;
            for (std::size_t k = 0; k < n; ++k) {
                const Natural x = rng() % 10;
                items.push_back({x, (x + k) % 2 == 0});
            }
            Prefix tau;
            try {
                tau = Prefix(items);
            } catch (const ContradictionError&) {
                continue;
            }
            for (std::size_t m = 0; m <= tau.size(); ++m) {
                const Prefix sigma = tau.take(m);
                auto kOf = [&](const Prefix& p) {
                    NatSet k;
                    const NatSet ng = p.ng();
                    for (Natural x = 0; x < p.size(); ++x) {
                        if (h.descriptor().contains(x) && ng.count(x)) k.insert(x);
                    }
                    return k;
                };
                const bool sameCode = guardXi(sigma, h).code() == guardXi(tau, h).code();
                CHECK(sameCode == (kOf(sigma) == kOf(tau)));
            }
        }
    }

    TEST_CASE("guard soundness against the unguarded enumeration") {
        ScopedRegistry scope;
        const auto h = Hypothesis::exact(LangDescriptor::cofinite({4}));
        const Prefix sigma{{1, false}, {2, false}, {3, true}, {7, false}};
        const auto g = guardXi(sigma, h);
        const NatSet k{1, 2};
        for (Budget t = 0; t < 60; ++t) {
            for (Natural x = 0; x < 60; ++x) {
                if (k.count(x)) {
                    CHECK(memberUpTo(g, x, t) == MemberStatus::NotYet);
                } else {
                    CHECK(memberUpTo(g, x, t) == memberUpTo(h, x, t));
                }
            }
        }
    }

    TEST_CASE("union vote is the set union") {
        ScopedRegistry scope;
        const auto a = Hypothesis::exact(LangDescriptor::finite({0, 2}));
        const auto b = Hypothesis::exact(LangDescriptor::finite({4}));
        CHECK(agreeUpTo(unionVote({a}), a, 50));
        CHECK(agreeUpTo(unionVote({a, b}), Hypothesis::exact(LangDescriptor::finite({0, 2, 4})), 50));
        CHECK(unionVote({a, b, a}).code() == unionVote({b, a}).code());
        CHECK(unionVote({}).enumerator().enumUpTo(1000).empty());
        CHECK(unionVote({a, b}).enumerator().provenance() == Provenance::UnionVote);
    }

    TEST_CASE("union vote agrees with brute-force union") {
        ScopedRegistry scope;
        const auto pool = closedPool();
        std::mt19937_64 rng(13);
        for (int i = 0; i < 100; ++i) {
            std::vector<Hypothesis> hs;
            const std::size_t n = 1 + rng() % 4;
            for (std::size_t k = 0; k < n; ++k) hs.push_back(Hypothesis::exact(pool[rng() % pool.size()]));
            const auto u = unionVote(hs);
            const Natural b = 80;
            for (Natural x = 0; x < b; ++x) {
                bool any = false;
                for (const auto& h : hs) any = any || h.descriptor().contains(x);
                CHECK(memberAt(u, x, defaultBudget(b)) == any);
            }
        }
    }
}

TEST_SUITE("function bridge encodings") {
    TEST_CASE("G lists the graph") {
        ScopedRegistry scope;
        const auto id = graphEncodeG(programs::identity());
        CHECK(memberUpTo(id, pairEncode(3, 3), 1000) == MemberStatus::In);
        CHECK(memberUpTo(id, pairEncode(3, 4), 100000) == MemberStatus::NotYet);
        const auto zero = graphEncodeG(programs::constantZero());
        for (Natural x = 0; x < 10; ++x) {
            CHECK(memberUpTo(zero, pairEncode(x, 0), 1000) == MemberStatus::In);
            CHECK(memberUpTo(zero, pairEncode(x, 1), 1000) == MemberStatus::NotYet);
        }
        const auto mod3 = graphEncodeG(programs::modThree());
        CHECK(memberUpTo(mod3, pairEncode(4, 1), 1000) == MemberStatus::In);
        CHECK(id.enumerator().provenance() == Provenance::GraphEncode);
    }

    TEST_CASE("H inverts G") {
        ScopedRegistry scope;
        CHECK(graphDecodeH(graphEncodeG(programs::identity())).evaluate(5, 1 << 20) == Natural{5});
        CHECK(graphDecodeH(graphEncodeG(programs::modThree())).evaluate(4, 1 << 20) == Natural{1});
        const auto nothing = graphDecodeH(indFinite({}));
        for (Natural x = 0; x < 5; ++x) CHECK_FALSE(nothing.evalWithBudget(x, 20000).has_value());
    }

    TEST_CASE("round trip at the exact witness budget") {
        // H(G(p)) halts on x once its scan passes i = ⟨⟨x,p(x)⟩,s⟩ with s the
        // least halting budget of p on x; one step earlier it is still running.
        ScopedRegistry scope;
        for (const auto& p : {programs::identity(), programs::constantZero(), programs::modThree()}) {
            const auto back = graphDecodeH(graphEncodeG(p));
            for (Natural x = 0; x < 50; ++x) {
                Budget s = 0;
                while (!p.evalWithBudget(x, s)) ++s;
                const Natural y = *p.evalWithBudget(x, s);
                const Natural i = pairEncode(pairEncode(x, y), s);
                CAPTURE(p.name());
                CAPTURE(x);
                CHECK(back.evalWithBudget(x, i + 1) == y);
                CHECK_FALSE(back.evalWithBudget(x, i).has_value());
            }
        }
    }

    TEST_CASE("programs keep a halting answer under larger budgets") {
        for (const auto& name : programs::builtinNames()) {
            const auto p = *programs::byName(name);
            for (Natural x = 0; x < 30; ++x) {
                std::optional<Natural> first;
                for (Budget t = 0; t < 40; ++t) {
                    const auto v = p.evalWithBudget(x, t);
                    if (first) CHECK(v == first);
                    if (v && !first) first = v;
                }
            }
        }
        CHECK_FALSE(programs::nowhereDefined().evalWithBudget(3, 1000).has_value());
        CHECK_FALSE(programs::byName("ackermann").has_value());
    }
}
