#include "doctest.h"
#include "goldlab/errors.hpp"
#include "goldlab/learners.hpp"
#include "goldlab/locking.hpp"
#include "support.hpp"

using namespace goldlab;

namespace {

// Counts through value tuples like an odometer, shortest lengths first, and
// returns the first L-labeled extension on which M's code changes.
std::optional<Prefix> oracleCounterexample(const Learner& m, const LangDescriptor& l, const Prefix& sigma,
                                           std::size_t depth, Natural bound) {
    const Code base = m(sigma).code();
    for (std::size_t len = 1; len <= depth; ++len) {
        std::vector<Natural> digits(len, 0);
        while (true) {
            std::vector<InfoPair> tail;
            for (Natural x : digits) tail.push_back({x, l.contains(x)});
            const Prefix tau(tail);
            if (m(sigma.concat(tau)).code() != base) return tau;
            std::size_t i = len;
            while (i > 0 && ++digits[i - 1] == bound) digits[--i] = 0;
            if (i == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_SUITE("locking falsifier") {
    TEST_CASE("a learner constant on consistent data is locked everywhere") {
        ScopedRegistry scope;
        const auto m = learners::enumeration({LangDescriptor::evens()});
        for (std::size_t d = 1; d <= 3; ++d) {
            for (Natural b = 1; b <= 6; ++b) {
                const auto res = lockingFalsifier(m, LangDescriptor::evens(), Prefix{{4, true}, {1, false}}, d, b);
                CHECK(res.locked());
                CHECK(res.depth == d);
                CHECK(res.valueBound == b);
            }
        }
    }

    TEST_CASE("the evens learner is not locked on ((0,1))") {
        ScopedRegistry scope;
        const auto res = lockingFalsifier(learners::evensWMon(), LangDescriptor::evens(), Prefix{{0, true}}, 1, 3);
        REQUIRE_FALSE(res.locked());
        CHECK(*res.counterexample == Prefix{{1, false}});
    }

    TEST_CASE("the cofinite learner is locked on ((2,0)) for Cofinite({2})") {
        ScopedRegistry scope;
        const auto m = learners::cofinite();
        for (std::size_t d = 1; d <= 3; ++d) {
            for (Natural b = 1; b <= 5; ++b) {
                CHECK(lockingFalsifier(m, LangDescriptor::cofinite({2}), Prefix{{2, false}}, d, b).locked());
            }
        }
    }

    TEST_CASE("σ must be labeled by L") {
        ScopedRegistry scope;
        CHECK_THROWS_AS(lockingFalsifier(learners::cofinite(), LangDescriptor::evens(), Prefix{{1, true}}, 2, 3),
                        PreconditionError);
    }

    TEST_CASE("the search agrees with an odometer enumeration") {
        ScopedRegistry scope;
        const std::vector<std::pair<Learner, LangDescriptor>> cases{
            {learners::cofinite(), LangDescriptor::cofinite({2})},
            {learners::cofinite(), LangDescriptor::cofinite({1, 4})},
            {learners::splitFamily(), LangDescriptor::split({0, 2})},
            {learners::splitFamily(), LangDescriptor::splitAll()},
            {learners::evensWMon(), LangDescriptor::evens()},
        };
        for (const auto& [m, l] : cases) {
            for (std::size_t n = 0; n < 5; ++n) {
                const Prefix sigma = goldlab::testing::canonicalPrefix(l, n);
                for (std::size_t d = 1; d <= 3; ++d) {
                    for (Natural b : {Natural{1}, Natural{3}, Natural{6}}) {
                        const auto res = lockingFalsifier(m, l, sigma, d, b);
                        const auto want = oracleCounterexample(m, l, sigma, d, b);
                        CAPTURE(m.name());
                        CAPTURE(n);
                        CAPTURE(d);
                        CAPTURE(b);
                        CHECK(res.locked() == !want.has_value());
                        if (want) CHECK(*res.counterexample == *want);
                    }
                }
            }
        }
    }
}
