#include <gtest/gtest.h>

#include <set>

#include "wildram/errors.hpp"
#include "wildram/field.hpp"

using namespace wildram;

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(FieldCtx::make(4, 1), InvalidInput);
    EXPECT_THROW(FieldCtx::make(3, 0), InvalidInput);
    EXPECT_THROW(FieldCtx::make(2, 21), InvalidInput);
    EXPECT_THROW(FieldCtx::make(3, 2, {1, 0, 2}), InvalidInput);
}

TEST(Field, ReducibleModulusRejected) {
    EXPECT_NO_THROW(FieldCtx::make(3, 2, {1, 0, 1}));
    EXPECT_THROW(FieldCtx::make(5, 2, {1, 0, 1}), InvalidInput);  // x^2+1 = (x-2)(x+2) mod 5
}

TEST(Field, DefaultModulusIsFirstIrreducible) {
    EXPECT_EQ(FieldCtx::make(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(FieldCtx::make(5, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(FieldCtx::make(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(FieldCtx::make(7, 1)->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, AxiomsExhaustiveSmallFields) {
    for (auto [p, e] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {5u, 2u}, {7u, 1u}}) {
        auto f = FieldCtx::make(p, e);
        auto els = f->elements();
        ASSERT_EQ(els.size(), f->size());
        for (auto a : els) {
            EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
            if (!a.is_zero()) EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
            EXPECT_EQ(f->pth_root(f->frobenius(a)), a);
            EXPECT_EQ(f->pow(a, f->size()), a);
            for (auto b : els) {
                EXPECT_EQ(f->add(a, b), f->add(b, a));
                EXPECT_EQ(f->mul(a, b), f->mul(b, a));
                for (auto c : {f->one(), els.back()})
                    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
    }
}

TEST(Field, TraceIsAdditiveAndSurjective) {
    auto f = FieldCtx::make(3, 2);
    std::set<std::uint32_t> seen;
    for (auto a : f->elements()) {
        seen.insert(f->trace(a));
        for (auto b : f->elements()) EXPECT_EQ((f->trace(a) + f->trace(b)) % 3, f->trace(f->add(a, b)));
    }
    EXPECT_EQ(seen.size(), 3u);
    EXPECT_EQ(f->trace(f->one()), 2u);  // 1 + 1
}

TEST(Field, RootsOrderedByCoordinates) {
    auto f = FieldCtx::make(5, 1);
    auto r = f->nth_roots(f->from_int(4), 2);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], f->from_int(2));
    EXPECT_EQ(f->min_nth_root(f->from_int(4), 2), f->from_int(2));
    EXPECT_FALSE(f->min_nth_root(f->from_int(3), 2).has_value());

    auto g = FieldCtx::make(5, 2);
    auto three = g->from_int(3);
    auto s = g->min_nth_root(three, 2);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(g->mul(*s, *s), three);
    EXPECT_TRUE(g->in_prime_field(three));
    EXPECT_FALSE(g->in_prime_field(*s));
}

TEST(Field, CoordinateRoundTrip) {
    auto f = FieldCtx::make(3, 3);
    for (auto a : f->elements()) {
        auto c = f->coords(a);
        std::vector<std::int64_t> ci(c.begin(), c.end());
        EXPECT_EQ(f->from_coords(ci), a);
    }
    EXPECT_EQ(f->to_string(f->from_int(2)), "[2,0,0]");
    EXPECT_EQ(FieldCtx::make(7, 1)->to_string(FieldCtx::make(7, 1)->from_int(-1)), "6");
}
