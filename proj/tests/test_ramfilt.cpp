#include <gtest/gtest.h>

#include <random>

#include "wildram/errors.hpp"
#include "wildram/ramfilt.hpp"

using namespace wildram;

namespace {

LaurentSeries S(const FieldPtr& f, std::map<std::int64_t, std::int64_t> t, std::int64_t prec = LaurentSeries::kExact) {
    std::map<std::int64_t, FieldElem> m;
    for (auto [k, c] : t) m[k] = f->from_int(c);
    return LaurentSeries(f, m, prec);
}

std::vector<Rational> R(std::initializer_list<std::int64_t> xs) { return {xs.begin(), xs.end()}; }

ReducedWitt2 witt_poles(const FieldPtr& f, std::int64_t n0, std::int64_t n1) {
    return reduce_witt2({S(f, {{-n0, 1}}), S(f, {{-n1, 1}})});
}

}  // namespace

TEST(Profile, Validation) {
    EXPECT_THROW(JumpProfile::make(Numbering::Lower, R({3, 1}), {4, 2}), InvalidInput);
    EXPECT_THROW(JumpProfile::make(Numbering::Lower, R({1, 3}), {4, 3}), InvalidInput);
    EXPECT_THROW(JumpProfile::make(Numbering::Lower, {Rational(1, 2)}, {2}), InvalidInput);
    EXPECT_THROW(JumpProfile::make(Numbering::Lower, R({0}), {2}), InvalidInput);
    EXPECT_NO_THROW(JumpProfile::make(Numbering::Upper, {Rational(1, 2)}, {2}));
    EXPECT_EQ(JumpProfile::make(Numbering::Lower, R({1, 7}), {9, 3}).orders, (std::vector<std::int64_t>{9, 3, 1}));
}

TEST(Profile, Conversions) {
    auto low = JumpProfile::make(Numbering::Lower, R({1, 7}), {9, 3});
    auto up = lower_to_upper(low);
    EXPECT_EQ(up.jumps, R({1, 3}));
    EXPECT_EQ(upper_to_lower(up), low);

    auto up2 = JumpProfile::make(Numbering::Upper, R({1, 3}), {4, 2});
    EXPECT_EQ(upper_to_lower(up2).jumps, R({1, 5}));

    auto single = JumpProfile::make(Numbering::Lower, R({5}), {2});
    EXPECT_EQ(lower_to_upper(single).jumps, R({5}));

    EXPECT_THROW(upper_to_lower(JumpProfile::make(Numbering::Upper, {Rational(1), Rational(5, 4)}, {4, 2})),
                 InvalidInput);
}

TEST(Profile, Herbrand) {
    auto low = JumpProfile::make(Numbering::Lower, R({1, 7}), {9, 3});
    EXPECT_EQ(herbrand_phi(low, 0), Rational(0));
    EXPECT_EQ(herbrand_phi(low, Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(herbrand_phi(low, 1), Rational(1));
    EXPECT_EQ(herbrand_phi(low, 7), Rational(3));
    EXPECT_EQ(herbrand_phi(low, 16), Rational(4));
    for (int k = 0; k <= 40; ++k) {
        Rational v(k, 3);
        EXPECT_EQ(herbrand_psi(low, herbrand_phi(low, v)), v);
    }
}

TEST(Profile, RandomRoundTrips) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        std::uniform_int_distribution<int> nj(1, 4), pp(0, 2), step(1, 9);
        const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[pp(rng)];
        const int n = nj(rng);
        std::vector<std::int64_t> orders;
        for (int i = n; i >= 0; --i) orders.push_back(std::int64_t(std::pow(p, i)));
        std::vector<Rational> l;
        std::int64_t cur = 0;
        for (int i = 0; i < n; ++i) l.push_back(cur += step(rng));
        auto low = JumpProfile::make(Numbering::Lower, l, orders);
        auto up = lower_to_upper(low);
        EXPECT_EQ(upper_to_lower(up), low);
        for (std::size_t j = 0; j < l.size(); ++j) EXPECT_EQ(herbrand_phi(low, l[j]), up.jumps[j]);
    }
}

TEST(Profile, DifferentDegree) {
    EXPECT_EQ(different_degree(JumpProfile::make(Numbering::Lower, R({1}), {2})), 2);
    EXPECT_EQ(different_degree(JumpProfile::make(Numbering::Lower, R({1, 3}), {4, 2})), 8);
    EXPECT_EQ(different_degree(JumpProfile{}), 0);
}

TEST(Jumps, PCyclic) {
    auto f3 = FieldCtx::make(3, 1);
    EXPECT_EQ(jumps_p_cyclic(reduce_as(S(f3, {{-1, 1}}))).jumps, R({1}));
    auto f2 = FieldCtx::make(2, 1);
    EXPECT_EQ(jumps_p_cyclic(reduce_as(S(f2, {{-5, 1}}))).jumps, R({5}));
    auto f5 = FieldCtx::make(5, 1);
    EXPECT_EQ(jumps_p_cyclic(reduce_as(S(f5, {{-3, 1}, {-1, 1}}))).jumps, R({3}));
    EXPECT_THROW(jumps_p_cyclic(reduce_as(S(f5, {{0, 1}}))), InvalidInput);
}

TEST(Jumps, P2Cyclic) {
    auto f3 = FieldCtx::make(3, 1);
    EXPECT_EQ(jumps_p2_cyclic(witt_poles(f3, 1, 2)).jumps, R({1, 7}));
    EXPECT_EQ(jumps_p2_cyclic(witt_poles(f3, 1, 5)).jumps, R({1, 13}));
    auto f2 = FieldCtx::make(2, 1);
    auto l = jumps_p2_cyclic(witt_poles(f2, 3, 7));
    EXPECT_EQ(l.jumps, R({3, 11}));
    EXPECT_EQ(lower_to_upper(l).jumps, R({3, 7}));
}

TEST(Jumps, P2UpperRuleGrid) {
    for (std::int64_t p : {2, 3, 5}) {
        auto f = FieldCtx::make(std::uint32_t(p), 1);
        for (std::int64_t n0 = 1; n0 <= 20; ++n0)
            for (std::int64_t n1 = 1; n1 <= 20; ++n1) {
                if (n0 % p == 0 || n1 % p == 0) continue;
                auto up = lower_to_upper(jumps_p2_cyclic(witt_poles(f, n0, n1)));
                EXPECT_EQ(up.jumps, R({n0, std::max(p * n0, n1)}));
            }
    }
}

TEST(Compositum, PCyclicCases) {
    auto f = FieldCtx::make(3, 1);
    auto r1 = compositum_p_cyclic(S(f, {{-1, 1}}), S(f, {{-2, 1}}));
    EXPECT_EQ(r1.upper_jumps, R({1, 2}));
    EXPECT_EQ(r1.lower_jumps, R({1, 4}));
    EXPECT_EQ(r1.group, "(Z/3)^2");

    auto r2 = compositum_p_cyclic(S(f, {{-1, 1}}), S(f, {{-1, 2}, {0, 1}}));
    EXPECT_EQ(r2.upper_jumps, R({1}));
    EXPECT_EQ(r2.orders, (std::vector<std::int64_t>{3, 1}));
    EXPECT_NE(r2.case_label.find("not totally ramified"), std::string::npos);

    auto r3 = compositum_p_cyclic(S(f, {{-2, 1}}), S(f, {{-2, 1}, {-1, 1}}));
    EXPECT_EQ(r3.upper_jumps, R({1, 2}));
    EXPECT_EQ(r3.lower_jumps, R({1, 4}));

    EXPECT_THROW(compositum_p_cyclic(S(f, {{-1, 1}}), S(f, {{-1, 2}})), InvalidInput);

    // Leading coefficients independent over F_3 need F_9.
    auto g = FieldCtx::make(3, 2);
    std::vector<std::int64_t> xc{0, 1};
    auto x = g->from_coords(xc);
    auto r4 = compositum_p_cyclic(LaurentSeries(g, {{-4, g->one()}}), LaurentSeries(g, {{-4, x}}));
    EXPECT_EQ(r4.upper_jumps, R({4}));
    EXPECT_EQ(r4.orders, (std::vector<std::int64_t>{9, 1}));
}

TEST(Compositum, P2Cases) {
    auto f = FieldCtx::make(3, 1);
    WittVec2 v{S(f, {{-1, 1}}), S(f, {{-2, 1}})};
    WittVec2 w{S(f, {{-2, 1}}), S(f, {{-5, 1}})};
    auto d = compositum_p2(v, w);
    EXPECT_EQ(d.status, Status::FormulaOnly);
    EXPECT_EQ(d.upper_jumps, R({1, 2, 3, 6}));
    EXPECT_EQ(d.group, "Z/9 x Z/9");

    WittVec2 w2{S(f, {{-1, 2}}), S(f, {{-5, 1}})};
    auto s = compositum_p2(v, w2);
    EXPECT_EQ(s.upper_jumps, R({1, 3, 5}));
    EXPECT_EQ(s.group, "Z/9 x Z/3");

    EXPECT_THROW(compositum_p2(v, v), InvalidInput);

    // beta0 differs from 2*alpha0 by a constant of nonzero trace: the
    // compositum is not totally ramified.
    auto und = compositum_p2(v, WittVec2{S(f, {{-1, 2}, {0, 1}}), S(f, {{-4, 1}})});
    EXPECT_EQ(und.status, Status::Undetermined);

    // Shared subfield with u1 = v1: the third jump is read from alpha1 - c*beta1.
    WittVec2 x{S(f, {{-1, 1}}), S(f, {{-4, 1}})};
    WittVec2 y{S(f, {{-1, 1}}), S(f, {{-4, 1}, {-2, 1}})};
    auto t = compositum_p2(x, y);
    EXPECT_EQ(t.group, "Z/9 x Z/3");
    EXPECT_EQ(t.upper_jumps, R({1, 2, 4}));

    // Collision of the third jump with u0.
    WittVec2 a{S(f, {{-2, 1}}), S(f, {{-7, 1}})};
    WittVec2 b{S(f, {{-2, 1}}), S(f, {{-7, 1}, {-2, 1}, {-1, 1}})};
    EXPECT_EQ(compositum_p2(a, b).status, Status::Undetermined);
}
