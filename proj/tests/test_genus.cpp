#include <gtest/gtest.h>

#include "wildram/errors.hpp"
#include "wildram/genus.hpp"

using namespace wildram;

namespace {

// Polynomial in x: exponent -> coefficient.
LaurentSeries X(const FieldPtr& f, std::map<std::int64_t, std::int64_t> t) {
    std::map<std::int64_t, FieldElem> m;
    for (auto [k, c] : t) m[k] = f->from_int(c);
    return LaurentSeries(f, m);
}

CoverSpec cover(CoverKind k, const FieldPtr& f, std::map<std::int64_t, std::int64_t> a,
                std::map<std::int64_t, std::int64_t> b = {}) {
    return CoverSpec::from_x_polynomials(k, X(f, a), X(f, b));
}

std::int64_t rh_noncyclic_drop(std::int64_t p, std::int64_t n0, std::int64_t d) {
    return ((n0 - 1) * p * p - (n0 - d) * p - d + 1) / 2;
}

}  // namespace

TEST(Genus, AnchoredValues) {
    auto F2 = FieldCtx::make(2, 1), F3 = FieldCtx::make(3, 1);
    auto cyc = cover(CoverKind::Cyclic, F2, {{1, 1}}, {{1, 1}});
    EXPECT_EQ(genus_closed_form(cyc).genus, Rational(1));
    EXPECT_EQ(genus_via_rh(cyc).genus, Rational(1));
    EXPECT_EQ(cover_profile(cyc).jumps, (std::vector<Rational>{Rational(1), Rational(3)}));
    EXPECT_EQ(different_degree(cover_profile(cyc)), 8);

    auto ele = cover(CoverKind::Elementary, F2, {{1, 1}}, {{3, 1}});
    EXPECT_EQ(genus_closed_form(ele).genus, Rational(2));
    EXPECT_EQ(genus_via_rh(ele).genus, Rational(2));
    EXPECT_EQ(cover_profile(ele).jumps, (std::vector<Rational>{Rational(1), Rational(5)}));
    EXPECT_EQ(different_degree(cover_profile(ele)), 10);

    auto pc = cover(CoverKind::PCyclic, F3, {{2, 1}});
    EXPECT_EQ(genus_closed_form(pc).genus, Rational(1));
    EXPECT_EQ(genus_via_rh(pc).genus, Rational(1));
}

TEST(Genus, PCyclicGrid) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = FieldCtx::make(p, 1);
        for (std::int64_t r = 1; r <= 15; ++r) {
            if (r % p == 0) continue;
            auto c = cover(CoverKind::PCyclic, F, {{r, 1}, {1, 1}});
            EXPECT_EQ(genus_via_rh(c).genus, Rational((std::int64_t(p) - 1) * (r - 1) / 2));
            EXPECT_EQ(genus_closed_form(c).genus, genus_via_rh(c).genus);
        }
    }
}

TEST(Genus, CyclicGridAgrees) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = FieldCtx::make(p, 1);
        for (std::int64_t n0 = 1; n0 <= 15; ++n0) {
            if (n0 % p == 0) continue;
            std::int64_t prev = -1;
            for (std::int64_t n1 = 1; n1 <= 15; ++n1) {
                if (n1 % p == 0) continue;
                auto c = cover(CoverKind::Cyclic, F, {{n0, 1}}, {{n1, 1}});
                auto rep = genus_report(c);
                EXPECT_EQ(rep.status, Status::FormulaOnly) << p << " " << n0 << " " << n1;
                EXPECT_EQ(genus_closed_form(c).genus, genus_via_rh(c).genus);
                EXPECT_GE(*rep.genus, prev);
                prev = *rep.genus;
            }
        }
    }
}

TEST(Genus, ElementaryDistinctAndNoDrop) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = FieldCtx::make(p, 1);
        for (std::int64_t n0 = 1; n0 <= 15; ++n0) {
            if (n0 % p == 0) continue;
            for (std::int64_t n1 = n0 + 1; n1 <= 15; ++n1) {
                if (n1 % p == 0) continue;
                auto c = cover(CoverKind::Elementary, F, {{n0, 1}}, {{n1, 1}});
                EXPECT_EQ(genus_closed_form(c).genus, genus_via_rh(c).genus);
                EXPECT_EQ(genus_report(c).status, Status::FormulaOnly);
            }
        }
    }
    // Equal pole orders with no drop need leading coefficients independent over F_p.
    auto F9 = FieldCtx::make(3, 2);
    const FieldElem w = F9->from_coords(std::vector<std::int64_t>{0, 1});
    std::map<std::int64_t, FieldElem> a{{-4, F9->one()}}, b{{-4, w}};
    CoverSpec c{CoverKind::Elementary, LaurentSeries(F9, a), LaurentSeries(F9, b)};
    EXPECT_EQ(genus_closed_form(c).genus, Rational((3 * 9 - 4 + 1) / 2));
    EXPECT_EQ(genus_report(c).status, Status::FormulaOnly);
}

TEST(Genus, ElementaryDropIsFlagged) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = FieldCtx::make(p, 1);
        for (std::int64_t n0 = 2; n0 <= 15; ++n0) {
            if (n0 % p == 0) continue;
            std::int64_t d = n0 - 1;
            while (d % p == 0) --d;
            if (d < 1) continue;
            auto c = cover(CoverKind::Elementary, F, {{n0, 1}}, {{n0, 1}, {d, 1}});
            auto rep = genus_report(c);
            EXPECT_EQ(rep.status, Status::DiscrepancyFlag);
            EXPECT_EQ(*rep.genus, rh_noncyclic_drop(p, n0, d));
            EXPECT_EQ(genus_via_rh(c).genus, Rational(rh_noncyclic_drop(p, n0, d)));
            EXPECT_NE(genus_closed_form(c).genus, genus_via_rh(c).genus);
            ASSERT_EQ(rep.notes.size(), 2u);
            EXPECT_NE(rep.notes[0].find("closed-form value"), std::string::npos);
            EXPECT_NE(rep.notes[1].find("Riemann-Hurwitz"), std::string::npos);
        }
    }
}

TEST(Genus, Rejections) {
    auto F3 = FieldCtx::make(3, 1);
    EXPECT_THROW(cover(CoverKind::PCyclic, F3, {{-1, 1}}), InvalidInput);
    EXPECT_THROW(genus_via_rh(cover(CoverKind::PCyclic, F3, {{0, 1}})), InvalidInput);
    EXPECT_THROW(genus_via_rh(cover(CoverKind::Elementary, F3, {{2, 1}}, {{2, 2}})), InvalidInput);
    EXPECT_THROW(genus_via_rh(cover(CoverKind::Elementary, F3, {{2, 1}}, {{2, 2}, {0, 1}})), InvalidInput);
    EXPECT_THROW(genus_via_rh(cover(CoverKind::Cyclic, F3, {{0, 1}}, {{2, 1}})), InvalidInput);
    LaurentSeries inexact(F3, {{1, F3->one()}}, 10);
    EXPECT_THROW(CoverSpec::from_x_polynomials(CoverKind::PCyclic, inexact, X(F3, {})), InvalidInput);
}
