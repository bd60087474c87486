#include <agq/agcode.hpp>
#include <agq/curve.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace agq {
namespace {

struct CurveCase
{
    CurveKind kind;
    unsigned e;
};

std::vector<CurveCase> supported_small()
{
    return {{CurveKind::a, 1}, {CurveKind::a, 2}, {CurveKind::a, 3},
            {CurveKind::b, 1}, {CurveKind::b, 3}};
}

TEST(Curve, FirstCurveOverGf4)
{
    const auto c = Curve::make(CurveKind::a, 1);
    EXPECT_EQ(c->n(), 8u);
    EXPECT_EQ(c->genus(), 1u);
    const auto& pts = c->points();
    EXPECT_EQ(pts[0], (Point{Elem(0), Elem(0)}));
    EXPECT_EQ(pts[1], (Point{Elem(0), Elem(1)}));
}

TEST(Curve, PublishedLengthsAndGenera)
{
    const auto a4 = Curve::make(CurveKind::a, 2);
    EXPECT_EQ(a4->n(), 32u);
    EXPECT_EQ(a4->genus(), 2u);
    const auto b8 = Curve::make(CurveKind::b, 3);
    EXPECT_EQ(b8->n(), 176u);
    EXPECT_EQ(b8->genus(), 7u);
}

TEST(Curve, SecondCurveNeedsOddExponent)
{
    EXPECT_THROW(Curve::make(CurveKind::b, 2), std::invalid_argument);
    EXPECT_THROW(Curve::make(CurveKind::b, 4), std::invalid_argument);
}

TEST(Curve, PointsAreDistinctSortedOnCurveAndMaximal)
{
    for (auto [kind, e] : supported_small()) {
        const auto c = Curve::make(kind, e);
        const auto& pts = c->points();
        EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
        EXPECT_EQ(std::adjacent_find(pts.begin(), pts.end()), pts.end());
        for (const Point& p : pts)
            ASSERT_TRUE(c->on_curve(p));
        // Brute force count of affine solutions.
        std::size_t count = 0;
        for (std::uint32_t x = 0; x < c->field().order(); ++x)
            for (std::uint32_t y = 0; y < c->field().order(); ++y)
                count += c->on_curve({Elem(x), Elem(y)});
        EXPECT_EQ(count, c->n());
        const std::size_t q = c->q();
        EXPECT_EQ(c->n() + 1, q * q + 1 + 2 * c->genus() * q) << "Hasse-Weil equality";
    }
}

TEST(Curve, SecondCurveXValuesAreRootsOfTheSplittingPolynomial)
{
    for (unsigned e : {1u, 3u}) {
        const auto c = Curve::make(CurveKind::b, e);
        const Field& f = c->field();
        const std::uint32_t q = f.q();
        std::set<std::uint16_t> xs;
        for (const Point& p : c->points())
            xs.insert(p.x.value);
        std::set<std::uint16_t> roots;
        for (std::uint32_t x = 0; x < f.order(); ++x)
            if (Elem(x) + f.pow(Elem(x), 3 * q - 2) == f.zero())
                roots.insert(static_cast<std::uint16_t>(x));
        EXPECT_EQ(xs, roots);
        EXPECT_EQ(xs.size(), 3 * q - 2);
        for (auto x : xs)
            EXPECT_EQ(std::count_if(c->points().begin(), c->points().end(),
                                    [&](const Point& p) { return p.x.value == x; }),
                      static_cast<long>(q));
    }
}

TEST(Curve, RiemannRochBasisExamples)
{
    const auto a2 = Curve::make(CurveKind::a, 1);
    const auto b2 = a2->rr_basis(2);
    EXPECT_EQ(b2.monomials, (std::vector<Monomial>{{0, 0}, {1, 0}}));

    const auto a4 = Curve::make(CurveKind::a, 2);
    const auto b6 = a4->rr_basis(6);
    EXPECT_EQ(b6.monomials, (std::vector<Monomial>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}}));
    EXPECT_EQ(b6.pole_orders, (std::vector<unsigned>{0, 2, 4, 5, 6}));

    for (auto [kind, e] : supported_small()) {
        const auto b0 = Curve::make(kind, e)->rr_basis(0);
        EXPECT_EQ(b0.monomials, (std::vector<Monomial>{{0, 0}}));
    }
}

TEST(Curve, BasisInvariantsAndGapCount)
{
    for (auto [kind, e] : supported_small()) {
        const auto c = Curve::make(kind, e);
        const unsigned g = c->genus();
        const auto top = c->rr_basis(static_cast<unsigned>(c->n() - 1));
        std::set<unsigned> orders(top.pole_orders.begin(), top.pole_orders.end());
        EXPECT_EQ(orders.size(), top.pole_orders.size()) << "distinct pole orders";
        for (std::size_t i = 0; i < top.size(); ++i) {
            EXPECT_LT(top.monomials[i].y_exp, c->y_exponent_bound());
            EXPECT_EQ(c->pole_order(top.monomials[i]), top.pole_orders[i]);
        }
        unsigned gaps = 0;
        for (unsigned v = 0; v <= 2 * g; ++v)
            gaps += !orders.contains(v);
        EXPECT_EQ(gaps, g);
        for (unsigned m = 0; m < c->n(); ++m) {
            const auto basis = c->rr_basis(m);
            const auto expected = std::count_if(orders.begin(), orders.end(),
                                                [m](unsigned v) { return v <= m; });
            ASSERT_EQ(basis.size(), static_cast<std::size_t>(expected));
            if (m > 2 * g - 2)
                ASSERT_EQ(basis.size(), m - g + 1) << "m=" << m;
        }
    }
}

TEST(Curve, EvaluationsAreIndependentBelowN)
{
    for (auto [kind, e] : supported_small()) {
        const auto c = Curve::make(kind, e);
        const auto basis = c->rr_basis(static_cast<unsigned>(c->n() - 1));
        EXPECT_EQ(rank(c->field(), evaluation_matrix(*c, basis)), basis.size());
    }
}

TEST(Curve, EvaluateMonomial)
{
    const auto c = Curve::make(CurveKind::a, 1);
    const Field& f = c->field();
    const Elem omega(2);
    const Elem omega2 = f.mul(omega, omega);
    EXPECT_EQ(c->evaluate({0, 0}, {omega, omega}), f.one());
    EXPECT_EQ(c->evaluate({1, 0}, {omega, omega}), omega);
    EXPECT_EQ(c->evaluate({1, 1}, {omega, omega2}), f.one());
}

} // namespace
} // namespace agq
