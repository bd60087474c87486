// The two maximal curves over GF(q^2), their finite rational points and the
// monomial bases of L(m P_inf).
//
//   curve A:  y^2 + y = x^(q+1)   genus q/2,   n = 2q^2
//   curve B:  y^q + y = x^3       genus q-1,   n = 3q^2 - 2q   (e odd)

#pragma once

#include <agq/field.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agq {

enum class CurveKind
{
    a,
    b
};

inline std::string_view to_string(CurveKind kind) { return kind == CurveKind::a ? "a" : "b"; }

struct Point
{
    Elem x;
    Elem y;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// x^x_exp * y^y_exp
struct Monomial
{
    unsigned x_exp{0};
    unsigned y_exp{0};

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialBasis
{
    unsigned m{0};
    std::vector<Monomial> monomials;   // ascending pole order
    std::vector<unsigned> pole_orders;

    std::size_t size() const { return monomials.size(); }
};

class Curve
{
public:
    Curve(CurveKind kind, FieldPtr field) : kind_(kind), field_(std::move(field))
    {
        if (!field_)
            throw std::invalid_argument("null field");
        const unsigned e = field_->e();
        q_ = field_->q();
        if (kind_ == CurveKind::b && e % 2 == 0)
            throw std::invalid_argument("curve b needs q an odd power of 2 (got q=" +
                                        std::to_string(q_) + ")");
        if (kind_ == CurveKind::a) {
            genus_ = q_ / 2;
            n_ = 2 * static_cast<std::size_t>(q_) * q_;
        } else {
            genus_ = q_ - 1;
            n_ = 3 * static_cast<std::size_t>(q_) * q_ - 2 * q_;
        }
        enumerate_points();
    }

    static std::shared_ptr<const Curve> make(CurveKind kind, unsigned e)
    {
        return std::make_shared<const Curve>(kind, Field::make(e));
    }

    CurveKind kind() const { return kind_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::uint32_t q() const { return field_->q(); }
    unsigned genus() const { return genus_; }
    std::size_t n() const { return n_; }
    const std::vector<Point>& points() const { return points_; }

    unsigned x_pole_order() const { return kind_ == CurveKind::a ? 2 : q_; }
    unsigned y_pole_order() const { return kind_ == CurveKind::a ? q_ + 1 : 3; }
    /// Exclusive bound on the y exponent; higher powers reduce via the curve equation.
    unsigned y_exponent_bound() const { return kind_ == CurveKind::a ? 2 : q_; }

    unsigned pole_order(Monomial mono) const
    {
        return mono.x_exp * x_pole_order() + mono.y_exp * y_pole_order();
    }

    /// Right-hand side of the curve equation at x.
    Elem fiber_value(Elem x) const
    {
        return kind_ == CurveKind::a ? field_->pow(x, q_ + 1) : field_->pow(x, 3);
    }

    LinearizedMap fiber_map() const
    {
        return kind_ == CurveKind::a ? LinearizedMap::square_plus_identity
                                     : LinearizedMap::frobenius_plus_identity;
    }

    bool on_curve(Point p) const { return field_->apply(fiber_map(), p.y) == fiber_value(p.x); }

    MonomialBasis rr_basis(unsigned m) const
    {
        MonomialBasis basis;
        basis.m = m;
        const unsigned px = x_pole_order();
        const unsigned py = y_pole_order();
        for (unsigned order = 0; order <= m; ++order) {
            // Distinct pole orders: each order has at most one representation
            // with y_exp below the bound.
            for (unsigned b = 0; b < y_exponent_bound() && b * py <= order; ++b) {
                if ((order - b * py) % px == 0) {
                    basis.monomials.push_back({(order - b * py) / px, b});
                    basis.pole_orders.push_back(order);
                    break;
                }
            }
        }
        return basis;
    }

    Elem evaluate(Monomial mono, Point p) const
    {
        return field_->mul(field_->pow(p.x, mono.x_exp), field_->pow(p.y, mono.y_exp));
    }

private:
    void enumerate_points()
    {
        points_.reserve(n_);
        for (std::uint32_t xv = 0; xv < field_->order(); ++xv) {
            const Elem x(xv);
            for (Elem y : field_->solve_affine_linearized(fiber_map(), fiber_value(x)))
                points_.push_back({x, y});
        }
        if (points_.size() != n_)
            throw std::logic_error("point count " + std::to_string(points_.size()) +
                                   " differs from n=" + std::to_string(n_));
    }

    CurveKind kind_;
    FieldPtr field_;
    std::uint32_t q_{0};
    unsigned genus_{0};
    std::size_t n_{0};
    std::vector<Point> points_;
};

using CurvePtr = std::shared_ptr<const Curve>;

} // namespace agq
