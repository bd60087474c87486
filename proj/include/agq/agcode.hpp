// One-point evaluation codes C_m = C_L(D, m P_inf) and the computational
// checks of their duality and self-orthogonality.

#pragma once

#include <agq/curve.hpp>
#include <agq/lincode.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agq {

struct AgCode
{
    CurvePtr curve;
    unsigned m{0};
    MonomialBasis basis;
    LinearCode code;
    /// n - m, floored at 1
    std::size_t designed_distance{1};
    /// m - (2g - 2), floored at 1
    std::size_t dual_designed_distance{1};
};

/// Evaluation matrix of the monomial basis of L(m P_inf), one row per monomial.
inline Matrix evaluation_matrix(const Curve& curve, const MonomialBasis& basis)
{
    const auto& points = curve.points();
    Matrix out(basis.size(), points.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c)
            out(r, c) = curve.evaluate(basis.monomials[r], points[c]);
    return out;
}

inline AgCode build(const CurvePtr& curve, unsigned m)
{
    if (m >= curve->n())
        throw std::invalid_argument("m=" + std::to_string(m) + " out of range, need m < n=" +
                                    std::to_string(curve->n()));
    AgCode out{curve, m, curve->rr_basis(m), LinearCode(curve->field_ptr(), curve->n())};
    out.code = LinearCode::from_rows(curve->field_ptr(), curve->n(),
                                     evaluation_matrix(*curve, out.basis));
    const auto n = static_cast<std::int64_t>(curve->n());
    const auto g = static_cast<std::int64_t>(curve->genus());
    out.designed_distance = static_cast<std::size_t>(std::max<std::int64_t>(1, n - m));
    out.dual_designed_distance =
        static_cast<std::size_t>(std::max<std::int64_t>(1, static_cast<std::int64_t>(m) - (2 * g - 2)));
    return out;
}

/// n + 2g - 2 - m
inline std::int64_t dual_parameter(const Curve& curve, std::int64_t m)
{
    return static_cast<std::int64_t>(curve.n()) + 2 * static_cast<std::int64_t>(curve.genus()) - 2 -
           m;
}

/// Both m and its dual parameter give evaluation codes.
inline bool duality_constructible(const Curve& curve, std::int64_t m)
{
    const auto n = static_cast<std::int64_t>(curve.n());
    const std::int64_t mp = dual_parameter(curve, m);
    return m >= 0 && m < n && mp >= 0 && mp < n;
}

/// dual(C_m) == C_{n+2g-2-m}, compared in canonical form.
inline bool verify_duality(const CurvePtr& curve, unsigned m)
{
    if (!duality_constructible(*curve, m))
        throw std::invalid_argument("m=" + std::to_string(m) +
                                    " outside the constructible duality range");
    const AgCode primal = build(curve, m);
    const AgCode other = build(curve, static_cast<unsigned>(dual_parameter(*curve, m)));
    return equal(dual(primal.code), other.code);
}

/// n/2 + g - 1
inline std::int64_t euclidean_threshold(const Curve& curve)
{
    return static_cast<std::int64_t>(curve.n() / 2) + curve.genus() - 1;
}

/// 2q - 2 on curve a, 3q - 4 on curve b.
inline std::int64_t hermitian_threshold(const Curve& curve)
{
    const auto q = static_cast<std::int64_t>(curve.q());
    return curve.kind() == CurveKind::a ? 2 * q - 2 : 3 * q - 4;
}

struct HermitianScanRow
{
    unsigned m{0};
    bool self_orthogonal{false};
    /// m is within the sufficient condition, so the verdict must be true.
    bool guaranteed{false};
};

inline std::vector<HermitianScanRow> scan_hermitian(const CurvePtr& curve, unsigned m_max)
{
    if (m_max >= curve->n())
        throw std::invalid_argument("m_max=" + std::to_string(m_max) + " must be below n=" +
                                    std::to_string(curve->n()));
    std::vector<HermitianScanRow> rows;
    for (unsigned m = 0; m <= m_max; ++m)
        rows.push_back({m, is_hermitian_self_orthogonal(build(curve, m).code),
                        static_cast<std::int64_t>(m) <= hermitian_threshold(*curve)});
    return rows;
}

} // namespace agq
