// Stabilizer codes from Hermitian self-orthogonal AG codes: parameter
// formulas, concrete symplectic check matrices and bound comparisons.

#pragma once

#include <agq/agcode.hpp>
#include <agq/distance.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agq {

class NotHermitianSelfOrthogonal : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct QuantumParams
{
    std::int64_t n{0};
    std::int64_t k_q{0};
    std::int64_t d_lower{0};
    /// m lies in the range the parameter theorem is stated for.
    bool in_theorem_range{false};

    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

namespace detail {

inline void require_power_of_two(std::int64_t q, bool odd_exponent)
{
    if (q < 2 || (q & (q - 1)) != 0)
        throw std::invalid_argument("q=" + std::to_string(q) + " is not a power of 2");
    if (odd_exponent && std::countr_zero(static_cast<std::uint64_t>(q)) % 2 == 0)
        throw std::invalid_argument("q=" + std::to_string(q) + " is not an odd power of 2");
}

} // namespace detail

/// [[2q^2, 2q^2 - 2m + q - 2, >= m + 2 - q]]_q, stated for q-1 <= m <= 2q-2.
inline QuantumParams qparams_curve_a(std::int64_t q, std::int64_t m)
{
    detail::require_power_of_two(q, false);
    const std::int64_t n = 2 * q * q;
    return {n, n - 2 * m + q - 2, m + 2 - q, q - 1 <= m && m <= 2 * q - 2};
}

/// [[3q^2 - 2q, 3q^2 - 2m - 4, >= m + 4 - 2q]]_q, stated for 2q-3 <= m <= 3q-4.
inline QuantumParams qparams_curve_b(std::int64_t q, std::int64_t m)
{
    detail::require_power_of_two(q, true);
    return {3 * q * q - 2 * q, 3 * q * q - 2 * m - 4, m + 4 - 2 * q,
            2 * q - 3 <= m && m <= 3 * q - 4};
}

inline QuantumParams qparams(CurveKind kind, std::int64_t q, std::int64_t m)
{
    return kind == CurveKind::a ? qparams_curve_a(q, m) : qparams_curve_b(q, m);
}

enum class DistanceCertificate
{
    none,
    exhaustive_messages,
    exhaustive_supports,
    information_sets
};

inline std::string_view to_string(DistanceCertificate c)
{
    switch (c) {
    case DistanceCertificate::exhaustive_messages: return "exhaustive-messages";
    case DistanceCertificate::exhaustive_supports: return "exhaustive-supports";
    case DistanceCertificate::information_sets: return "information-sets";
    case DistanceCertificate::none: break;
    }
    return "none";
}

struct QuantumCodeRecord
{
    std::uint32_t q{0};
    std::size_t n{0};
    std::size_t k_classical{0};
    std::size_t k_q{0};
    std::size_t d_lower{1};
    std::optional<std::size_t> d_exact;
    DistanceCertificate certificate{DistanceCertificate::none};
    CurveKind kind{CurveKind::a};
    unsigned m{0};
    bool in_theorem_range{false};
    /// 2k x 2n over GF(q) in (X|Z) layout, entries encoded in GF(q^2).
    std::optional<Matrix> stabilizer;
};

/// Coordinate-wise split of mu*c = a + gamma*b (a, b over GF(q)) for
/// mu in {1, gamma}, emitting (a | b) per row. gamma must lie outside GF(q).
inline Matrix symplectic_expansion(const LinearCode& code, Elem gamma)
{
    const Field& f = code.field();
    const std::size_t n = code.length();
    const Elem tr_gamma = f.trace_to_gf_q(gamma);
    if (tr_gamma.is_zero())
        throw std::invalid_argument("gamma lies in GF(q)");
    const Elem tr_inv = f.inv(tr_gamma);

    Matrix out(2 * code.dimension(), 2 * n);
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        const auto row = code.generator().row(r);
        for (std::size_t which = 0; which < 2; ++which) {
            const Elem mu = which == 0 ? f.one() : gamma;
            auto dst = out.row(2 * r + which);
            for (std::size_t c = 0; c < n; ++c) {
                const Elem v = f.mul(mu, row[c]);
                const Elem b = f.mul(f.trace_to_gf_q(v), tr_inv);
                dst[c] = v + f.mul(gamma, b);
                dst[n + c] = b;
            }
        }
    }
    return out;
}

/// a.b' + a'.b over all row pairs of a (X|Z) matrix (characteristic 2).
inline bool symplectic_orthogonal(const Field& f, const Matrix& s)
{
    const std::size_t n = s.cols() / 2;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.rows(); ++j) {
            const auto u = s.row(i);
            const auto v = s.row(j);
            Elem acc;
            for (std::size_t c = 0; c < n; ++c)
                acc += f.mul(u[c], v[n + c]) + f.mul(v[c], u[n + c]);
            if (!acc.is_zero())
                return false;
        }
    return true;
}

/// Symplectic check matrix of the stabilizer for a Hermitian self-orthogonal
/// code. Tries the field generator first, then every gamma outside GF(q).
inline Matrix expand_to_symplectic(const LinearCode& code)
{
    const Field& f = code.field();
    auto admissible = [&](const Matrix& s) {
        return rank(f, s) == 2 * code.dimension() && symplectic_orthogonal(f, s);
    };
    {
        Matrix s = symplectic_expansion(code, f.generator());
        if (admissible(s))
            return s;
    }
    for (std::uint32_t v = 2; v < f.order(); ++v) {
        const Elem gamma(v);
        if (f.in_subfield(gamma) || gamma == f.generator())
            continue;
        Matrix s = symplectic_expansion(code, gamma);
        if (admissible(s))
            return s;
    }
    throw NotHermitianSelfOrthogonal("no gamma yields a symplectic-orthogonal expansion");
}

struct DeriveOptions
{
    std::uint64_t budget{default_distance_budget};
    std::size_t trials{200};
    std::uint64_t seed{0};
    unsigned workers{1};
    std::size_t isd_max_level{16};
    bool compute_exact{true};
    bool with_stabilizer{false};
};

inline bool in_theorem_range(CurveKind kind, std::int64_t q, std::int64_t m)
{
    return qparams(kind, q, m).in_theorem_range;
}

inline QuantumCodeRecord derive_quantum(const AgCode& ag, const DeriveOptions& opts = {})
{
    const LinearCode& code = ag.code;
    if (!is_hermitian_self_orthogonal(code))
        throw NotHermitianSelfOrthogonal("C_" + std::to_string(ag.m) +
                                         " is not Hermitian self-orthogonal");
    QuantumCodeRecord rec;
    rec.q = ag.curve->q();
    rec.n = code.length();
    rec.k_classical = code.dimension();
    rec.k_q = rec.n - 2 * rec.k_classical;
    rec.d_lower = ag.dual_designed_distance;
    rec.kind = ag.curve->kind();
    rec.m = ag.m;
    rec.in_theorem_range = in_theorem_range(rec.kind, rec.q, ag.m);

    if (opts.compute_exact) {
        // Frobenius preserves weights, so this matches the distance of C_{n+2g-2-m}.
        const LinearCode target = hermitian_dual(code);
        const double by_messages = message_enumeration_cost(target);
        const double by_supports = support_enumeration_cost(target);
        const auto budget = static_cast<double>(opts.budget);
        if (std::min(by_messages, by_supports) <= budget) {
            if (by_messages <= by_supports) {
                rec.d_exact = min_distance_by_messages(target, opts.workers);
                rec.certificate = DistanceCertificate::exhaustive_messages;
            } else {
                rec.d_exact = min_distance_by_supports(target);
                rec.certificate = DistanceCertificate::exhaustive_supports;
            }
        } else {
            const IsdBounds isd = min_distance_lower_isd(target, opts.isd_max_level, opts.budget);
            // The true distance is at least d_lower, so a smaller certified
            // bound can never meet an upper bound.
            if (isd.lower >= rec.d_lower) {
                const std::size_t upper =
                    std::min(isd.upper, min_weight_upper(target, opts.trials, opts.seed));
                if (isd.lower >= upper) {
                    rec.d_exact = upper;
                    rec.certificate = DistanceCertificate::information_sets;
                }
            }
        }
        if (rec.d_exact && *rec.d_exact < rec.d_lower)
            throw std::logic_error("computed distance below designed distance");
    }
    if (opts.with_stabilizer)
        rec.stabilizer = expand_to_symplectic(code);
    return rec;
}

struct SingletonCheck
{
    /// n + 2 - (k_Q + 2d)
    std::int64_t defect{0};
    bool within{true};
};

inline std::size_t effective_distance(const QuantumCodeRecord& rec)
{
    return rec.d_exact.value_or(rec.d_lower);
}

inline SingletonCheck singleton_check(const QuantumCodeRecord& rec)
{
    const auto d = static_cast<std::int64_t>(effective_distance(rec));
    const std::int64_t defect =
        static_cast<std::int64_t>(rec.n) + 2 - (static_cast<std::int64_t>(rec.k_q) + 2 * d);
    return {defect, defect >= 0};
}

/// sum_{j <= t} C(n, j) (q^2 - 1)^j
inline boost::multiprecision::cpp_int hamming_sphere_sum(std::size_t n, std::uint32_t q, std::size_t t)
{
    using boost::multiprecision::cpp_int;
    const cpp_int units = cpp_int(q) * q - 1;
    cpp_int sum = 0;
    cpp_int binom = 1;
    cpp_int power = 1;
    for (std::size_t j = 0; j <= t && j <= n; ++j) {
        if (j > 0) {
            binom = binom * (n - j + 1) / j;
            power *= units;
        }
        sum += binom * power;
    }
    return sum;
}

/// q^(n-k_Q) >= sum_{j <= (d-1)/2} C(n, j) (q^2-1)^j, in exact arithmetic.
inline bool hamming_check(const QuantumCodeRecord& rec)
{
    const std::size_t d = effective_distance(rec);
    const std::size_t t = d == 0 ? 0 : (d - 1) / 2;
    return boost::multiprecision::pow(boost::multiprecision::cpp_int(rec.q),
                                      static_cast<unsigned>(rec.n - rec.k_q)) >=
           hamming_sphere_sum(rec.n, rec.q, t);
}

} // namespace agq
