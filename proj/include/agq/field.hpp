// Arithmetic in GF(q^2), q = 2^e, with GF(q) realized as the Frobenius-fixed
// subfield.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace agq {

/// Element of GF(2^d) in polynomial basis: bit i is the coefficient of x^i.
struct Elem
{
    std::uint16_t value{0};

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t v) : value(static_cast<std::uint16_t>(v)) {}

    constexpr bool is_zero() const { return value == 0; }

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;

    // Characteristic 2: addition and subtraction are both XOR.
    friend constexpr Elem operator+(Elem a, Elem b) { return Elem(a.value ^ b.value); }
    constexpr Elem& operator+=(Elem b)
    {
        value ^= b.value;
        return *this;
    }
};

/// The two GF(2)-linear maps whose fibers give the rational points.
enum class LinearizedMap
{
    square_plus_identity,   // y -> y^2 + y
    frobenius_plus_identity // y -> y^q + y
};

class Field
{
public:
    static constexpr unsigned max_e = 6;

    /// Primitive polynomial of degree 2e, bit i = coefficient of x^i.
    static constexpr std::uint32_t builtin_modulus(unsigned e)
    {
        constexpr std::array<std::uint32_t, max_e + 1> table{
            0,
            0b111,   // x^2 + x + 1
            0x13,    // x^4 + x + 1
            0x43,    // x^6 + x + 1
            0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
            0x409,   // x^10 + x^3 + 1
            0x1053,  // x^12 + x^6 + x^4 + x + 1
        };
        return e <= max_e ? table[e] : 0;
    }

    explicit Field(unsigned e)
    {
        if (e < 1 || e > max_e)
            throw std::invalid_argument("unsupported field exponent e=" + std::to_string(e) +
                                        " (need 1 <= e <= 6)");
        e_ = e;
        degree_ = 2 * e;
        q_ = 1u << e;
        order_ = 1u << degree_;
        modulus_ = builtin_modulus(e);

        const std::uint32_t group = order_ - 1;
        exp_.assign(2 * group, Elem{});
        log_.assign(order_, 0);
        std::vector<bool> seen(order_, false);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < group; ++i) {
            if (seen[v])
                throw std::logic_error("modulus is not primitive: generator order " +
                                       std::to_string(i) + " < " + std::to_string(group));
            seen[v] = true;
            exp_[i] = Elem(v);
            exp_[i + group] = Elem(v);
            log_[v] = i;
            v <<= 1;
            if (v & order_)
                v ^= modulus_;
        }
        if (v != 1)
            throw std::logic_error("modulus is not primitive");
    }

    static std::shared_ptr<const Field> make(unsigned e) { return std::make_shared<const Field>(e); }

    unsigned e() const { return e_; }
    unsigned degree() const { return degree_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t modulus() const { return modulus_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem(1); }
    /// The class of x, primitive by construction.
    Elem generator() const { return Elem(2); }

    Elem add(Elem a, Elem b) const { return a + b; }

    Elem mul(Elem a, Elem b) const
    {
        if (a.is_zero() || b.is_zero())
            return Elem{};
        return exp_[log_[a.value] + log_[b.value]];
    }

    Elem inv(Elem a) const
    {
        if (a.is_zero())
            throw std::domain_error("inversion of zero");
        const std::uint32_t l = log_[a.value];
        return exp_[l == 0 ? 0 : (order_ - 1) - l];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t k) const
    {
        if (k == 0)
            return one();
        if (a.is_zero())
            return Elem{};
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a.value]) * k) %
                                                (order_ - 1))];
    }

    /// generator^i
    Elem exp(std::uint64_t i) const { return exp_[static_cast<std::uint32_t>(i % (order_ - 1))]; }

    std::uint32_t log(Elem a) const
    {
        if (a.is_zero())
            throw std::domain_error("logarithm of zero");
        return log_[a.value];
    }

    /// Precomputed log for hot loops; a must be nonzero.
    std::uint32_t log_unchecked(Elem a) const { return log_[a.value]; }
    Elem exp_unchecked(std::uint32_t i) const { return exp_[i]; }

    Elem frobenius_q(Elem a) const { return pow(a, q_); }
    Elem trace_to_gf_q(Elem a) const { return a + frobenius_q(a); }
    Elem norm_to_gf_q(Elem a) const { return mul(a, frobenius_q(a)); }
    bool in_subfield(Elem a) const { return frobenius_q(a) == a; }

    Elem apply(LinearizedMap map, Elem y) const
    {
        return map == LinearizedMap::square_plus_identity ? mul(y, y) + y : frobenius_q(y) + y;
    }

    /// All y with map(y) = c, ascending by encoding.
    std::vector<Elem> solve_affine_linearized(LinearizedMap map, Elem c) const
    {
        // Row r of the system holds bit r of map(y) as a mask over the input
        // bits of y; bit `degree_` carries the right-hand side.
        std::vector<std::uint32_t> rows(degree_, 0);
        for (unsigned col = 0; col < degree_; ++col) {
            const std::uint32_t image = apply(map, Elem(1u << col)).value;
            for (unsigned r = 0; r < degree_; ++r)
                if (image >> r & 1u)
                    rows[r] |= 1u << col;
        }
        for (unsigned r = 0; r < degree_; ++r)
            if (c.value >> r & 1u)
                rows[r] |= 1u << degree_;

        std::vector<int> pivot_row_of_col(degree_, -1);
        unsigned rank = 0;
        for (unsigned col = 0; col < degree_ && rank < degree_; ++col) {
            unsigned sel = rank;
            while (sel < degree_ && !(rows[sel] >> col & 1u))
                ++sel;
            if (sel == degree_)
                continue;
            std::swap(rows[sel], rows[rank]);
            for (unsigned r = 0; r < degree_; ++r)
                if (r != rank && (rows[r] >> col & 1u))
                    rows[r] ^= rows[rank];
            pivot_row_of_col[col] = static_cast<int>(rank);
            ++rank;
        }
        for (unsigned r = rank; r < degree_; ++r)
            if (rows[r] >> degree_ & 1u)
                return {};

        std::uint32_t particular = 0;
        std::vector<std::uint32_t> kernel;
        for (unsigned col = 0; col < degree_; ++col) {
            if (pivot_row_of_col[col] >= 0) {
                if (rows[pivot_row_of_col[col]] >> degree_ & 1u)
                    particular |= 1u << col;
                continue;
            }
            std::uint32_t k = 1u << col;
            for (unsigned pc = 0; pc < degree_; ++pc)
                if (pivot_row_of_col[pc] >= 0 && (rows[pivot_row_of_col[pc]] >> col & 1u))
                    k |= 1u << pc;
            kernel.push_back(k);
        }

        std::vector<Elem> out;
        out.reserve(std::size_t{1} << kernel.size());
        for (std::uint32_t mask = 0; mask < (1u << kernel.size()); ++mask) {
            std::uint32_t v = particular;
            for (std::size_t i = 0; i < kernel.size(); ++i)
                if (mask >> i & 1u)
                    v ^= kernel[i];
            out.emplace_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    unsigned e_{0};
    unsigned degree_{0};
    std::uint32_t q_{0};
    std::uint32_t order_{0};
    std::uint32_t modulus_{0};
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

} // namespace agq
