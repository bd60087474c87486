// Minimum distance: two exhaustive routes, a certified information-set lower
// bound and a randomized information-set upper bound.

#pragma once

#include <agq/lincode.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace agq {

/// Distance of the zero code.
inline constexpr std::size_t infinite_distance = std::numeric_limits<std::size_t>::max();

inline constexpr std::uint64_t default_distance_budget = std::uint64_t{1} << 24;

class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t weight(std::span<const Elem> v)
{
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); }));
}

/// scaled[(row * (Q-1) + s-1) * n + c] = s * gen(row, c)
class ScaledRows
{
public:
    explicit ScaledRows(const Field& f, const Matrix& gen)
        : n_(gen.cols()), units_(f.order() - 1), data_(gen.rows() * units_ * n_)
    {
        for (std::size_t r = 0; r < gen.rows(); ++r)
            for (std::uint32_t s = 1; s <= units_; ++s) {
                Elem* out = data_.data() + (r * units_ + (s - 1)) * n_;
                for (std::size_t c = 0; c < n_; ++c)
                    out[c] = f.mul(Elem(s), gen(r, c));
            }
    }

    std::span<const Elem> get(std::size_t row, std::uint32_t s) const
    {
        return {data_.data() + (row * units_ + (s - 1)) * n_, n_};
    }

    std::uint32_t units() const { return units_; }

private:
    std::size_t n_;
    std::uint32_t units_;
    std::vector<Elem> data_;
};

inline void add_into(std::span<Elem> dst, std::span<const Elem> a, std::span<const Elem> b)
{
    for (std::size_t c = 0; c < dst.size(); ++c)
        dst[c] = a[c] + b[c];
}

inline double binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Depth-first enumeration of sum_{j in S} s_j g_j over increasing row sets S
/// starting at `next`; every visited vector is one normalized message.
class MessageWalker
{
public:
    MessageWalker(const ScaledRows& rows, std::size_t k, std::size_t n)
        : rows_(rows), k_(k), n_(n), stack_((k + 1) * n)
    {
    }

    std::size_t run(std::span<const Elem> start, std::size_t next)
    {
        best_ = infinite_distance;
        std::copy(start.begin(), start.end(), stack_.begin());
        walk(0, next);
        return best_;
    }

private:
    void walk(std::size_t depth, std::size_t next)
    {
        std::span<const Elem> cur{stack_.data() + depth * n_, n_};
        best_ = std::min(best_, weight(cur));
        if (best_ == 1)
            return;
        std::span<Elem> child{stack_.data() + (depth + 1) * n_, n_};
        for (std::size_t j = next; j < k_; ++j)
            for (std::uint32_t s = 1; s <= rows_.units(); ++s) {
                add_into(child, cur, rows_.get(j, s));
                walk(depth + 1, j + 1);
                if (best_ == 1)
                    return;
            }
    }

    const ScaledRows& rows_;
    std::size_t k_;
    std::size_t n_;
    std::vector<Elem> stack_;
    std::size_t best_{infinite_distance};
};

} // namespace detail

/// Number of codewords visited by min_distance_by_messages (one per projective point).
inline double message_enumeration_cost(const LinearCode& code)
{
    const double q2 = code.field().order();
    return (std::pow(q2, static_cast<double>(code.dimension())) - 1.0) / (q2 - 1.0);
}

/// Worst-case number of column subsets visited by min_distance_by_supports
/// (all sizes up to the Singleton bound n-k+1).
inline double support_enumeration_cost(const LinearCode& code)
{
    const std::size_t n = code.length();
    const std::size_t top = std::min(n, n - code.dimension() + 1);
    double total = 0.0;
    for (std::size_t w = 1; w <= top; ++w)
        total += detail::binomial(n, w);
    return total;
}

/// Exact distance by walking every nonzero message up to scalars. Work is split
/// by (leading row, coefficient of the following row) across `workers` threads.
inline std::size_t min_distance_by_messages(const LinearCode& code, unsigned workers = 1)
{
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0)
        return infinite_distance;
    const Field& f = code.field();
    const Matrix& g = code.generator();
    const detail::ScaledRows scaled(f, g);

    struct Task
    {
        std::size_t lead;
        std::uint32_t next_coeff; // coefficient of row lead+1 (0 allowed)
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < k; ++i) {
        if (i + 1 == k) {
            tasks.push_back({i, 0});
            continue;
        }
        for (std::uint32_t c = 0; c < f.order(); ++c)
            tasks.push_back({i, c});
    }

    std::atomic<std::size_t> next_task{0};
    std::atomic<std::size_t> best{infinite_distance};
    auto worker = [&] {
        detail::MessageWalker walker(scaled, k, n);
        std::vector<Elem> start(n);
        for (std::size_t t; (t = next_task.fetch_add(1)) < tasks.size();) {
            if (best.load() == 1)
                return;
            const Task task = tasks[t];
            std::copy(g.row(task.lead).begin(), g.row(task.lead).end(), start.begin());
            if (task.next_coeff != 0)
                detail::add_into(start, start, scaled.get(task.lead + 1, task.next_coeff));
            const std::size_t w = walker.run(start, task.lead + 2);
            std::size_t prev = best.load();
            while (w < prev && !best.compare_exchange_weak(prev, w)) {
            }
        }
    };

    workers = std::max(1u, workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
    }
    return best.load();
}

/// Exact distance as the size of the smallest linearly dependent set of
/// parity-check columns, by iterative deepening over column subsets.
inline std::size_t min_distance_by_supports(const LinearCode& code)
{
    const std::size_t n = code.length();
    if (code.dimension() == 0)
        return infinite_distance;
    if (code.dimension() == n)
        return 1;
    const Field& f = code.field();
    const Matrix h = dual(code).generator();
    const std::size_t r = h.rows();

    std::vector<std::vector<Elem>> columns(n, std::vector<Elem>(r));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < r; ++i)
            columns[c][i] = h(i, c);

    // basis[d] is the reduced d-th chosen column, normalized at pivot[d].
    std::vector<std::vector<Elem>> basis(r + 1, std::vector<Elem>(r));
    std::vector<std::size_t> pivot(r + 1);

    auto search = [&](auto&& self, std::size_t depth, std::size_t target, std::size_t start) -> bool {
        for (std::size_t c = start; c + (target - depth) <= n; ++c) {
            std::vector<Elem>& v = basis[depth];
            v = columns[c];
            for (std::size_t d = 0; d < depth; ++d)
                detail::axpy(f, v, v[pivot[d]], basis[d]);
            const auto nz = std::find_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); });
            if (nz == v.end()) {
                // Subsets below `target` are all independent, so this is minimal.
                if (depth + 1 == target)
                    return true;
                continue;
            }
            if (depth + 1 == target)
                continue;
            pivot[depth] = static_cast<std::size_t>(nz - v.begin());
            detail::scale(f, v, f.inv(*nz));
            if (self(self, depth + 1, target, c + 1))
                return true;
        }
        return false;
    };

    for (std::size_t w = 1; w <= r + 1; ++w)
        if (search(search, 0, w, 0))
            return w;
    throw std::logic_error("no dependent column set within the Singleton bound");
}

/// Exact distance via whichever exhaustive route is cheaper.
inline std::size_t min_distance_exhaustive(const LinearCode& code,
                                           std::uint64_t budget = default_distance_budget,
                                           unsigned workers = 1)
{
    if (code.dimension() == 0)
        return infinite_distance;
    const double by_messages = message_enumeration_cost(code);
    const double by_supports = support_enumeration_cost(code);
    const double cheapest = std::min(by_messages, by_supports);
    if (cheapest > static_cast<double>(budget))
        throw BudgetExceeded("exhaustive distance needs ~" + std::to_string(cheapest) +
                             " steps, budget is " + std::to_string(budget));
    return by_messages <= by_supports ? min_distance_by_messages(code, workers)
                                      : min_distance_by_supports(code);
}

struct IsdBounds
{
    std::size_t lower{0};
    /// Lightest codeword weight met during enumeration (infinite if none).
    std::size_t upper{infinite_distance};
    std::size_t information_sets{0};
    std::size_t level{0};
};

/// Brouwer-Zimmermann lower bound over a maximal family of disjoint
/// information sets. Level w is enumerated only if it fits the budget.
inline IsdBounds min_distance_lower_isd(const LinearCode& code, std::size_t w_max,
                                        std::uint64_t budget = default_distance_budget)
{
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0)
        return {infinite_distance, infinite_distance, 0, 0};
    const Field& f = code.field();

    std::vector<Matrix> systematic;
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    while (remaining.size() >= k) {
        Matrix g = code.generator();
        const auto pivots = rref(f, g, remaining);
        if (pivots.size() < k)
            break;
        std::erase_if(remaining, [&](std::size_t c) {
            return std::find(pivots.begin(), pivots.end(), c) != pivots.end();
        });
        systematic.push_back(std::move(g));
    }

    IsdBounds out;
    out.information_sets = systematic.size();
    const std::size_t sets = systematic.size();
    out.lower = sets;

    std::vector<detail::ScaledRows> scaled;
    for (const Matrix& g : systematic)
        scaled.emplace_back(f, g);

    std::vector<Elem> stack((w_max + 1) * n);
    const std::uint32_t units = f.order() - 1;
    double spent = 0.0;
    for (std::size_t w = 1; w <= std::min(w_max, k); ++w) {
        if (out.upper <= sets * w)
            break;
        const double level_cost = static_cast<double>(sets) * detail::binomial(k, w) *
                                  std::pow(static_cast<double>(units), static_cast<double>(w - 1));
        if (spent + level_cost > static_cast<double>(budget))
            break;
        spent += level_cost;

        for (const detail::ScaledRows& rows : scaled) {
            // Exactly w rows; first coefficient fixed to 1.
            auto walk = [&](auto&& self, std::size_t depth, std::size_t next) -> void {
                std::span<const Elem> cur{stack.data() + depth * n, n};
                if (depth == w) {
                    out.upper = std::min(out.upper, detail::weight(cur));
                    return;
                }
                std::span<Elem> child{stack.data() + (depth + 1) * n, n};
                for (std::size_t j = next; j + (w - depth) <= k; ++j) {
                    const std::uint32_t s_max = depth == 0 ? 1 : units;
                    for (std::uint32_t s = 1; s <= s_max; ++s) {
                        detail::add_into(child, cur, rows.get(j, s));
                        self(self, depth + 1, j + 1);
                    }
                }
            };
            std::fill(stack.begin(), stack.begin() + static_cast<std::ptrdiff_t>(n), Elem{});
            walk(walk, 0, 0);
        }
        out.level = w;
        out.lower = sets * (w + 1);
    }
    out.lower = std::min(out.lower, out.upper);
    return out;
}

/// Lightest codeword found over `trials` random information sets, combining
/// up to two systematic rows (pairs only when cheap enough).
inline std::size_t min_weight_upper(const LinearCode& code, std::size_t trials,
                                    std::uint64_t seed = 0)
{
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0)
        throw std::invalid_argument("min_weight_upper needs a nonzero code");
    const Field& f = code.field();
    const std::uint32_t units = f.order() - 1;
    const bool use_pairs = detail::binomial(k, 2) * units * static_cast<double>(n) <= 4.0e7;

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::vector<Elem> tmp(n);
    std::size_t best = infinite_distance;
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1) && best > 1; ++t) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Fisher-Yates on raw engine output keeps runs identical across standard libraries.
        for (std::size_t i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng() % (i + 1)]);
        Matrix g = code.generator();
        rref(f, g, order);
        for (std::size_t i = 0; i < k; ++i)
            best = std::min(best, detail::weight(g.row(i)));
        if (!use_pairs)
            continue;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                for (std::uint32_t s = 1; s <= units; ++s) {
                    std::copy(g.row(i).begin(), g.row(i).end(), tmp.begin());
                    detail::axpy(f, tmp, Elem(s), g.row(j));
                    best = std::min(best, detail::weight(tmp));
                }
    }
    return best;
}

} // namespace agq
