// Neighborhood-influence estimators, streamed over the event log.
//
// Exposure variant: when user j favorites item L, every social neighbor i of
// j that is not yet a fan of L has its exposure counter e(i, L) incremented.
// C(u) counts pairs whose counter ever reaches u; a pair that adopts (i
// favorites L) while exposed u >= 1 times contributes to A(u) and leaves
// tracking. The relative adoption probability A(u)/C(u) is normalized,
// cumulated and fitted like the attachment kernels.
//
// Shared-favorites variant: the same machinery over z, the number of items a
// not-yet-linked user pair has favorited in common. Pairs enter tracking at
// their first shared item, leave it when a social link forms between them
// (counted in A at their current z), and pairs that are already linked when
// they first share an item are never tracked: C conditions on pairs that can
// still convert. z = 0 is excluded throughout.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "triadicnet/binning.hpp"
#include "triadicnet/core.hpp"
#include "triadicnet/event_log.hpp"
#include "triadicnet/fitting.hpp"
#include "triadicnet/replay.hpp"

namespace triadicnet {

struct influence_estimate {
    // Indexed by the exposure count u (or shared count z); slot 0 is unused.
    std::vector<std::uint64_t> adoptions; // A
    std::vector<std::uint64_t> exposures; // C
    std::vector<double> pi, kappa;
    std::optional<loglog_fit> fit;
    std::uint64_t adoption_count = 0;

    bool empty() const { return exposures.empty(); }
    double exponent() const
    {
        return fit ? fit->slope - 1.0 : std::numeric_limits<double>::quiet_NaN();
    }
};

namespace detail {

inline void finalize_influence(influence_estimate &est, std::uint64_t min_bin_count)
{
    const std::size_t n = est.exposures.size();
    if (n == 0)
        return;
    if (est.adoptions.size() < n)
        est.adoptions.resize(n, 0);
    est.pi.assign(n, 0);
    est.kappa.assign(n, 0);
    double denom = 0;
    for (std::size_t u = 1; u < n; ++u)
        if (est.exposures[u] > 0 && est.adoptions[u] > 0)
            denom += static_cast<double>(est.adoptions[u]) /
                     static_cast<double>(est.exposures[u]);
    if (denom == 0)
        return;
    double cum = 0;
    for (std::size_t u = 1; u < n; ++u) {
        if (est.exposures[u] > 0 && est.adoptions[u] > 0)
            est.pi[u] = static_cast<double>(est.adoptions[u]) /
                        static_cast<double>(est.exposures[u]) / denom;
        cum += est.pi[u];
        est.kappa[u] = cum;
    }

    // One kappa sample per base-2 bin, gated on the pooled exposure mass.
    std::vector<std::pair<double, double>> pts;
    for (unsigned j = 0; (std::size_t{1} << j) < n; ++j) {
        const std::size_t lo = std::size_t{1} << j;
        const std::size_t up = std::min(n - 1, (lo << 1) - 1);
        std::uint64_t mass = 0;
        for (std::size_t u = lo; u <= up; ++u)
            mass += est.exposures[u];
        if (mass < min_bin_count)
            continue;
        if (est.kappa[up] > 0)
            pts.emplace_back(static_cast<double>(up), est.kappa[up]);
    }
    try {
        est.fit = fit_loglog_slope(pts);
    } catch (const degenerate_support_error &) {
        est.fit = std::nullopt;
    }
}

inline std::uint64_t pair_key(node_id a, node_id b)
{
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::uint64_t unordered_pair_key(node_id a, node_id b)
{
    return a < b ? pair_key(a, b) : pair_key(b, a);
}

inline void bump_counter(std::vector<std::uint64_t> &v, std::size_t i)
{
    if (i >= v.size())
        v.resize(i + 1, 0);
    ++v[i];
}

} // namespace detail

inline influence_estimate exposure_influence(const event_log &log,
                                             std::uint64_t min_bin_count = 10)
{
    influence_estimate est;
    std::unordered_map<std::uint64_t, std::uint32_t> exposure;
    dual_graph g(log.directed_social());
    replay_links(log, g, [&](const dual_graph &state, const link_view &lv) {
        if (lv.social)
            return;
        const user_id adopter = lv.a;
        const item_id item = lv.b;
        const auto tracked = exposure.find(detail::pair_key(adopter, item));
        if (tracked != exposure.end()) {
            detail::bump_counter(est.adoptions, tracked->second);
            ++est.adoption_count;
            exposure.erase(tracked);
        }
        for (node_id nbr : state.social_neighbors(adopter)) {
            if (state.has_cross(nbr, item))
                continue;
            const std::uint32_t reached = ++exposure[detail::pair_key(nbr, item)];
            detail::bump_counter(est.exposures, reached);
        }
    });
    detail::finalize_influence(est, min_bin_count);
    return est;
}

inline influence_estimate shared_favorites_influence(const event_log &log,
                                                     std::uint64_t min_bin_count = 10)
{
    influence_estimate est;
    std::unordered_map<std::uint64_t, std::uint32_t> shared;
    dual_graph g(log.directed_social());
    replay_links(log, g, [&](const dual_graph &state, const link_view &lv) {
        if (lv.social) {
            if (state.has_social(lv.a, lv.b))
                return; // reciprocal directed link; the pair is already linked
            const auto tracked = shared.find(detail::unordered_pair_key(lv.a, lv.b));
            if (tracked != shared.end()) {
                detail::bump_counter(est.adoptions, tracked->second);
                ++est.adoption_count;
                shared.erase(tracked);
            }
            return;
        }
        const user_id joiner = lv.a;
        const item_id item = lv.b;
        for (node_id fan : state.fans(item)) {
            if (state.has_social(joiner, fan))
                continue;
            const std::uint32_t reached =
                ++shared[detail::unordered_pair_key(joiner, fan)];
            detail::bump_counter(est.exposures, reached);
        }
    });
    detail::finalize_influence(est, min_bin_count);
    return est;
}

} // namespace triadicnet
