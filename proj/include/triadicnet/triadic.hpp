// Fraction of links classified triadic at their formation time. Links
// bundled in arrival and item-creation events are structurally determined
// (the model's only non-triadic channels), so only explicit link events are
// counted.
#pragma once

#include <cstdint>

#include "triadicnet/core.hpp"
#include "triadicnet/event_log.hpp"
#include "triadicnet/replay.hpp"

namespace triadicnet {

struct triadic_counts {
    std::uint64_t social_triadic = 0;
    std::uint64_t social_total = 0;
    std::uint64_t cross_triadic = 0;
    std::uint64_t cross_total = 0;
};

inline triadic_counts count_triadic_links(const event_log &log)
{
    triadic_counts counts;
    dual_graph g(log.directed_social());
    replay_links(log, g, [&](const dual_graph &state, const link_view &lv) {
        if (lv.origin != link_origin::explicit_link)
            return;
        const bool triadic = classify_link(state, lv) == link_class::triadic;
        if (lv.social) {
            ++counts.social_total;
            counts.social_triadic += triadic;
        } else {
            ++counts.cross_total;
            counts.cross_triadic += triadic;
        }
    });
    return counts;
}

// link class selector: social when true, cross otherwise
inline double triadic_fraction(const event_log &log, bool social)
{
    const triadic_counts counts = count_triadic_links(log);
    const std::uint64_t total = social ? counts.social_total : counts.cross_total;
    if (total == 0)
        throw empty_class_error("triadic_fraction: no links of the requested class");
    const std::uint64_t hits = social ? counts.social_triadic : counts.cross_triadic;
    return static_cast<double>(hits) / static_cast<double>(total);
}

} // namespace triadicnet
