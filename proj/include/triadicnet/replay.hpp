// Streaming replay with per-link callbacks.
//
// Arrival and item-creation events bundle link insertions (a new user's seed
// friend/item, an owner's default self-favorite). Measurements need to see
// every elementary link with the graph state at the moment it formed, in the
// order it formed, so the driver decomposes events accordingly: the arrival
// social link lands before the arrival cross link.
#pragma once

#include <cstdint>

#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"
#include "triadicnet/event_log.hpp"

namespace triadicnet {

enum class link_origin : std::uint8_t {
    arrival,       // bundled in a new_user event
    item_creation, // the owner self-favorite bundled in a new_item event
    explicit_link  // a social_link or cross_link event
};

struct link_view {
    time_t time;
    bool social;      // social link (a,b users) or cross link (a user, b item)
    node_id a;
    node_id b;
    link_origin origin;
};

// Replays events [begin, end) of the log into g. Before each elementary link
// insertion, calls fn(g, link_view) with g in the pre-insertion state.
template <typename Fn>
void replay_links(const event_log &log, dual_graph &g, std::size_t begin, std::size_t end, Fn &&fn)
{
    for (std::size_t i = begin; i < end; ++i) {
        const event &ev = log[i];
        switch (ev.kind) {
            case event_kind::new_user: {
                const user_id u = static_cast<user_id>(g.user_count());
                const bool seeded = ev.a != no_node || ev.b != no_node;
                g.apply_event(make_new_user(ev.time));
                if (seeded) {
                    fn(g, link_view{ev.time, true, u, ev.a, link_origin::arrival});
                    g.apply_event(make_social_link(ev.time, u, ev.a));
                    fn(g, link_view{ev.time, false, u, ev.b, link_origin::arrival});
                    g.apply_event(make_cross_link(ev.time, u, ev.b));
                }
                break;
            }
            case event_kind::new_item: {
                const item_id it = ev.a;
                const node_id owner = ev.b;
                g.apply_event(make_new_item(ev.time, it, no_node));
                if (owner != no_node) {
                    fn(g, link_view{ev.time, false, owner, it, link_origin::item_creation});
                    g.apply_event(make_cross_link(ev.time, owner, it));
                }
                break;
            }
            case event_kind::social_link:
                fn(g, link_view{ev.time, true, ev.a, ev.b, link_origin::explicit_link});
                g.apply_event(ev);
                break;
            case event_kind::cross_link:
                fn(g, link_view{ev.time, false, ev.a, ev.b, link_origin::explicit_link});
                g.apply_event(ev);
                break;
        }
    }
}

template <typename Fn>
void replay_links(const event_log &log, dual_graph &g, Fn &&fn)
{
    replay_links(log, g, 0, log.size(), fn);
}

// Classification of a prospective link against the pre-insertion graph.
inline link_class classify_link(const dual_graph &g, const link_view &lv)
{
    return lv.social ? g.classify_social(lv.a, lv.b) : g.classify_cross(lv.a, lv.b);
}

} // namespace triadicnet
