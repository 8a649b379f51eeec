// Append-only timestamped event sequence: the single source of truth for
// simulated and ingested networks. Replaying a prefix reconstructs the graph
// at any time deterministically.
#pragma once

#include <algorithm>
#include <vector>

#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"

namespace triadicnet {

class event_log {
  public:
    explicit event_log(bool directed_social = false) : directed_(directed_social) {}

    bool directed_social() const { return directed_; }
    bool empty() const { return events_.empty(); }
    std::size_t size() const { return events_.size(); }
    const std::vector<event> &events() const { return events_; }
    const event &operator[](std::size_t i) const { return events_[i]; }

    time_t first_time() const { return events_.empty() ? 0 : events_.front().time; }
    time_t last_time() const { return events_.empty() ? 0 : events_.back().time; }

    void append(const event &ev)
    {
        if (!events_.empty() && ev.time < events_.back().time)
            throw non_monotone_time_error("event time decreases within log");
        events_.push_back(ev);
    }

    // First position whose event time exceeds t (events are time-sorted).
    std::size_t end_of_prefix(time_t t) const
    {
        auto it = std::upper_bound(events_.begin(), events_.end(), t,
                                   [](time_t lhs, const event &e) { return lhs < e.time; });
        return static_cast<std::size_t>(it - events_.begin());
    }

    friend bool operator==(const event_log &, const event_log &) = default;

  private:
    bool directed_;
    std::vector<event> events_;
};

// Graph state after all events with time <= t.
inline dual_graph snapshot_at(const event_log &log, time_t t)
{
    if (t < 0 || t > log.last_time())
        throw time_out_of_range_error("snapshot time " + std::to_string(t) + " outside log range");
    dual_graph g(log.directed_social());
    const std::size_t end = log.end_of_prefix(t);
    for (std::size_t i = 0; i < end; ++i)
        g.apply_event(log[i]);
    return g;
}

inline dual_graph replay_all(const event_log &log)
{
    dual_graph g(log.directed_social());
    for (const event &ev : log.events())
        g.apply_event(ev);
    return g;
}

} // namespace triadicnet
