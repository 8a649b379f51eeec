// The coevolving growth model. Per tick: pending willingness resets, threshold
// activation, one user arrival, item creation by activated users, triadic link
// formation via two-step random walks, and the cumulative willingness update
//
//   phi(i, t+1) = phi(i, t) + coupling * sum over social neighbors j of
//                 (total-degree change of j during tick t) + initiative.
//
// A user whose willingness reaches its threshold is activated for the tick;
// activated users and users that initiated an event have their willingness
// reset to zero at the start of the next tick.
#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"
#include "triadicnet/event_log.hpp"
#include "triadicnet/rng.hpp"

namespace triadicnet {

inline constexpr int walk_retry_budget = 10;

struct model_params {
    std::uint32_t items_per_tick = 10;          // m
    std::uint32_t link_attempts_per_tick = 100; // n
    double coupling = 0.5;                      // mu
    double initiative = 1.0;                    // phi0
    double threshold_min = 40.0;
    double threshold_max = 4000.0;
    std::uint32_t initial_users = 10;  // N0
    std::uint32_t initial_items = 10;  // M0
    std::uint32_t final_users = 100000;
    std::uint64_t seed = 1;
    // Whether passive link recipients (walk targets, arrival seed friends)
    // also reset their willingness. The base rule resets only activated
    // users and event initiators.
    bool reset_passive_recipients = false;

    void validate() const
    {
        if (coupling < 0 || initiative < 0)
            throw invalid_params_error("coupling and initiative must be non-negative");
        if (!(threshold_min <= threshold_max) || threshold_min < 0)
            throw invalid_params_error("threshold range invalid");
        if (initial_users < 2)
            throw invalid_params_error("need at least 2 initial users");
        if (initial_items < 1)
            throw invalid_params_error("need at least 1 initial item");
        if (final_users <= initial_users)
            throw invalid_params_error("final user count must exceed initial users");
    }
};

struct tick_report {
    time_t tick = 0;
    std::uint32_t activated = 0;
    std::uint32_t new_users = 0;
    std::uint32_t new_items = 0;
    std::uint32_t social_links = 0;
    std::uint32_t cross_links = 0;
    std::uint32_t walk_failures = 0;
    double triadic_fraction = 1.0; // walk links close a triangle by construction
};

struct walk_result {
    node_id target;
    walk_type type;
};

// One two-step random walk from `walker`, following the information flow:
// first step uniform over social neighbors + favorite items; from a user,
// second step uniform over that user's social neighbors + favorite items;
// from an item, uniform over its fans. A landing on the walker itself or on
// a node already linked by the corresponding link type fails the attempt;
// up to `budget` independent walks are tried.
inline std::optional<walk_result> two_step_walk(const dual_graph &g, user_id walker, rng &r,
                                                int budget = walk_retry_budget)
{
    if (walker >= g.user_count())
        throw unknown_node_error("two_step_walk: unknown user " + std::to_string(walker));
    const auto social = g.social_neighbors(walker);
    const auto items = g.favorite_items(walker);
    const std::uint64_t first_choices = social.size() + items.size();
    if (first_choices == 0)
        return std::nullopt;

    for (int attempt = 0; attempt < budget; ++attempt) {
        const std::uint64_t pick = r.uniform_index(first_choices);
        if (pick < social.size()) {
            const user_id mid = social[pick];
            const auto mid_social = g.social_neighbors(mid);
            const auto mid_items = g.favorite_items(mid);
            // mid has at least one neighbor: the walker itself.
            const std::uint64_t second = r.uniform_index(mid_social.size() + mid_items.size());
            if (second < mid_social.size()) {
                const user_id v = mid_social[second];
                if (v != walker && !g.has_social(walker, v))
                    return walk_result{v, walk_type::friend_of_friend};
            } else {
                const item_id it = mid_items[second - mid_social.size()];
                if (!g.has_cross(walker, it))
                    return walk_result{it, walk_type::item_of_friend};
            }
        } else {
            const item_id mid = items[pick - social.size()];
            const auto mid_fans = g.fans(mid);
            const user_id v = mid_fans[r.uniform_index(mid_fans.size())];
            if (v != walker && !g.has_social(walker, v))
                return walk_result{v, walk_type::fan_of_item};
        }
    }
    return std::nullopt;
}

class simulator {
  public:
    explicit simulator(const model_params &params) : params_(params), rng_(params.seed)
    {
        params_.validate();
        init_network();
    }

    const event_log &log() const { return log_; }
    const dual_graph &graph() const { return graph_; }
    time_t tick() const { return tick_; }
    bool complete() const { return graph_.user_count() >= params_.final_users; }

    double willingness(user_id u) const { return phi_[u]; }
    double threshold(user_id u) const { return theta_[u]; }

    // Test hook: scripted scenarios set the willingness directly.
    void override_willingness(user_id u, double value) { phi_[u] = value; }

    // Called once per tick with the activated user set, before any event.
    void set_activation_observer(std::function<void(time_t, std::span<const user_id>)> fn)
    {
        observer_ = std::move(fn);
    }

    tick_report step()
    {
        if (complete())
            throw run_complete_error("simulation already reached its final size");
        ++tick_;
        tick_report report;
        report.tick = tick_;

        // (a) willingness resets flagged last tick
        for (user_id u : reset_list_)
            phi_[u] = 0;
        reset_list_.clear();

        // (b) threshold activation
        activated_.clear();
        const std::size_t existing = graph_.user_count();
        for (user_id u = 0; u < existing; ++u) {
            if (phi_[u] >= theta_[u])
                activated_.push_back(u);
        }
        report.activated = static_cast<std::uint32_t>(activated_.size());
        if (observer_)
            observer_(tick_, activated_);

        // (c) arrival: the newcomer connects a random user and one of that
        // user's favorite items
        {
            const user_id fresh = static_cast<user_id>(graph_.user_count());
            user_id host;
            do {
                host = static_cast<user_id>(rng_.uniform_index(graph_.user_count()));
            } while (graph_.favorite_degree(host) == 0);
            const auto host_items = g_items(host);
            const item_id seed_item = host_items[rng_.uniform_index(host_items.size())];
            append_apply(make_new_user(tick_, host, seed_item));
            phi_.push_back(0);
            theta_.push_back(draw_threshold());
            sel_epoch_.push_back(0);
            ka_delta_.push_back(0);
            note_degree_gain(fresh, 2);
            note_degree_gain(host, 1);
            if (params_.reset_passive_recipients)
                resets_pending_.push_back(host);
            report.new_users = 1;
        }

        // (d) item creation by activated users (complemented when short)
        select_actors(params_.items_per_tick);
        for (user_id creator : selection_) {
            const item_id fresh_item = static_cast<item_id>(graph_.item_count());
            append_apply(make_new_item(tick_, fresh_item, creator));
            note_degree_gain(creator, 1);
            resets_pending_.push_back(creator);
            ++report.new_items;
        }

        // (e) triadic links via two-step walks
        select_actors(params_.link_attempts_per_tick);
        for (user_id walker : selection_) {
            const auto walk = two_step_walk(graph_, walker, rng_);
            if (!walk) {
                ++report.walk_failures;
                continue;
            }
            if (walk->type == walk_type::item_of_friend) {
                assert(graph_.classify_cross(walker, walk->target) == link_class::triadic);
                append_apply(make_cross_link(tick_, walker, walk->target));
                note_degree_gain(walker, 1);
                ++report.cross_links;
            } else {
                assert(graph_.classify_social(walker, walk->target) == link_class::triadic);
                append_apply(make_social_link(tick_, walker, walk->target));
                note_degree_gain(walker, 1);
                note_degree_gain(walk->target, 1);
                if (params_.reset_passive_recipients)
                    resets_pending_.push_back(walk->target);
                ++report.social_links;
            }
            resets_pending_.push_back(walker);
        }

        // (f) willingness update from this tick's degree changes, using the
        // end-of-tick neighbor sets
        for (user_id j : touched_) {
            const double stimulus = params_.coupling * ka_delta_[j];
            ka_delta_[j] = 0;
            if (stimulus == 0)
                continue;
            for (user_id i : graph_.social_neighbors(j))
                phi_[i] += stimulus;
        }
        touched_.clear();
        const std::size_t all = graph_.user_count();
        for (user_id u = 0; u < all; ++u)
            phi_[u] += params_.initiative;

        // (g) flag resets: activated users plus everyone who initiated an event
        resets_pending_.insert(resets_pending_.end(), activated_.begin(), activated_.end());
        std::sort(resets_pending_.begin(), resets_pending_.end());
        resets_pending_.erase(std::unique(resets_pending_.begin(), resets_pending_.end()),
                              resets_pending_.end());
        reset_list_.swap(resets_pending_);
        resets_pending_.clear();

        return report;
    }

    template <typename Fn>
    void run(Fn &&per_tick)
    {
        while (!complete())
            per_tick(step());
    }

    std::vector<tick_report> run()
    {
        std::vector<tick_report> reports;
        reports.reserve(params_.final_users - params_.initial_users);
        run([&](const tick_report &r) { reports.push_back(r); });
        return reports;
    }

  private:
    std::span<const node_id> g_items(user_id u) const { return graph_.favorite_items(u); }

    double draw_threshold()
    {
        return rng_.uniform_real(params_.threshold_min, params_.threshold_max);
    }

    void append_apply(const event &ev)
    {
        log_.append(ev);
        graph_.apply_event(ev);
    }

    void note_degree_gain(user_id u, std::uint32_t amount)
    {
        if (ka_delta_[u] == 0)
            touched_.push_back(u);
        ka_delta_[u] += amount;
    }

    // Uniform selection of `count` distinct users: activated first (partial
    // Fisher-Yates over a copy), complemented from the remaining users when
    // the activated set is short. Result lands in selection_.
    void select_actors(std::uint32_t count)
    {
        selection_.clear();
        ++epoch_;
        shuffle_scratch_ = activated_;
        const std::size_t from_activated = std::min<std::size_t>(count, shuffle_scratch_.size());
        for (std::size_t i = 0; i < from_activated; ++i) {
            const std::size_t k = i + rng_.uniform_index(shuffle_scratch_.size() - i);
            std::swap(shuffle_scratch_[i], shuffle_scratch_[k]);
            selection_.push_back(shuffle_scratch_[i]);
            sel_epoch_[shuffle_scratch_[i]] = epoch_;
        }
        const std::size_t target = std::min<std::size_t>(count, graph_.user_count());
        while (selection_.size() < target) {
            const user_id u = static_cast<user_id>(rng_.uniform_index(graph_.user_count()));
            if (sel_epoch_[u] == epoch_)
                continue;
            sel_epoch_[u] = epoch_;
            selection_.push_back(u);
        }
    }

    void init_network()
    {
        // A small random seed network: every initial user draws one random
        // partner (self and duplicate draws rejected, saturated users skip),
        // every initial item gets a uniformly random owner.
        for (std::uint32_t i = 0; i < params_.initial_users; ++i) {
            append_apply(make_new_user(0));
            phi_.push_back(0);
            theta_.push_back(draw_threshold());
            sel_epoch_.push_back(0);
            ka_delta_.push_back(0);
        }
        for (user_id u = 0; u < params_.initial_users; ++u) {
            if (graph_.social_degree(u) == params_.initial_users - 1)
                continue;
            user_id partner;
            do {
                partner = static_cast<user_id>(rng_.uniform_index(params_.initial_users));
            } while (partner == u || graph_.has_social(u, partner));
            append_apply(make_social_link(0, u, partner));
        }
        for (item_id it = 0; it < params_.initial_items; ++it) {
            const user_id owner = static_cast<user_id>(rng_.uniform_index(params_.initial_users));
            append_apply(make_new_item(0, it, owner));
        }
    }

    model_params params_;
    rng rng_;
    dual_graph graph_{false};
    event_log log_{false};
    time_t tick_ = 0;

    std::vector<double> phi_;
    std::vector<double> theta_;
    std::vector<user_id> reset_list_;     // reset at the start of next tick
    std::vector<user_id> resets_pending_; // collected during this tick
    std::vector<user_id> activated_;
    std::vector<user_id> selection_;
    std::vector<user_id> shuffle_scratch_;
    std::vector<std::uint32_t> ka_delta_;
    std::vector<user_id> touched_;
    std::vector<std::uint32_t> sel_epoch_;
    std::uint32_t epoch_ = 0;
    std::function<void(time_t, std::span<const user_id>)> observer_;
};

} // namespace triadicnet
