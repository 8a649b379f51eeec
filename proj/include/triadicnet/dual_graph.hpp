// Sparse dual-component graph: user-user social links plus user-item cross
// links, with incremental degree tracking, two-step neighborhood enumeration
// and triadic classification of prospective links.
//
// A "triangle" is any 3-cycle in the union graph that treats both link types
// as edges: user-user-user, or user-user-item. In directed mode the social
// direction is ignored for walks and classification; in/out degrees are still
// tracked. A directed link whose reverse already exists adds no union edge and
// therefore classifies as non-triadic.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "triadicnet/core.hpp"

namespace triadicnet {

namespace detail {

// Sorted unique id vector. Membership is O(log d), insertion keeps order.
using sorted_ids = std::vector<node_id>;

inline bool contains(const sorted_ids &v, node_id x)
{
    return std::binary_search(v.begin(), v.end(), x);
}

// Returns false if already present.
inline bool insert_id(sorted_ids &v, node_id x)
{
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        return false;
    v.insert(it, x);
    return true;
}

inline bool intersects(const sorted_ids &a, const sorted_ids &b)
{
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

} // namespace detail

enum class walk_type : std::uint8_t {
    friend_of_friend, // user, via social-social
    item_of_friend,   // item, via social-cross
    fan_of_item       // user, via cross-fan
};

struct second_neighbor {
    node_id node;
    walk_type type;

    friend bool operator==(const second_neighbor &, const second_neighbor &) = default;
    friend bool operator<(const second_neighbor &a, const second_neighbor &b)
    {
        if (a.node != b.node)
            return a.node < b.node;
        return static_cast<int>(a.type) < static_cast<int>(b.type);
    }
};

enum class link_class : std::uint8_t { triadic, non_triadic };

class dual_graph {
  public:
    explicit dual_graph(bool directed_social = false) : directed_(directed_social) {}

    bool directed_social() const { return directed_; }
    std::size_t user_count() const { return social_.size(); }
    std::size_t item_count() const { return fans_.size(); }

    // Degrees. k_s is the number of distinct social neighbors ignoring
    // direction (not k_in + k_out: reciprocal pairs overlap).
    std::uint32_t social_degree(user_id u) const { return social_deg_[u]; }
    std::uint32_t in_degree(user_id u) const { return in_deg_[u]; }
    std::uint32_t out_degree(user_id u) const { return out_deg_[u]; }
    std::uint32_t favorite_degree(user_id u) const { return fav_deg_[u]; }
    std::uint32_t popular_degree(item_id it) const { return pop_deg_[it]; }
    std::uint32_t total_degree(user_id u) const { return social_deg_[u] + fav_deg_[u]; }

    std::uint32_t degree(degree_kind kind, node_id id) const
    {
        switch (kind) {
            case degree_kind::k_f: return fav_deg_[id];
            case degree_kind::k_s: return social_deg_[id];
            case degree_kind::k_in: return in_deg_[id];
            case degree_kind::k_out: return out_deg_[id];
            case degree_kind::k_p: return pop_deg_[id];
        }
        return 0;
    }

    std::uint64_t total_favorite_degree() const { return total_kf_; }
    std::uint64_t total_popular_degree() const { return total_kp_; }

    // Adjacency views (ascending id order).
    std::span<const node_id> social_neighbors(user_id u) const { return social_[u]; }
    std::span<const node_id> favorite_items(user_id u) const { return favorites_[u]; }
    std::span<const node_id> fans(item_id it) const { return fans_[it]; }
    std::span<const node_id> out_neighbors(user_id u) const { return out_[u]; }
    std::span<const node_id> in_neighbors(user_id u) const { return in_[u]; }

    bool has_social(user_id u, user_id v) const { return detail::contains(social_[u], v); }
    bool has_social_out(user_id u, user_id v) const
    {
        return directed_ ? detail::contains(out_[u], v) : has_social(u, v);
    }
    bool has_cross(user_id u, item_id it) const { return detail::contains(favorites_[u], it); }

    // Applies one event. Preconditions are checked before any mutation, so a
    // failed event leaves the graph unchanged. Duplicates are an error here;
    // lenient replay of dirty data belongs to ingestion.
    void apply_event(const event &ev)
    {
        switch (ev.kind) {
            case event_kind::new_user: apply_new_user(ev); break;
            case event_kind::new_item: apply_new_item(ev); break;
            case event_kind::social_link: apply_social_link(ev.a, ev.b); break;
            case event_kind::cross_link: apply_cross_link(ev.a, ev.b); break;
        }
        assert(total_kf_ == total_kp_);
    }

    // All nodes reachable in exactly two steps, tagged by walk type, minus
    // the start user and minus nodes already linked to it by the landing
    // link type. Result is sorted and duplicate-free per (node, type).
    std::vector<second_neighbor> second_neighbors(user_id u) const
    {
        require_user(u);
        std::vector<second_neighbor> out;
        for (node_id j : social_[u]) {
            for (node_id w : social_[j]) {
                if (w != u && !has_social(u, w))
                    out.push_back({w, walk_type::friend_of_friend});
            }
            for (node_id it : favorites_[j]) {
                if (!has_cross(u, it))
                    out.push_back({it, walk_type::item_of_friend});
            }
        }
        for (node_id it : favorites_[u]) {
            for (node_id w : fans_[it]) {
                if (w != u && !has_social(u, w))
                    out.push_back({w, walk_type::fan_of_item});
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Classification of a prospective social link (u,v) against the current
    // graph: triadic iff u and v share a social neighbor or a favorite item.
    link_class classify_social(user_id u, user_id v) const
    {
        require_user(u);
        require_user(v);
        if (u == v)
            throw self_loop_error("classify_social: self loop");
        if (has_social_out(u, v))
            throw link_already_present_error("classify_social: link already present");
        if (detail::intersects(social_[u], social_[v]))
            return link_class::triadic;
        if (detail::intersects(favorites_[u], favorites_[v]))
            return link_class::triadic;
        return link_class::non_triadic;
    }

    // Prospective cross link (u,item): triadic iff some social neighbor of u
    // is already a fan of the item.
    link_class classify_cross(user_id u, item_id it) const
    {
        require_user(u);
        require_item(it);
        if (has_cross(u, it))
            throw link_already_present_error("classify_cross: link already present");
        if (detail::intersects(social_[u], fans_[it]))
            return link_class::triadic;
        return link_class::non_triadic;
    }

    friend bool operator==(const dual_graph &, const dual_graph &) = default;

  private:
    void require_user(user_id u) const
    {
        if (u >= user_count())
            throw unknown_node_error("unknown user " + std::to_string(u));
    }

    void require_item(item_id it) const
    {
        if (it >= item_count())
            throw unknown_node_error("unknown item " + std::to_string(it));
    }

    void apply_new_user(const event &ev)
    {
        const bool has_seeds = ev.a != no_node || ev.b != no_node;
        if (has_seeds) {
            if (ev.a == no_node || ev.b == no_node)
                throw unknown_node_error("new_user: partial seed arguments");
            require_user(ev.a);
            require_item(ev.b);
        }
        const user_id u = static_cast<user_id>(user_count());
        push_user();
        if (has_seeds) {
            apply_social_link(u, ev.a);
            apply_cross_link(u, ev.b);
        }
    }

    void apply_new_item(const event &ev)
    {
        if (ev.a != item_count())
            throw unknown_node_error("new_item: id out of creation order");
        if (ev.b != no_node)
            require_user(ev.b);
        push_item();
        if (ev.b != no_node)
            apply_cross_link(ev.b, ev.a);
    }

    void apply_social_link(user_id src, user_id dst)
    {
        require_user(src);
        require_user(dst);
        if (src == dst)
            throw self_loop_error("social link " + std::to_string(src) + " -> itself");
        if (has_social_out(src, dst))
            throw duplicate_link_error("duplicate social link");
        if (directed_) {
            detail::insert_id(out_[src], dst);
            detail::insert_id(in_[dst], src);
            ++out_deg_[src];
            ++in_deg_[dst];
        }
        if (detail::insert_id(social_[src], dst)) {
            detail::insert_id(social_[dst], src);
            ++social_deg_[src];
            ++social_deg_[dst];
        }
    }

    void apply_cross_link(user_id u, item_id it)
    {
        require_user(u);
        require_item(it);
        if (has_cross(u, it))
            throw duplicate_link_error("duplicate cross link");
        detail::insert_id(favorites_[u], it);
        detail::insert_id(fans_[it], u);
        ++fav_deg_[u];
        ++pop_deg_[it];
        ++total_kf_;
        ++total_kp_;
    }

    void push_user()
    {
        social_.emplace_back();
        favorites_.emplace_back();
        social_deg_.push_back(0);
        fav_deg_.push_back(0);
        if (directed_) {
            out_.emplace_back();
            in_.emplace_back();
        }
        out_deg_.push_back(0);
        in_deg_.push_back(0);
    }

    void push_item()
    {
        fans_.emplace_back();
        pop_deg_.push_back(0);
    }

    bool directed_;
    std::vector<detail::sorted_ids> social_;    // union neighbors, both modes
    std::vector<detail::sorted_ids> out_;       // directed mode only
    std::vector<detail::sorted_ids> in_;        // directed mode only
    std::vector<detail::sorted_ids> favorites_; // user -> items
    std::vector<detail::sorted_ids> fans_;      // item -> users
    std::vector<std::uint32_t> social_deg_, fav_deg_, in_deg_, out_deg_, pop_deg_;
    std::uint64_t total_kf_ = 0;
    std::uint64_t total_kp_ = 0;
};

} // namespace triadicnet
