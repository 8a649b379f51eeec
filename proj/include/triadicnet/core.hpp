// Core identifiers, events and errors shared by the whole library.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace triadicnet {

// Dense node identifiers, assigned in creation order. Users and items
// live in separate id spaces.
using user_id = std::uint32_t;
using item_id = std::uint32_t;
using node_id = std::uint32_t;

// Integer tick (model) or day (empirical data).
using time_t = std::int64_t;

// Sentinel for "no node" in event arguments (serialized as -1).
inline constexpr node_id no_node = std::numeric_limits<node_id>::max();

enum class degree_kind { k_f, k_s, k_in, k_out, k_p };

inline bool is_user_degree(degree_kind k) { return k != degree_kind::k_p; }

inline const char *degree_kind_name(degree_kind k)
{
    switch (k) {
        case degree_kind::k_f: return "kf";
        case degree_kind::k_s: return "ks";
        case degree_kind::k_in: return "kin";
        case degree_kind::k_out: return "kout";
        case degree_kind::k_p: return "kp";
    }
    return "?";
}

enum class event_kind : std::uint8_t {
    new_user,    // creates the next user id; args: seed friend, seed item (or no_node)
    new_item,    // args: item id (must be the next one), owner (or no_node)
    social_link, // args: src user, dst user
    cross_link   // args: user, item
};

// One append-only log entry. The id of a created user is implicit: the
// k-th new_user event creates user k. new_item events carry their id
// explicitly and it must equal the current item count.
struct event {
    time_t time = 0;
    event_kind kind = event_kind::new_user;
    node_id a = no_node;
    node_id b = no_node;

    friend bool operator==(const event &, const event &) = default;
};

inline event make_new_user(time_t t, node_id seed_friend = no_node, node_id seed_item = no_node)
{
    return event{t, event_kind::new_user, seed_friend, seed_item};
}

inline event make_new_item(time_t t, item_id item, node_id owner)
{
    return event{t, event_kind::new_item, item, owner};
}

inline event make_social_link(time_t t, user_id src, user_id dst)
{
    return event{t, event_kind::social_link, src, dst};
}

inline event make_cross_link(time_t t, user_id user, item_id item)
{
    return event{t, event_kind::cross_link, user, item};
}

// ---------------------------------------------------------------------------
// Errors

struct duplicate_link_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unknown_node_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct self_loop_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct link_already_present_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct time_out_of_range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_params_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct run_complete_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_support_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_variance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct malformed_line_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_monotone_time_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_after_filter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace triadicnet
