// Canonical event-log file format and snapshot export.
//
//   #v1 triadicnet-log directed=0
//   t,kind,arg1,arg2
//
// kind U creates the next user id; args are seed friend and seed item, -1,-1
// for bare arrivals. kind I carries item,owner (owner -1 for ownerless
// repairs), S carries src,dst and C carries user,item. Times are
// non-decreasing, encoding is UTF-8 with LF line endings, integers only.
// parse(serialize(log)) == log for every valid log.
//
// Parsing replays the file against a validation graph: duplicate links and
// self loops are dropped with a count, references to never-created nodes are
// repaired by synthesizing bare creation events at the same timestamp.
// Malformed lines and time regressions are hard errors.
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"
#include "triadicnet/event_log.hpp"

namespace triadicnet {

struct ingest_report {
    std::uint64_t total_lines = 0; // event lines seen (header excluded)
    std::uint64_t accepted = 0;
    std::uint64_t duplicates = 0;
    std::uint64_t self_loops = 0;
    std::uint64_t dangling_repaired = 0; // synthesized creation events
    std::uint64_t filtered_users = 0;    // empirical ingestion only
    std::uint64_t filtered_social_links = 0;
    std::uint64_t filtered_cross_links = 0;
    time_t first_time = 0;
    time_t last_time = 0;
};

namespace detail {

inline long long to_ll(node_id v) { return v == no_node ? -1 : static_cast<long long>(v); }

inline char event_kind_code(event_kind k)
{
    switch (k) {
        case event_kind::new_user: return 'U';
        case event_kind::new_item: return 'I';
        case event_kind::social_link: return 'S';
        case event_kind::cross_link: return 'C';
    }
    return '?';
}

inline bool parse_ll(std::string_view s, long long &out)
{
    const char *first = s.data();
    const char *last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

// Splits "a,b,c,d" into exactly n fields.
template <std::size_t N>
inline bool split_fields(std::string_view line, std::string_view (&fields)[N])
{
    std::size_t start = 0, idx = 0;
    while (idx < N) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            if (idx != N - 1)
                return false;
            fields[idx++] = line.substr(start);
            return true;
        }
        fields[idx++] = line.substr(start, comma - start);
        start = comma + 1;
    }
    return false; // more fields than expected
}

} // namespace detail

inline void serialize_log(const event_log &log, std::ostream &out)
{
    out << "#v1 triadicnet-log directed=" << (log.directed_social() ? 1 : 0) << '\n';
    for (const event &ev : log.events()) {
        out << ev.time << ',' << detail::event_kind_code(ev.kind) << ','
            << detail::to_ll(ev.a) << ',' << detail::to_ll(ev.b) << '\n';
    }
}

inline void write_log_file(const event_log &log, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open " + path + " for writing");
    serialize_log(log, out);
    if (!out)
        throw io_error("write failed: " + path);
}

struct parse_result {
    event_log log{false};
    ingest_report report;
};

inline parse_result parse_log(std::istream &in, const std::string &name = "<stream>")
{
    std::string line;
    if (!std::getline(in, line))
        throw malformed_line_error(name + ":1: empty file, missing #v1 header");
    if (line.rfind("#v1", 0) != 0)
        throw malformed_line_error(name + ":1: missing #v1 header token");
    const bool directed = line.find("directed=1") != std::string::npos;

    parse_result res{event_log(directed), {}};
    dual_graph g(directed);
    std::uint64_t line_no = 1;
    time_t prev_time = 0;
    bool first_event = true;

    auto synthesize_users = [&](long long up_to, time_t t) {
        while (static_cast<long long>(g.user_count()) <= up_to) {
            const event ev = make_new_user(t);
            g.apply_event(ev);
            res.log.append(ev);
            ++res.report.dangling_repaired;
        }
    };
    auto synthesize_items = [&](long long up_to, time_t t) {
        while (static_cast<long long>(g.item_count()) <= up_to) {
            const event ev = make_new_item(t, static_cast<item_id>(g.item_count()), no_node);
            g.apply_event(ev);
            res.log.append(ev);
            ++res.report.dangling_repaired;
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && in.eof())
            break;
        ++res.report.total_lines;
        std::string_view fields[4];
        const auto fail = [&](const char *what) {
            throw malformed_line_error(name + ":" + std::to_string(line_no) + ": " + what);
        };
        if (!detail::split_fields(std::string_view(line), fields))
            fail("expected 4 comma-separated fields");
        long long t_raw, a_raw, b_raw;
        if (!detail::parse_ll(fields[0], t_raw))
            fail("bad time field");
        if (fields[1].size() != 1)
            fail("bad kind field");
        if (!detail::parse_ll(fields[2], a_raw) || !detail::parse_ll(fields[3], b_raw))
            fail("bad argument field");
        if (a_raw < -1 || b_raw < -1)
            fail("negative id");
        const time_t t = t_raw;
        if (!first_event && t < prev_time)
            throw non_monotone_time_error(name + ":" + std::to_string(line_no) +
                                          ": time decreases");
        prev_time = t;
        if (first_event) {
            res.report.first_time = t;
            first_event = false;
        }
        res.report.last_time = t;

        const char kind = fields[1][0];
        switch (kind) {
            case 'U': {
                if ((a_raw == -1) != (b_raw == -1))
                    fail("U event needs both seeds or -1,-1");
                if (a_raw >= 0) {
                    // A seed friend equal to the id being created is malformed,
                    // not dangling.
                    if (a_raw == static_cast<long long>(g.user_count()))
                        fail("U event seeds itself");
                    synthesize_users(a_raw, t);
                    synthesize_items(b_raw, t);
                }
                const event ev = a_raw >= 0 ? make_new_user(t, static_cast<user_id>(a_raw),
                                                            static_cast<item_id>(b_raw))
                                            : make_new_user(t);
                g.apply_event(ev);
                res.log.append(ev);
                ++res.report.accepted;
                break;
            }
            case 'I': {
                if (a_raw < 0)
                    fail("I event needs an item id");
                if (a_raw < static_cast<long long>(g.item_count())) {
                    ++res.report.duplicates; // item already created
                    break;
                }
                synthesize_items(a_raw - 1, t);
                if (b_raw >= 0)
                    synthesize_users(b_raw, t);
                const event ev = make_new_item(
                    t, static_cast<item_id>(a_raw),
                    b_raw >= 0 ? static_cast<node_id>(b_raw) : no_node);
                g.apply_event(ev);
                res.log.append(ev);
                ++res.report.accepted;
                break;
            }
            case 'S': {
                if (a_raw < 0 || b_raw < 0)
                    fail("S event needs two user ids");
                if (a_raw == b_raw) {
                    ++res.report.self_loops;
                    break;
                }
                synthesize_users(std::max(a_raw, b_raw), t);
                if (g.has_social_out(static_cast<user_id>(a_raw), static_cast<user_id>(b_raw))) {
                    ++res.report.duplicates;
                    break;
                }
                const event ev =
                    make_social_link(t, static_cast<user_id>(a_raw), static_cast<user_id>(b_raw));
                g.apply_event(ev);
                res.log.append(ev);
                ++res.report.accepted;
                break;
            }
            case 'C': {
                if (a_raw < 0 || b_raw < 0)
                    fail("C event needs user and item ids");
                synthesize_users(a_raw, t);
                synthesize_items(b_raw, t);
                if (g.has_cross(static_cast<user_id>(a_raw), static_cast<item_id>(b_raw))) {
                    ++res.report.duplicates;
                    break;
                }
                const event ev =
                    make_cross_link(t, static_cast<user_id>(a_raw), static_cast<item_id>(b_raw));
                g.apply_event(ev);
                res.log.append(ev);
                ++res.report.accepted;
                break;
            }
            default:
                fail("unknown event kind");
        }
    }
    return res;
}

inline parse_result parse_log_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path);
    return parse_log(in, path);
}

// Snapshot export: one row per node with its degree vector. Column 3 holds
// k_s in undirected mode and k_in in directed mode; columns that do not
// apply to a node class or mode hold -1.
inline void write_snapshot_csv(const dual_graph &g, std::ostream &out)
{
    out << "#v1 triadicnet-snapshot directed=" << (g.directed_social() ? 1 : 0) << '\n';
    out << "node_kind,id,k_s|k_in,k_out,k_f,k_p\n";
    const bool dir = g.directed_social();
    for (std::size_t u = 0; u < g.user_count(); ++u) {
        const auto uid = static_cast<user_id>(u);
        out << "U," << u << ',' << (dir ? g.in_degree(uid) : g.social_degree(uid)) << ','
            << (dir ? static_cast<long long>(g.out_degree(uid)) : -1LL) << ','
            << g.favorite_degree(uid) << ",-1\n";
    }
    for (std::size_t it = 0; it < g.item_count(); ++it)
        out << "I," << it << ",-1,-1,-1," << g.popular_degree(static_cast<item_id>(it)) << '\n';
}

} // namespace triadicnet
