// Preferential-attachment estimators.
//
// For a window starting at t0: C(x) counts nodes whose source degree is x at
// t0; A(x) counts target-degree units those nodes acquire during
// (t0, t0 + dt], split into A_T(x) + A_N(x) by triadic classification of each
// link against the graph at the moment it formed. The normalized relative
// probability and its cumulative are
//
//   Pi_i(x) = (A_i(x) / C(x)) / sum_x' (A(x') / C(x'))      i in {T, N}
//   kappa_i(x) = sum_{x' <= x} Pi_i(x')
//
// Normalized Pi curves are averaged across windows (missing support counts
// as zero), then cumulated; under preferential attachment kappa ~ x^(alpha+1)
// and alpha is fitted as the log-log slope of kappa minus one.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "triadicnet/binning.hpp"
#include "triadicnet/core.hpp"
#include "triadicnet/event_log.hpp"
#include "triadicnet/fitting.hpp"
#include "triadicnet/replay.hpp"

namespace triadicnet {

struct pa_request {
    degree_kind source; // x axis
    degree_kind target; // whose gains are counted
};

struct pa_options {
    std::vector<time_t> window_starts;
    time_t window_length = 100;
    std::uint64_t min_bin_count = 10;
    double fit_percentile = 0.99;
};

struct pa_estimate {
    degree_kind source = degree_kind::k_f;
    degree_kind target = degree_kind::k_f;
    std::vector<time_t> window_starts;
    time_t window_length = 0;
    std::size_t windows_used = 0; // windows that contained any gain

    // Dense by source degree x, pooled over windows.
    std::vector<std::uint64_t> population;        // sum of C(x)
    std::vector<std::uint64_t> attach_triadic;    // sum of A_T(x)
    std::vector<std::uint64_t> attach_nontriadic; // sum of A_N(x)

    // Window-averaged normalized curves and their cumulatives.
    std::vector<double> pi, pi_triadic, pi_nontriadic;
    std::vector<double> kappa, kappa_triadic, kappa_nontriadic;

    std::optional<loglog_fit> fit, fit_triadic, fit_nontriadic;
    std::uint64_t gain_count = 0;

    bool empty() const { return windows_used == 0; }
    static double alpha_of(const std::optional<loglog_fit> &f)
    {
        return f ? f->slope - 1.0 : std::numeric_limits<double>::quiet_NaN();
    }
    double alpha() const { return alpha_of(fit); }
    double alpha_triadic() const { return alpha_of(fit_triadic); }
    double alpha_nontriadic() const { return alpha_of(fit_nontriadic); }
};

namespace detail {

inline void check_pa_pair(const event_log &log, const pa_request &req)
{
    const bool src_item = req.source == degree_kind::k_p;
    const bool dst_item = req.target == degree_kind::k_p;
    if (src_item != dst_item)
        throw invalid_params_error("pa: item degree k_p pairs only with k_p");
    if (!log.directed_social() &&
        (req.source == degree_kind::k_in || req.source == degree_kind::k_out ||
         req.target == degree_kind::k_in || req.target == degree_kind::k_out))
        throw invalid_params_error("pa: directed degrees need a directed log");
}

struct pa_window {
    time_t t0 = 0;
    std::size_t start_pos = 0, end_pos = 0;
    std::size_t users_at_t0 = 0, items_at_t0 = 0;
    std::map<degree_kind, std::vector<std::uint32_t>> source_degrees;
    // [pair][x] gain counts
    std::vector<std::vector<std::uint64_t>> gains_triadic;
    std::vector<std::vector<std::uint64_t>> gains_nontriadic;
    bool active = false;
};

inline void bump(std::vector<std::uint64_t> &v, std::size_t x)
{
    if (x >= v.size())
        v.resize(x + 1, 0);
    ++v[x];
}

} // namespace detail

// Runs several source/target pairs over the same windows in one replay; the
// per-link classification is shared, which is what makes the full Table-3
// style grid affordable on large logs.
inline std::vector<pa_estimate> measure_pa_grid(const event_log &log,
                                                std::span<const pa_request> pairs,
                                                const pa_options &opt)
{
    if (opt.window_starts.empty())
        throw invalid_params_error("pa: no windows given");
    if (opt.window_length <= 0)
        throw invalid_params_error("pa: window length must be positive");
    for (const auto &req : pairs)
        detail::check_pa_pair(log, req);
    for (time_t t0 : opt.window_starts) {
        if (t0 < 0 || t0 + opt.window_length > log.last_time())
            throw time_out_of_range_error("pa: window [" + std::to_string(t0) + ", " +
                                          std::to_string(t0 + opt.window_length) +
                                          "] outside log range");
    }

    std::vector<degree_kind> source_kinds;
    for (const auto &req : pairs) {
        if (std::find(source_kinds.begin(), source_kinds.end(), req.source) == source_kinds.end())
            source_kinds.push_back(req.source);
    }

    // Windows in ascending t0 order; this is also the averaging order.
    std::vector<detail::pa_window> windows;
    for (time_t t0 : opt.window_starts) {
        detail::pa_window w;
        w.t0 = t0;
        w.start_pos = log.end_of_prefix(t0);
        w.end_pos = log.end_of_prefix(t0 + opt.window_length);
        w.gains_triadic.resize(pairs.size());
        w.gains_nontriadic.resize(pairs.size());
        windows.push_back(std::move(w));
    }
    std::sort(windows.begin(), windows.end(),
              [](const auto &a, const auto &b) { return a.t0 < b.t0; });

    std::vector<std::size_t> breakpoints;
    for (const auto &w : windows) {
        breakpoints.push_back(w.start_pos);
        breakpoints.push_back(w.end_pos);
    }
    breakpoints.push_back(log.size());
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    dual_graph g(log.directed_social());
    std::vector<detail::pa_window *> active;

    auto capture = [&](detail::pa_window &w) {
        w.users_at_t0 = g.user_count();
        w.items_at_t0 = g.item_count();
        for (degree_kind kind : source_kinds) {
            const std::size_t n = kind == degree_kind::k_p ? w.items_at_t0 : w.users_at_t0;
            std::vector<std::uint32_t> deg(n);
            for (std::size_t id = 0; id < n; ++id)
                deg[id] = g.degree(kind, static_cast<node_id>(id));
            w.source_degrees.emplace(kind, std::move(deg));
        }
    };

    auto on_link = [&](const dual_graph &state, const link_view &lv) {
        if (active.empty())
            return;
        const bool union_new = !lv.social || !state.has_social(lv.a, lv.b);
        const link_class cls = classify_link(state, lv);
        for (detail::pa_window *w : active) {
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const degree_kind y = pairs[p].target;
                node_id gainers[2];
                std::size_t n_gainers = 0;
                if (lv.social) {
                    if (y == degree_kind::k_s && union_new) {
                        gainers[n_gainers++] = lv.a;
                        gainers[n_gainers++] = lv.b;
                    } else if (y == degree_kind::k_out) {
                        gainers[n_gainers++] = lv.a;
                    } else if (y == degree_kind::k_in) {
                        gainers[n_gainers++] = lv.b;
                    }
                } else {
                    if (y == degree_kind::k_f)
                        gainers[n_gainers++] = lv.a;
                    else if (y == degree_kind::k_p)
                        gainers[n_gainers++] = lv.b;
                }
                if (n_gainers == 0)
                    continue;
                const bool item_side = y == degree_kind::k_p;
                const std::size_t born_before =
                    item_side ? w->items_at_t0 : w->users_at_t0;
                const auto &deg = w->source_degrees.at(pairs[p].source);
                for (std::size_t gi = 0; gi < n_gainers; ++gi) {
                    const node_id node = gainers[gi];
                    if (node >= born_before)
                        continue;
                    auto &hist = cls == link_class::triadic ? w->gains_triadic[p]
                                                            : w->gains_nontriadic[p];
                    detail::bump(hist, deg[node]);
                }
            }
        }
    };

    std::size_t pos = 0;
    for (std::size_t bp : breakpoints) {
        replay_links(log, g, pos, bp, on_link);
        pos = bp;
        for (auto &w : windows) {
            if (w.active && w.end_pos == bp) {
                w.active = false;
                active.erase(std::find(active.begin(), active.end(), &w));
            }
        }
        for (auto &w : windows) {
            if (!w.active && w.start_pos == bp && w.end_pos > bp) {
                w.active = true;
                capture(w);
                active.push_back(&w);
            }
        }
    }

    // Assemble the per-pair estimates.
    std::vector<pa_estimate> results;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        pa_estimate est;
        est.source = pairs[p].source;
        est.target = pairs[p].target;
        est.window_length = opt.window_length;
        for (const auto &w : windows)
            est.window_starts.push_back(w.t0);

        std::vector<double> sum_pi_t, sum_pi_n;
        for (const auto &w : windows) {
            const auto &deg = w.source_degrees.at(pairs[p].source);
            const std::size_t n_nodes =
                pairs[p].source == degree_kind::k_p ? w.items_at_t0 : w.users_at_t0;
            std::vector<std::uint64_t> c;
            for (std::size_t id = 0; id < n_nodes; ++id)
                detail::bump(c, deg[id]);

            const auto &at = w.gains_triadic[p];
            const auto &an = w.gains_nontriadic[p];
            const std::size_t xmax = std::max(at.size(), an.size());
            double denom = 0;
            for (std::size_t x = 0; x < xmax; ++x) {
                const std::uint64_t a =
                    (x < at.size() ? at[x] : 0) + (x < an.size() ? an[x] : 0);
                if (a > 0 && x < c.size() && c[x] > 0)
                    denom += static_cast<double>(a) / static_cast<double>(c[x]);
            }

            // Pool raw histograms regardless of whether the window had gains.
            if (c.size() > est.population.size())
                est.population.resize(c.size(), 0);
            for (std::size_t x = 0; x < c.size(); ++x)
                est.population[x] += c[x];
            if (at.size() > est.attach_triadic.size())
                est.attach_triadic.resize(at.size(), 0);
            for (std::size_t x = 0; x < at.size(); ++x) {
                est.attach_triadic[x] += at[x];
                est.gain_count += at[x];
            }
            if (an.size() > est.attach_nontriadic.size())
                est.attach_nontriadic.resize(an.size(), 0);
            for (std::size_t x = 0; x < an.size(); ++x) {
                est.attach_nontriadic[x] += an[x];
                est.gain_count += an[x];
            }

            if (denom == 0)
                continue;
            ++est.windows_used;
            if (xmax > sum_pi_t.size()) {
                sum_pi_t.resize(xmax, 0);
                sum_pi_n.resize(xmax, 0);
            }
            for (std::size_t x = 0; x < xmax; ++x) {
                if (x >= c.size() || c[x] == 0)
                    continue;
                const double cx = static_cast<double>(c[x]);
                if (x < at.size() && at[x] > 0)
                    sum_pi_t[x] += static_cast<double>(at[x]) / cx / denom;
                if (x < an.size() && an[x] > 0)
                    sum_pi_n[x] += static_cast<double>(an[x]) / cx / denom;
            }
        }

        if (est.windows_used > 0) {
            const double inv_w = 1.0 / static_cast<double>(est.windows_used);
            const std::size_t xmax = sum_pi_t.size();
            est.pi_triadic.resize(xmax, 0);
            est.pi_nontriadic.resize(xmax, 0);
            est.pi.resize(xmax, 0);
            est.kappa_triadic.resize(xmax, 0);
            est.kappa_nontriadic.resize(xmax, 0);
            est.kappa.resize(xmax, 0);
            double kt = 0, kn = 0;
            for (std::size_t x = 0; x < xmax; ++x) {
                est.pi_triadic[x] = sum_pi_t[x] * inv_w;
                est.pi_nontriadic[x] = sum_pi_n[x] * inv_w;
                est.pi[x] = est.pi_triadic[x] + est.pi_nontriadic[x];
                kt += est.pi_triadic[x];
                kn += est.pi_nontriadic[x];
                est.kappa_triadic[x] = kt;
                est.kappa_nontriadic[x] = kn;
                est.kappa[x] = kt + kn;
            }

            // Fit window: first populated degree >= 1 up to the pooled
            // 99th-percentile degree, sampled once per base-2 bin, requiring
            // the pooled population in the bin to reach min_bin_count.
            std::uint64_t total = 0;
            for (std::size_t x = 1; x < est.population.size(); ++x)
                total += est.population[x];
            double hi = 0;
            if (total > 0) {
                const auto rank = static_cast<std::uint64_t>(
                    std::ceil(opt.fit_percentile * static_cast<double>(total)));
                std::uint64_t cum = 0;
                for (std::size_t x = 1; x < est.population.size(); ++x) {
                    cum += est.population[x];
                    if (cum >= std::max<std::uint64_t>(rank, 1)) {
                        hi = static_cast<double>(x);
                        break;
                    }
                }
            }

            auto fit_curve = [&](const std::vector<double> &kap) -> std::optional<loglog_fit> {
                std::vector<std::pair<double, double>> pts;
                const std::size_t x_hi =
                    std::min<std::size_t>(static_cast<std::size_t>(hi), xmax ? xmax - 1 : 0);
                for (unsigned j = 0; (std::uint64_t{1} << j) <= x_hi; ++j) {
                    const std::size_t lo = std::size_t{1} << j;
                    const std::size_t up = std::min<std::size_t>(x_hi, (lo << 1) - 1);
                    std::uint64_t mass = 0;
                    for (std::size_t x = lo; x <= up && x < est.population.size(); ++x)
                        mass += est.population[x];
                    if (mass < opt.min_bin_count)
                        continue;
                    const std::size_t xe = up;
                    if (xe < kap.size() && kap[xe] > 0)
                        pts.emplace_back(static_cast<double>(xe), kap[xe]);
                }
                try {
                    return fit_loglog_slope(pts);
                } catch (const degenerate_support_error &) {
                    return std::nullopt;
                }
            };
            est.fit = fit_curve(est.kappa);
            est.fit_triadic = fit_curve(est.kappa_triadic);
            est.fit_nontriadic = fit_curve(est.kappa_nontriadic);
        }
        results.push_back(std::move(est));
    }
    return results;
}

inline pa_estimate measure_pa(const event_log &log, degree_kind source, degree_kind target,
                              const std::vector<time_t> &window_starts, time_t window_length)
{
    pa_options opt;
    opt.window_starts = window_starts;
    opt.window_length = window_length;
    const pa_request req{source, target};
    auto results = measure_pa_grid(log, std::span<const pa_request>(&req, 1), opt);
    if (results.front().empty())
        throw empty_window_error("pa: no attachment events in any window");
    return std::move(results.front());
}

} // namespace triadicnet
