// Degree growth statistics between two times: r = ln(k1/k0) for every node
// with k0 >= 1, binned by initial degree. The negative log-log slopes of the
// conditional mean and standard deviation are the Gibrat exponents beta(r)
// and beta(sigma); beta(sigma) < 1/2 signals long-term correlation in the
// growth process.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "triadicnet/binning.hpp"
#include "triadicnet/core.hpp"
#include "triadicnet/event_log.hpp"
#include "triadicnet/fitting.hpp"

namespace triadicnet {

struct growth_stats {
    degree_kind kind = degree_kind::k_f;
    time_t t0 = 0, t1 = 0;
    std::vector<curve_point> mean_curve;   // x = k0 bin, y = <r(k0)>
    std::vector<curve_point> stddev_curve; // y = sigma(k0)
    std::optional<loglog_fit> fit_mean, fit_stddev;
    std::uint64_t sample_count = 0;

    double beta_mean() const
    {
        return fit_mean ? -fit_mean->slope : std::numeric_limits<double>::quiet_NaN();
    }
    double beta_stddev() const
    {
        return fit_stddev ? -fit_stddev->slope : std::numeric_limits<double>::quiet_NaN();
    }
};

inline growth_stats measure_growth(const event_log &log, degree_kind kind, time_t t0, time_t t1,
                                   std::uint64_t min_bin_count = 10)
{
    if (t0 >= t1)
        throw time_out_of_range_error("growth: t0 must precede t1");
    if (t0 < 0 || t1 > log.last_time())
        throw time_out_of_range_error("growth: window outside log range");
    if (!log.directed_social() && (kind == degree_kind::k_in || kind == degree_kind::k_out))
        throw invalid_params_error("growth: directed degrees need a directed log");

    const bool item_side = kind == degree_kind::k_p;
    dual_graph g(log.directed_social());
    const std::size_t mid = log.end_of_prefix(t0);
    for (std::size_t i = 0; i < mid; ++i)
        g.apply_event(log[i]);

    const std::size_t tracked = item_side ? g.item_count() : g.user_count();
    std::vector<std::uint32_t> k0(tracked);
    for (std::size_t id = 0; id < tracked; ++id)
        k0[id] = g.degree(kind, static_cast<node_id>(id));

    const std::size_t end = log.end_of_prefix(t1);
    for (std::size_t i = mid; i < end; ++i)
        g.apply_event(log[i]);

    growth_stats stats;
    stats.kind = kind;
    stats.t0 = t0;
    stats.t1 = t1;
    log2_binner binner;
    for (std::size_t id = 0; id < tracked; ++id) {
        if (k0[id] == 0)
            continue;
        const double k1 = g.degree(kind, static_cast<node_id>(id));
        binner.add(k0[id], std::log(k1 / static_cast<double>(k0[id])));
        ++stats.sample_count;
    }
    stats.mean_curve = binner.mean_curve(min_bin_count);
    stats.stddev_curve = binner.stddev_curve(min_bin_count);

    auto try_fit = [](const std::vector<curve_point> &curve) -> std::optional<loglog_fit> {
        std::vector<std::pair<double, double>> pts;
        for (const auto &p : curve)
            if (p.y > 0)
                pts.emplace_back(p.x, p.y);
        try {
            return fit_loglog_slope(pts);
        } catch (const degenerate_support_error &) {
            return std::nullopt;
        }
    };
    stats.fit_mean = try_fit(stats.mean_curve);
    stats.fit_stddev = try_fit(stats.stddev_curve);
    return stats;
}

} // namespace triadicnet
