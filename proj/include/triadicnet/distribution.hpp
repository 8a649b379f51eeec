// Log-binned degree distributions with a least-squares power-law exponent.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "triadicnet/binning.hpp"
#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"
#include "triadicnet/fitting.hpp"

namespace triadicnet {

struct degree_distribution_result {
    degree_kind kind = degree_kind::k_f;
    std::vector<curve_point> pdf; // x = bin representative, y = density
    std::optional<loglog_fit> fit;
    double mean_degree = 0;
    std::uint64_t node_count = 0;

    // Positive power-law exponent gamma as in p(k) ~ k^-gamma.
    double exponent() const
    {
        return fit ? -fit->slope : std::numeric_limits<double>::quiet_NaN();
    }
};

inline degree_distribution_result degree_distribution(const dual_graph &g, degree_kind kind,
                                                      std::uint64_t min_bin_count = 10,
                                                      std::uint64_t k_min_fit = 1,
                                                      double fit_percentile = 0.99)
{
    if (!g.directed_social() && (kind == degree_kind::k_in || kind == degree_kind::k_out))
        throw invalid_params_error("distribution: directed degrees need a directed graph");
    const bool item_side = kind == degree_kind::k_p;
    const std::size_t n = item_side ? g.item_count() : g.user_count();
    if (n < 100)
        throw degenerate_support_error("distribution: fewer than 100 nodes of class");

    degree_distribution_result res;
    res.kind = kind;
    res.node_count = n;

    struct bin_acc {
        std::uint64_t count = 0;
        double sum_log_k = 0;
    };
    std::vector<bin_acc> bins;
    std::uint64_t positive = 0;
    std::vector<double> positive_degrees;
    double total = 0;
    for (std::size_t id = 0; id < n; ++id) {
        const std::uint32_t k = g.degree(kind, static_cast<node_id>(id));
        total += k;
        if (k == 0)
            continue;
        ++positive;
        positive_degrees.push_back(k);
        const unsigned j = log2_bin_index(k);
        if (j >= bins.size())
            bins.resize(j + 1);
        bins[j].count += 1;
        bins[j].sum_log_k += std::log(static_cast<double>(k));
    }
    res.mean_degree = total / static_cast<double>(n);
    if (positive == 0)
        return res;

    for (unsigned j = 0; j < bins.size(); ++j) {
        if (bins[j].count == 0)
            continue;
        const double x = std::exp(bins[j].sum_log_k / static_cast<double>(bins[j].count));
        const double density = static_cast<double>(bins[j].count) /
                               (static_cast<double>(positive) *
                                static_cast<double>(log2_bin_width(j)));
        res.pdf.push_back({x, density, bins[j].count});
    }

    const double hi = percentile(std::move(positive_degrees), fit_percentile);
    std::vector<std::pair<double, double>> pts;
    for (const auto &p : res.pdf) {
        if (p.count >= min_bin_count && p.x >= static_cast<double>(k_min_fit) && p.x <= hi)
            pts.emplace_back(p.x, p.y);
    }
    try {
        res.fit = fit_loglog_slope(pts);
    } catch (const degenerate_support_error &) {
        res.fit = std::nullopt;
    }
    return res;
}

} // namespace triadicnet
