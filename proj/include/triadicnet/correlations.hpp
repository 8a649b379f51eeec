// Static-network correlation measures: Pearson coefficients between degree
// pairs of the same users, and the nearest-neighbor degree curves between
// users and their favorite items,
//
//   kp_nn(i)      = mean popular degree of user i's favorite items,
//   kf_nn(lambda) = mean favorite degree of item lambda's fans,
//
// averaged over nodes of equal degree into <kp_nn(k_f)> and <kf_nn(k_p)>.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "triadicnet/binning.hpp"
#include "triadicnet/core.hpp"
#include "triadicnet/dual_graph.hpp"

namespace triadicnet {

inline double degree_pcc(const dual_graph &g, degree_kind a, degree_kind b)
{
    if (a == degree_kind::k_p || b == degree_kind::k_p)
        throw invalid_params_error("pcc: defined for user degrees only");
    if (!g.directed_social() && (a == degree_kind::k_in || a == degree_kind::k_out ||
                                 b == degree_kind::k_in || b == degree_kind::k_out))
        throw invalid_params_error("pcc: directed degrees need a directed graph");
    const std::size_t n = g.user_count();
    if (n < 2)
        throw zero_variance_error("pcc: need at least 2 users");

    double mean_a = 0, mean_b = 0;
    for (std::size_t u = 0; u < n; ++u) {
        mean_a += g.degree(a, static_cast<node_id>(u));
        mean_b += g.degree(b, static_cast<node_id>(u));
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double saa = 0, sbb = 0, sab = 0;
    for (std::size_t u = 0; u < n; ++u) {
        const double da = g.degree(a, static_cast<node_id>(u)) - mean_a;
        const double db = g.degree(b, static_cast<node_id>(u)) - mean_b;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0 || sbb == 0)
        throw zero_variance_error("pcc: a degree has zero variance");
    if (a == b)
        return 1.0;
    return sab / std::sqrt(saa * sbb);
}

struct nn_correlation {
    std::vector<double> user_nn; // kp_nn per user; NaN where k_f = 0
    std::vector<double> item_nn; // kf_nn per item; NaN where k_p = 0
    std::vector<curve_point> user_curve; // <kp_nn>(k_f)
    std::vector<curve_point> item_curve; // <kf_nn>(k_p)
};

inline nn_correlation nn_degree_curves(const dual_graph &g, std::uint64_t min_bin_count = 1)
{
    if (g.total_favorite_degree() == 0)
        throw empty_class_error("nn: graph has no cross links");

    nn_correlation res;
    res.user_nn.assign(g.user_count(), std::numeric_limits<double>::quiet_NaN());
    res.item_nn.assign(g.item_count(), std::numeric_limits<double>::quiet_NaN());

    log2_binner user_binner, item_binner;
    for (std::size_t u = 0; u < g.user_count(); ++u) {
        const auto items = g.favorite_items(static_cast<user_id>(u));
        if (items.empty())
            continue;
        double sum = 0;
        for (node_id it : items)
            sum += g.popular_degree(it);
        const double nn = sum / static_cast<double>(items.size());
        res.user_nn[u] = nn;
        user_binner.add(items.size(), nn);
    }
    for (std::size_t it = 0; it < g.item_count(); ++it) {
        const auto fan_list = g.fans(static_cast<item_id>(it));
        if (fan_list.empty())
            continue;
        double sum = 0;
        for (node_id u : fan_list)
            sum += g.favorite_degree(u);
        const double nn = sum / static_cast<double>(fan_list.size());
        res.item_nn[it] = nn;
        item_binner.add(fan_list.size(), nn);
    }
    res.user_curve = user_binner.mean_curve(min_bin_count);
    res.item_curve = item_binner.mean_curve(min_bin_count);
    return res;
}

} // namespace triadicnet
