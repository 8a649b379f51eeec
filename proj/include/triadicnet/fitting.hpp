// Ordinary least squares on (ln x, ln y): the shared fitter behind every
// power-law exponent reported by the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "triadicnet/core.hpp"

namespace triadicnet {

struct loglog_fit {
    double slope = 0;
    double intercept = 0;     // in ln y units
    double stderr_slope = 0;
    double r2 = 0;
    std::size_t n_points = 0;
};

// Fits ln y = slope * ln x + intercept. Requires at least 5 points with
// distinct positive x and positive y; throws degenerate_support_error
// otherwise.
inline loglog_fit fit_loglog_slope(std::span<const std::pair<double, double>> points)
{
    std::vector<double> lx, ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (const auto &[x, y] : points) {
        if (x > 0 && y > 0) {
            lx.push_back(std::log(x));
            ly.push_back(std::log(y));
        }
    }
    std::vector<double> distinct(lx);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 5)
        throw degenerate_support_error("fit_loglog_slope: fewer than 5 distinct x values");

    const std::size_t n = lx.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = lx[i] - mx;
        const double dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    loglog_fit fit;
    fit.n_points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;

    double ssr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ssr += resid * resid;
    }
    fit.r2 = syy > 0 ? 1.0 - ssr / syy : 1.0;
    fit.stderr_slope = n > 2 ? std::sqrt(std::max(ssr, 0.0) / (static_cast<double>(n - 2) * sxx)) : 0.0;
    return fit;
}

inline loglog_fit fit_loglog_slope(const std::vector<std::pair<double, double>> &points)
{
    return fit_loglog_slope(std::span<const std::pair<double, double>>(points));
}

// Unchecked slope of ln y on ln x for small point sets (sign checks on curve
// tails where the full fitter's 5-point support rule cannot be met).
inline double loglog_slope_unchecked(std::span<const std::pair<double, double>> points)
{
    double mx = 0, my = 0;
    std::size_t n = 0;
    for (const auto &[x, y] : points) {
        if (x > 0 && y > 0) {
            mx += std::log(x);
            my += std::log(y);
            ++n;
        }
    }
    if (n < 2)
        return 0;
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (const auto &[x, y] : points) {
        if (x > 0 && y > 0) {
            const double dx = std::log(x) - mx;
            sxx += dx * dx;
            sxy += dx * (std::log(y) - my);
        }
    }
    return sxx > 0 ? sxy / sxx : 0;
}

// q-th percentile (0..1) of an unsorted sample, by nearest-rank.
inline double percentile(std::vector<double> values, double q)
{
    if (values.empty())
        return 0;
    std::sort(values.begin(), values.end());
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    return values[std::min(rank > 0 ? rank - 1 : 0, values.size() - 1)];
}

} // namespace triadicnet
