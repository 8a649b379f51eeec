// Base-2 logarithmic binning, used wherever a curve is reported against a
// degree axis.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace triadicnet {

// Bin index of k >= 1: bin j covers [2^j, 2^(j+1)).
inline unsigned log2_bin_index(std::uint64_t k)
{
    return std::bit_width(k) - 1;
}

inline std::uint64_t log2_bin_lo(unsigned j) { return std::uint64_t{1} << j; }
inline std::uint64_t log2_bin_width(unsigned j) { return std::uint64_t{1} << j; }

struct curve_point {
    double x = 0;
    double y = 0;
    std::uint64_t count = 0;
};

// Accumulates (k, value) samples with k >= 1 into base-2 bins. The reported
// x is the geometric mean of the member ks, y the arithmetic mean of values.
class log2_binner {
  public:
    void add(std::uint64_t k, double value)
    {
        const unsigned j = log2_bin_index(k);
        if (j >= bins_.size())
            bins_.resize(j + 1);
        bins_[j].count += 1;
        bins_[j].sum_value += value;
        bins_[j].sum_sq += value * value;
        bins_[j].sum_log_k += std::log(static_cast<double>(k));
    }

    // Mean curve over bins with at least min_count samples.
    std::vector<curve_point> mean_curve(std::uint64_t min_count = 1) const
    {
        std::vector<curve_point> out;
        for (const auto &b : bins_) {
            if (b.count < min_count)
                continue;
            const double n = static_cast<double>(b.count);
            out.push_back({std::exp(b.sum_log_k / n), b.sum_value / n, b.count});
        }
        return out;
    }

    // Sample standard deviation per bin (n-1 denominator), same filtering.
    std::vector<curve_point> stddev_curve(std::uint64_t min_count = 2) const
    {
        std::vector<curve_point> out;
        for (const auto &b : bins_) {
            if (b.count < min_count)
                continue;
            const double n = static_cast<double>(b.count);
            const double mean = b.sum_value / n;
            double var = (b.sum_sq - n * mean * mean) / (n - 1);
            if (var < 0)
                var = 0;
            out.push_back({std::exp(b.sum_log_k / n), std::sqrt(var), b.count});
        }
        return out;
    }

    bool empty() const { return bins_.empty(); }

  private:
    struct bin {
        std::uint64_t count = 0;
        double sum_value = 0;
        double sum_sq = 0;
        double sum_log_k = 0;
    };
    std::vector<bin> bins_;
};

} // namespace triadicnet
