#include "kernels_impl.hpp"

namespace mpimpe::kernels::scalar {

namespace {

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

void split_net(std::span<const double> load, std::span<const double> pv, std::span<double> rl,
               std::span<double> sg) {
    for (std::size_t i = 0; i < load.size(); ++i) {
        rl[i] = positive_part(load[i] - pv[i]);
        sg[i] = positive_part(pv[i] - load[i]);
    }
}

void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

void scale(std::span<const double> v, double factor, std::span<double> out) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
}

void block_mean(std::span<const double> v, std::size_t block, std::span<double> out) {
    const double n = static_cast<double>(block);
    for (std::size_t k = 0; k < out.size(); ++k) {
        double acc = v[k * block];
        for (std::size_t j = 1; j < block; ++j) acc = acc + v[k * block + j];
        out[k] = acc / n;
    }
}

double sum(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

double sum_excess(std::span<const double> v, double cap) {
    double acc = 0.0;
    for (double x : v) acc += positive_part(x - cap);
    return acc;
}

MaxResult max(std::span<const double> v) {
    MaxResult best{v[0], 0};
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > best.value) best = {v[i], i};
    }
    return best;
}

MaxResult max_combined(std::span<const double> a, std::span<const double> b,
                       std::span<const double> c) {
    auto at = [&](std::size_t i) { return c.empty() ? a[i] - b[i] : (a[i] - b[i]) + c[i]; };
    MaxResult best{at(0), 0};
    for (std::size_t i = 1; i < a.size(); ++i) {
        const double x = at(i);
        if (x > best.value) best = {x, i};
    }
    return best;
}

void eliminate(std::span<double> row, std::span<const double> pivot_row, double factor) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        const double p = factor * pivot_row[i];
        row[i] = row[i] - p;
    }
}

void eliminate_indexed(std::span<double> row, std::span<const std::uint32_t> index,
                       std::span<const double> values, double factor) {
    for (std::size_t k = 0; k < index.size(); ++k) {
        const double p = factor * values[k];
        row[index[k]] = row[index[k]] - p;
    }
}

void divide(std::span<double> row, double divisor) {
    for (double& x : row) x = x / divisor;
}

}  // namespace mpimpe::kernels::scalar
