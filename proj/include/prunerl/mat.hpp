#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "prunerl/errors.hpp"

namespace prunerl {

/// Dense row-major matrix of doubles.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    static Mat from_rows(const std::vector<std::vector<double>>& rows_in) {
        Mat m(static_cast<int>(rows_in.size()),
              rows_in.empty() ? 0 : static_cast<int>(rows_in.front().size()));
        for (int i = 0; i < m.rows; ++i) {
            if (static_cast<int>(rows_in[static_cast<std::size_t>(i)].size()) != m.cols)
                throw Error("Mat::from_rows: ragged rows");
            for (int j = 0; j < m.cols; ++j)
                m(i, j) = rows_in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    double& operator()(int i, int j) {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }
    double operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }

    std::span<const double> row(int i) const {
        return {data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols),
                static_cast<std::size_t>(cols)};
    }

    std::size_t size() const { return data.size(); }

    void fill(double v) {
        for (double& x : data) x = v;
    }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    bool all_finite() const {
        for (double x : data)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

/// y = W x
inline void matvec(const Mat& w, std::span<const double> x, std::vector<double>& y) {
    y.resize(static_cast<std::size_t>(w.rows));
    for (int i = 0; i < w.rows; ++i) {
        const double* wi = w.data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(w.cols);
        double s = 0.0;
        for (int j = 0; j < w.cols; ++j) s += wi[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
}

/// g = W^T d
inline void matvec_t(const Mat& w, std::span<const double> d, std::vector<double>& g) {
    g.assign(static_cast<std::size_t>(w.cols), 0.0);
    for (int i = 0; i < w.rows; ++i) {
        const double di = d[static_cast<std::size_t>(i)];
        if (di == 0.0) continue;
        const double* wi = w.data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(w.cols);
        for (int j = 0; j < w.cols; ++j) g[static_cast<std::size_t>(j)] += wi[j] * di;
    }
}

/// G += scale * d x^T
inline void add_outer(Mat& g, std::span<const double> d, std::span<const double> x, double scale) {
    for (int i = 0; i < g.rows; ++i) {
        const double di = scale * d[static_cast<std::size_t>(i)];
        if (di == 0.0) continue;
        double* gi = g.data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(g.cols);
        for (int j = 0; j < g.cols; ++j) gi[j] += di * x[static_cast<std::size_t>(j)];
    }
}

}  // namespace prunerl
