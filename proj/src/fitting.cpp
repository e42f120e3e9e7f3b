#include "wiremodel/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wiremodel/errors.hpp"

namespace wiremodel {

void validate_series(const DataSeries& series) {
    if (series.x.size() != series.y.size())
        throw ConfigError("data series x/y lengths differ");
    if (series.x.size() < 3)
        throw ConfigError("data series needs at least 3 points");
    for (std::size_t i = 0; i < series.x.size(); ++i) {
        if (!std::isfinite(series.x[i]) || series.x[i] <= 0.0)
            throw ConfigError("data series x values must be finite and > 0");
        if (!std::isfinite(series.y[i]))
            throw ConfigError("data series y values must be finite");
    }
    std::vector<double> sorted = series.x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("data series x values must be distinct");
}

DataSeries apply_fit_window(const DataSeries& raw) {
    if (raw.x.size() != raw.y.size())
        throw ConfigError("data series x/y lengths differ");
    DataSeries out;
    for (std::size_t i = 0; i < raw.x.size(); ++i) {
        if (raw.x[i] > 0.0 && raw.y[i] > 0.0 && raw.y[i] <= kFitWindowMaxPpl) {
            out.x.push_back(raw.x[i]);
            out.y.push_back(raw.y[i]);
        }
    }
    return out;
}

namespace {

// Solve the 3x3 system A*delta = g in place; returns false when a pivot
// collapses (caller treats that as a failed damped step).
bool solve3(double a[3][3], double g[3], double delta[3]) {
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[idx[r]][col]) > std::fabs(a[idx[pivot]][col]))
                pivot = r;
        std::swap(idx[col], idx[pivot]);
        double p = a[idx[col]][col];
        if (!(std::fabs(p) > 0.0) || !std::isfinite(p))
            return false;
        for (int r = col + 1; r < 3; ++r) {
            double f = a[idx[r]][col] / p;
            for (int cc = col; cc < 3; ++cc)
                a[idx[r]][cc] -= f * a[idx[col]][cc];
            g[idx[r]] -= f * g[idx[col]];
        }
    }
    for (int row = 2; row >= 0; --row) {
        double s = g[idx[row]];
        for (int cc = row + 1; cc < 3; ++cc)
            s -= a[idx[row]][cc] * delta[cc];
        delta[row] = s / a[idx[row]][row];
        if (!std::isfinite(delta[row]))
            return false;
    }
    return true;
}

double sse_for(const DataSeries& s, double la, double b, double c) {
    double sse = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        double model = std::exp(la + b * std::log(s.x[i])) + c;
        double r = s.y[i] - model;
        sse += r * r;
    }
    return sse;
}

} // namespace

FitResult fit_power_law(const DataSeries& series) {
    validate_series(series);
    const std::size_t n = series.x.size();

    // Log-log regression init (c0 = 0). Non-positive y carry no log
    // information and are left to the damped iterations.
    double la = 0.0, b = -1.0;
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (series.y[i] <= 0.0)
                continue;
            double lx = std::log(series.x[i]);
            double ly = std::log(std::max(series.y[i], 1e-300));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++m;
        }
        if (m >= 2) {
            double denom = static_cast<double>(m) * sxx - sx * sx;
            if (std::fabs(denom) > 0.0) {
                b = (static_cast<double>(m) * sxy - sx * sy) / denom;
                la = (sy - b * sx) / static_cast<double>(m);
            }
        }
    }
    double c = 0.0;

    FitResult result;
    double sse = sse_for(series, la, b, c);
    result.sse_history.push_back(sse);

    constexpr int kMaxIterations = 200;
    constexpr double kRelTol = 1e-10;
    double lambda = 1e-3;
    bool converged = sse == 0.0;

    for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
        // Normal equations at the current point.
        double jtj[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
        double jtr[3] = {0, 0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            double lx = std::log(series.x[i]);
            double m = std::exp(la + b * lx);
            double r = series.y[i] - (m + c);
            double j[3] = {m, m * lx, 1.0};
            for (int p = 0; p < 3; ++p) {
                jtr[p] += j[p] * r;
                for (int q = 0; q < 3; ++q)
                    jtj[p][q] += j[p] * j[q];
            }
        }

        // Damped retries: grow lambda until a step reduces SSE or damping
        // saturates (no descent direction left => treat as converged).
        bool accepted = false;
        while (lambda < 1e16) {
            double a_mat[3][3];
            double g[3] = {jtr[0], jtr[1], jtr[2]};
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    a_mat[p][q] = jtj[p][q];
            for (int p = 0; p < 3; ++p) {
                double d = jtj[p][p];
                a_mat[p][p] += lambda * (d > 0.0 ? d : 1.0);
            }
            double delta[3];
            if (solve3(a_mat, g, delta)) {
                double nla = la + delta[0];
                double nb = b + delta[1];
                double nc = c + delta[2];
                double nsse = sse_for(series, nla, nb, nc);
                if (std::isfinite(nsse) && nsse < sse) {
                    double rel = (sse - nsse) / sse;
                    la = nla;
                    b = nb;
                    c = nc;
                    sse = nsse;
                    result.sse_history.push_back(sse);
                    lambda = std::max(lambda * 0.33, 1e-12);
                    accepted = true;
                    if (rel <= kRelTol || sse == 0.0)
                        converged = true;
                    break;
                }
            }
            lambda *= 10.0;
        }
        if (!accepted) {
            converged = true; // damping saturated: local minimum to machine precision
            break;
        }
    }

    result.coeffs = {std::exp(la), b, c};
    result.n_points = static_cast<int>(n);
    result.converged = converged;
    result.rmse = std::sqrt(sse / static_cast<double>(n));

    double mean = 0.0;
    for (double v : series.y)
        mean += v;
    mean /= static_cast<double>(n);
    double ss_tot = 0.0;
    for (double v : series.y)
        ss_tot += (v - mean) * (v - mean);
    if (ss_tot > 0.0) {
        result.r_squared = 1.0 - sse / ss_tot;
        result.r_squared_defined = true;
    } else {
        result.r_squared = std::numeric_limits<double>::quiet_NaN();
        result.r_squared_defined = false;
    }
    return result;
}

double pcc(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size())
        throw ConfigError("pcc: series lengths differ");
    if (u.size() < 2)
        throw ConfigError("pcc: need at least two points");
    const double n = static_cast<double>(u.size());
    double mu = 0, mv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        mu += u[i];
        mv += v[i];
    }
    mu /= n;
    mv /= n;
    double suu = 0, svv = 0, suv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double du = u[i] - mu, dv = v[i] - mv;
        suu += du * du;
        svv += dv * dv;
        suv += du * dv;
    }
    if (!(suu > 0.0) || !(svv > 0.0))
        throw ConfigError("pcc: zero-variance input");
    return suv / std::sqrt(suu * svv);
}

double rmse(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size())
        throw ConfigError("rmse: series lengths differ");
    if (u.empty())
        throw ConfigError("rmse: empty series");
    double sse = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double d = u[i] - v[i];
        sse += d * d;
    }
    return std::sqrt(sse / static_cast<double>(u.size()));
}

double r_squared(const std::vector<double>& observed, const std::vector<double>& predicted) {
    if (observed.size() != predicted.size())
        throw ConfigError("r_squared: series lengths differ");
    if (observed.size() < 2)
        throw ConfigError("r_squared: need at least two points");
    double mean = 0.0;
    for (double v : observed)
        mean += v;
    mean /= static_cast<double>(observed.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        ss_tot += (observed[i] - mean) * (observed[i] - mean);
        double d = observed[i] - predicted[i];
        ss_res += d * d;
    }
    if (!(ss_tot > 0.0))
        throw ConfigError("r_squared: observed series has zero variance");
    return 1.0 - ss_res / ss_tot;
}

ComparisonStats compare_series(const std::vector<double>& observed,
                               const std::vector<double>& predicted) {
    ComparisonStats stats;
    stats.pcc = pcc(observed, predicted);
    stats.rmse = rmse(observed, predicted);
    stats.n_points = static_cast<int>(observed.size());
    return stats;
}

} // namespace wiremodel
