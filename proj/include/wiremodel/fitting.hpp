#pragma once

#include <vector>

#include "wiremodel/ppl_model.hpp"

namespace wiremodel {

// Paired samples for curve fitting. Contract: at least 3 points, x values
// finite, strictly positive and pairwise distinct, y values finite.
struct DataSeries {
    std::vector<double> x;
    std::vector<double> y;
};

void validate_series(const DataSeries& series); // throws ConfigError

// Loss points that inform a power-law fit: 0 < ppl <= 20 (the random-loss
// band the model is valid in) and snr > 0 (where the power law is defined).
// Zero-loss plateaus are excluded — clamped zeros would bias c downward.
inline constexpr double kFitWindowMaxPpl = 20.0;
inline constexpr const char* kFitWindowLabel = "0<ppl<=20";
DataSeries apply_fit_window(const DataSeries& raw);

struct FitResult {
    PowerLawCoefficients coeffs;
    double r_squared = 0.0; // NaN when the series has zero variance
    bool r_squared_defined = true;
    double rmse = 0.0;
    int n_points = 0;
    bool converged = false;
    // SSE at the initial guess and after every accepted step; non-increasing
    // by construction (damped steps are only taken when they reduce SSE).
    std::vector<double> sse_history;
};

// Least-squares fit of y = a*x^b + c (linear-space objective, so c may be
// negative). Levenberg-Marquardt on (ln a, b, c) — log-space keeps the normal
// equations conditioned when a spans tens of orders of magnitude and keeps
// a > 0 structurally. Initialized from log-log linear regression over the
// y > 0 points with c0 = 0; capped at 200 iterations; converged means the
// relative SSE improvement fell to 1e-10 or below (or no damped step could
// improve further).
FitResult fit_power_law(const DataSeries& series);

// Pearson correlation. Throws ConfigError on length mismatch, fewer than two
// points, or zero variance in either input.
double pcc(const std::vector<double>& u, const std::vector<double>& v);

// Root-mean-square difference of paired values.
double rmse(const std::vector<double>& u, const std::vector<double>& v);

// 1 - SS_res/SS_tot. Throws ConfigError when the observed series has zero
// variance (SS_tot = 0).
double r_squared(const std::vector<double>& observed, const std::vector<double>& predicted);

struct ComparisonStats {
    double pcc = 0.0;
    double rmse = 0.0;
    int n_points = 0;
};

ComparisonStats compare_series(const std::vector<double>& observed,
                               const std::vector<double>& predicted);

} // namespace wiremodel
