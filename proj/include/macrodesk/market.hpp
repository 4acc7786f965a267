#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macrodesk::market {

// quantity(P) = intercept + slope * P. Slopes of either sign are allowed;
// the labor-market configuration needs a downward-sloping supply curve.
struct LinearCurve {
    double intercept = 0.0;
    double slope = 0.0;

    double quantity(double price) const { return intercept + slope * price; }
};

struct LinearEquilibrium {
    double price = 0.0;
    double quantity = 0.0;
    bool economic = true;  // false when price or quantity is negative
};

LinearEquilibrium linear_equilibrium(const LinearCurve& supply, const LinearCurve& demand);

struct TatonnementConfig {
    double speed = 0.05;  // price units per unit excess demand
    double tolerance = 1e-9;
    std::int64_t max_iterations = 10000;
    double initial_price = 1.0;

    void validate() const;
};

enum class Verdict { Converged, Diverged, Inconclusive };

std::string verdict_name(Verdict v);

struct TatonnementResult {
    std::vector<double> prices;  // includes the starting price
    Verdict verdict = Verdict::Inconclusive;
    double equilibrium_price = 0.0;
};

// Iterates P <- P + k*(D(P) - S(P)). Converged when the distance to the
// linear equilibrium price drops inside tolerance; diverged when the price
// leaves (0, 1e6 * initial].
TatonnementResult tatonnement(const LinearCurve& supply, const LinearCurve& demand,
                              const TatonnementConfig& config);

// |1 + k*(slope_D - slope_S)|: the iteration contracts iff this is < 1.
double stability_factor(const LinearCurve& supply, const LinearCurve& demand, double speed);
bool is_stable(const LinearCurve& supply, const LinearCurve& demand, double speed);

// Y(N) = scale * N^exponent on (0, full_employment].
struct ConcaveProduction {
    double scale = 1.0;          // a > 0
    double exponent = 0.5;       // in (0,1)
    double full_employment = 1.0;  // NP

    void validate() const;
    double output(double employment) const;
};

// Consumption share as a function of the real wage: either constant or
// affine-saturating, gamma(w) = base + gain * w / (1 + w).
struct GammaFn {
    enum class Kind { Constant, Saturating };
    Kind kind = Kind::Constant;
    double base = 0.6;
    double gain = 0.0;

    double operator()(double wage) const;
};

struct WageDemand {
    double autonomous = 0.0;  // Iv + G + Xn
    double wage = 1.0;
    GammaFn gamma;

    void validate() const;
    double effective(double output) const;  // gamma(wage)*output + autonomous
};

struct NonlinearEquilibrium {
    double employment = 0.0;  // N*
    double output = 0.0;      // Y*
    double residual = 0.0;    // |Y(N*) - Def(N*)|
    bool corner = false;      // demand still exceeds output at full employment
};

// Bisection on F(N) = Y(N) - Def(N) over (0, NP]. A crossing past NP is
// reported as a corner at NP rather than an error.
NonlinearEquilibrium nonlinear_equilibrium(const ConcaveProduction& prod, const WageDemand& dem,
                                           double tolerance = 1e-12,
                                           std::int64_t max_iterations = 200);

struct WageStaticsRow {
    double wage = 0.0;
    double gamma = 0.0;
    double employment = 0.0;
    double output = 0.0;
    bool corner = false;
};

// Equilibrium employment and output across a wage grid; with gamma
// non-decreasing in the wage both columns are non-decreasing.
std::vector<WageStaticsRow> wage_comparative_statics(const ConcaveProduction& prod,
                                                     const WageDemand& dem,
                                                     const std::vector<double>& wage_grid);

struct LongRunPoint {
    std::int64_t period = 0;
    double productivity_factor = 0.0;
    double employment = 0.0;  // N* = Y*/(pi * k0)
    double output = 0.0;      // constant across periods
};

// Linear production Y = pi_t * k0 * N with fixed demand: output stays put
// while equilibrium employment shrinks as productivity grows.
std::vector<LongRunPoint> long_run_series(const std::vector<double>& productivity_factors,
                                          double gamma, double autonomous, double base_slope);

}  // namespace macrodesk::market
