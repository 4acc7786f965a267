#include "macrodesk/market.hpp"

#include <cmath>

#include "macrodesk/errors.hpp"

namespace macrodesk::market {

LinearEquilibrium linear_equilibrium(const LinearCurve& supply, const LinearCurve& demand) {
    const double slope_gap = demand.slope - supply.slope;
    if (slope_gap == 0.0) {
        throw NoEquilibriumError("market: supply and demand curves are parallel");
    }
    LinearEquilibrium eq;
    eq.price = (supply.intercept - demand.intercept) / slope_gap;
    eq.quantity = demand.quantity(eq.price);
    eq.economic = eq.price >= 0.0 && eq.quantity >= 0.0;
    return eq;
}

void TatonnementConfig::validate() const {
    if (!(speed > 0.0)) throw ValidationError("market: adjustment speed must be > 0");
    if (!(tolerance > 0.0)) throw ValidationError("market: tolerance must be > 0");
    if (max_iterations < 1) throw ValidationError("market: max_iterations must be >= 1");
    if (!(initial_price > 0.0)) throw ValidationError("market: initial price must be > 0");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Converged: return "converged";
        case Verdict::Diverged: return "diverged";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

TatonnementResult tatonnement(const LinearCurve& supply, const LinearCurve& demand,
                              const TatonnementConfig& config) {
    config.validate();
    const LinearEquilibrium eq = linear_equilibrium(supply, demand);

    TatonnementResult result;
    result.equilibrium_price = eq.price;
    const double escape = 1e6 * config.initial_price;

    double price = config.initial_price;
    result.prices.push_back(price);
    for (std::int64_t it = 0; it <= config.max_iterations; ++it) {
        if (std::abs(price - eq.price) < config.tolerance) {
            result.verdict = Verdict::Converged;
            return result;
        }
        if (price <= 0.0 || std::abs(price) > escape) {
            result.verdict = Verdict::Diverged;
            return result;
        }
        if (it == config.max_iterations) break;
        price += config.speed * (demand.quantity(price) - supply.quantity(price));
        result.prices.push_back(price);
    }
    result.verdict = Verdict::Inconclusive;
    return result;
}

double stability_factor(const LinearCurve& supply, const LinearCurve& demand, double speed) {
    return std::abs(1.0 + speed * (demand.slope - supply.slope));
}

bool is_stable(const LinearCurve& supply, const LinearCurve& demand, double speed) {
    return stability_factor(supply, demand, speed) < 1.0;
}

void ConcaveProduction::validate() const {
    if (!(scale > 0.0)) throw ValidationError("market: production scale must be > 0");
    if (!(exponent > 0.0) || !(exponent < 1.0)) {
        throw ValidationError("market: production exponent must lie in (0,1)");
    }
    if (!(full_employment > 0.0)) throw ValidationError("market: full employment must be > 0");
}

double ConcaveProduction::output(double employment) const {
    return scale * std::pow(employment, exponent);
}

double GammaFn::operator()(double wage) const {
    if (kind == Kind::Constant) return base;
    return base + gain * wage / (1.0 + wage);
}

void WageDemand::validate() const {
    if (autonomous < 0.0) throw ValidationError("market: autonomous demand must be >= 0");
    if (!(wage > 0.0)) throw ValidationError("market: wage must be > 0");
    const double g = gamma(wage);
    if (!(g > 0.0) || !(g < 1.0)) {
        throw ValidationError("market: consumption share must lie in (0,1)");
    }
}

double WageDemand::effective(double output) const {
    return gamma(wage) * output + autonomous;
}

NonlinearEquilibrium nonlinear_equilibrium(const ConcaveProduction& prod, const WageDemand& dem,
                                           double tolerance, std::int64_t max_iterations) {
    prod.validate();
    dem.validate();
    if (!(tolerance > 0.0)) throw ValidationError("market: tolerance must be > 0");

    const auto excess = [&](double n) {
        const double y = prod.output(n);
        return y - dem.effective(y);
    };

    // F(0) = -A; without autonomous demand the only crossing is N = 0.
    if (dem.autonomous <= 0.0) {
        throw NoInteriorEquilibriumError("market: no autonomous demand, only the origin crosses");
    }
    const double at_full = excess(prod.full_employment);
    if (at_full < 0.0) {
        NonlinearEquilibrium corner;
        corner.employment = prod.full_employment;
        corner.output = prod.output(prod.full_employment);
        corner.residual = std::abs(at_full);
        corner.corner = true;
        return corner;
    }

    // Halve all the way to machine resolution; the iterations are cheap and
    // push the residual to the floating-point floor.
    double lo = 0.0;
    double hi = prod.full_employment;
    for (std::int64_t it = 0; it < max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (excess(mid) < 0.0) lo = mid; else hi = mid;
    }
    if (hi - lo > tolerance * std::max(1.0, prod.full_employment)) {
        throw ModelError("market: bisection failed to reach the requested tolerance");
    }

    NonlinearEquilibrium eq;
    eq.employment = 0.5 * (lo + hi);
    eq.output = prod.output(eq.employment);
    eq.residual = std::abs(excess(eq.employment));
    return eq;
}

std::vector<WageStaticsRow> wage_comparative_statics(const ConcaveProduction& prod,
                                                     const WageDemand& dem,
                                                     const std::vector<double>& wage_grid) {
    if (wage_grid.empty()) throw ValidationError("market: wage grid must be non-empty");
    for (std::size_t i = 1; i < wage_grid.size(); ++i) {
        if (!(wage_grid[i] > wage_grid[i - 1])) {
            throw ValidationError("market: wage grid must be strictly increasing");
        }
    }
    std::vector<WageStaticsRow> rows;
    rows.reserve(wage_grid.size());
    for (double w : wage_grid) {
        WageDemand point = dem;
        point.wage = w;
        const NonlinearEquilibrium eq = nonlinear_equilibrium(prod, point);
        rows.push_back({w, point.gamma(w), eq.employment, eq.output, eq.corner});
    }
    return rows;
}

std::vector<LongRunPoint> long_run_series(const std::vector<double>& productivity_factors,
                                          double gamma, double autonomous, double base_slope) {
    if (!(gamma > 0.0) || !(gamma < 1.0)) {
        throw ValidationError("market: consumption share must lie in (0,1)");
    }
    if (!(autonomous > 0.0)) throw ValidationError("market: autonomous demand must be > 0");
    if (!(base_slope > 0.0)) throw ValidationError("market: base slope must be > 0");

    const double output = autonomous / (1.0 - gamma);
    std::vector<LongRunPoint> series;
    series.reserve(productivity_factors.size());
    std::int64_t t = 0;
    for (double pi : productivity_factors) {
        if (!(pi > 0.0)) throw ValidationError("market: productivity factors must be > 0");
        series.push_back({t++, pi, output / (pi * base_slope), output});
    }
    return series;
}

}  // namespace macrodesk::market
