#include "macrodesk/keynes.hpp"

#include <cmath>

#include "macrodesk/errors.hpp"

namespace macrodesk::keynes {

namespace {
constexpr double kPropensityCap = 0.999;

void check_propensity(double c) {
    if (!(c > 0.0) || !(c < 1.0)) {
        throw ValidationError("keynes: propensity to consume must lie in (0,1)");
    }
    if (c > kPropensityCap) {
        throw MultiplierDivergenceError("keynes: propensity above 0.999, multiplier diverges");
    }
}
}  // namespace

const BaselineDataset& baseline_1995() {
    static const BaselineDataset base{
        "baseline-1995", 1,
        281000.0,  // pbi
        194000.0,  // consumption
        36700.0,   // government
        49900.0,   // investment + stock accumulation
        400.0,     // net exports
        23800.0,   // exports
        23400.0,   // imports
        0.69,      // propensity
        33000000,  // population
    };
    return base;
}

MacroState baseline_1995_state() {
    const auto& b = baseline_1995();
    MacroState s;
    s.output = b.pbi;
    s.propensity = b.propensity;
    // The published table folds stock accumulation into investment; the
    // baseline is treated as an equilibrium year, so Q = 0 here.
    s.investment = b.investment_plus_stocks;
    s.government = b.government;
    s.net_exports = b.net_exports;
    s.overproduction = 0.0;
    s.employment_ratio = 0.8;
    return s;
}

double multiplier(double propensity) {
    check_propensity(propensity);
    return 1.0 / (1.0 - propensity);
}

double equilibrium_output(double propensity, double investment, double government,
                          double net_exports) {
    return multiplier(propensity) * (investment + government + net_exports);
}

double overproduction(double output, double propensity, double investment, double government,
                      double net_exports) {
    check_propensity(propensity);
    return output - (propensity * output + investment + government + net_exports);
}

std::vector<CrossPoint> demand_cross_series(double propensity, double autonomous, double y_min,
                                            double y_max, std::int64_t n_points) {
    check_propensity(propensity);
    if (n_points < 2) throw ValidationError("keynes: series needs at least two points");
    if (!(y_min < y_max)) throw ValidationError("keynes: series range must be increasing");
    std::vector<CrossPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    const double step = (y_max - y_min) / static_cast<double>(n_points - 1);
    for (std::int64_t i = 0; i < n_points; ++i) {
        const double y = y_min + step * static_cast<double>(i);
        pts.push_back({y, y, propensity * y + autonomous});
    }
    return pts;
}

EmploymentGap employment_gap(double unemployment_rate, double output) {
    if (unemployment_rate < 0.0 || unemployment_rate >= 1.0) {
        throw ValidationError("keynes: unemployment rate must lie in [0,1)");
    }
    EmploymentGap gap;
    gap.delta_output = unemployment_rate * output;
    gap.delta_pct = unemployment_rate * 100.0;
    gap.new_employment_ratio = (1.0 - unemployment_rate) * (1.0 + unemployment_rate);
    return gap;
}

double scenario_delta(const MacroState& state, double d_investment, double d_government,
                      double d_net_exports) {
    return multiplier(state.propensity) * (d_investment + d_government + d_net_exports);
}

ExportsScenario exports_scenario(const BaselineDataset& base, double unemployment_rate,
                                 double export_growth, double import_growth,
                                 ExportsConvention convention) {
    if (export_growth < 0.0 || import_growth < 0.0) {
        throw ValidationError("keynes: growth rates must be >= 0");
    }
    ExportsScenario sc;
    sc.exports_new = base.exports * (1.0 + export_growth);
    sc.imports_new = base.imports * (1.0 + import_growth);
    sc.net_exports_new = sc.exports_new - sc.imports_new;
    if (convention == ExportsConvention::PaperRounding) {
        const double x = std::floor(sc.exports_new / 1000.0) * 1000.0;
        const double m = std::floor(sc.imports_new / 1000.0) * 1000.0;
        sc.delta_net_exports = x - m;
    } else {
        sc.delta_net_exports = sc.net_exports_new - (base.exports - base.imports);
    }
    sc.delta_output = multiplier(base.propensity) * sc.delta_net_exports;
    const double needed = employment_gap(unemployment_rate, base.pbi).delta_output;
    sc.share_of_needed = needed > 0.0 ? sc.delta_output / needed : 0.0;
    return sc;
}

ConsumptionShift consumption_shift(const MacroState& state, double propensity_new) {
    ConsumptionShift shift;
    shift.m_before = multiplier(state.propensity);
    shift.m_after = multiplier(propensity_new);
    shift.pct_multiplier = 100.0 * std::log(shift.m_after / shift.m_before);
    shift.pct_output = shift.pct_multiplier;
    return shift;
}

double firm_savings_effect(double amount, double cp, bool invested) {
    if (!(cp > 0.0) || !(cp < 1.0)) {
        throw ValidationError("keynes: cp must lie in (0,1)");
    }
    if (amount < 0.0) throw ValidationError("keynes: amount must be >= 0");
    return invested ? amount * (1.0 - cp) : -amount * cp;
}

double project_return(double principal, double final_value, double years) {
    if (principal <= 0.0 || final_value <= 0.0 || years <= 0.0) {
        throw ValidationError("keynes: return arguments must be > 0");
    }
    return std::pow(final_value / principal, 1.0 / years) - 1.0;
}

}  // namespace macrodesk::keynes
