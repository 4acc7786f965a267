#pragma once

#include <cstdint>
#include <vector>

namespace macrodesk::keynes {

// Aggregates for one scenario year. Money is in millions of currency units
// per year throughout this module.
//
// The propensity decomposes as c = cp * fp (the particulars' share of output
// times their own propensity to consume); only the product enters the model,
// so that is what the API takes. cp alone reappears in firm_savings_effect.
struct MacroState {
    double output = 0.0;       // Y
    double propensity = 0.0;   // c, in (0,1)
    double investment = 0.0;   // Iv
    double government = 0.0;   // G
    double net_exports = 0.0;  // Xn
    double overproduction = 0.0;        // Q, signed
    double employment_ratio = 1.0;      // N/NP in (0,1]

    double autonomous() const { return investment + government + net_exports; }
};

// 1995 reference aggregates used by the bundled scenarios (millions).
struct BaselineDataset {
    const char* name;
    int version;
    double pbi;
    double consumption;
    double government;
    double investment_plus_stocks;
    double net_exports;
    double exports;
    double imports;
    double propensity;
    std::int64_t population;
};

const BaselineDataset& baseline_1995();
MacroState baseline_1995_state();

// m = 1/(1-c). c is capped at 0.999; beyond that the multiplier is treated
// as divergent rather than returned as a huge number.
double multiplier(double propensity);

double equilibrium_output(double propensity, double investment, double government,
                          double net_exports);

// Q = Y - (c*Y + Iv + G + Xn); zero exactly at equilibrium output.
double overproduction(double output, double propensity, double investment, double government,
                      double net_exports);

struct CrossPoint {
    double output;
    double production_line;  // the 45-degree line, equals output
    double demand_line;      // c*output + autonomous
};

// Sampled production and effective-demand lines; they cross at the
// equilibrium output.
std::vector<CrossPoint> demand_cross_series(double propensity, double autonomous, double y_min,
                                            double y_max, std::int64_t n_points);

struct EmploymentGap {
    double delta_output;          // output increase needed for full employment
    double delta_pct;             // same, as percent of current output
    double new_employment_ratio;  // (1-u)*(1+u) under strict proportionality
};

EmploymentGap employment_gap(double unemployment_rate, double output);

// First-round-free multiplier response to autonomous-demand changes.
double scenario_delta(const MacroState& state, double d_investment, double d_government,
                      double d_net_exports);

// Whether the export push is measured the way the source table rounds it
// (X and M floored to thousands, change taken from zero) or against the
// recorded baseline net exports.
enum class ExportsConvention { PaperRounding, FromBaseline };

struct ExportsScenario {
    double exports_new;
    double imports_new;
    double net_exports_new;
    double delta_net_exports;  // per the chosen convention
    double delta_output;
    double share_of_needed;    // fraction of the full-employment gap covered
};

ExportsScenario exports_scenario(const BaselineDataset& base, double unemployment_rate,
                                 double export_growth, double import_growth,
                                 ExportsConvention convention);

struct ConsumptionShift {
    double m_before;
    double m_after;
    // Log-point change, symmetric in direction; identical for m and Y when
    // autonomous demand is held fixed.
    double pct_multiplier;
    double pct_output;
};

ConsumptionShift consumption_shift(const MacroState& state, double propensity_new);

// First-round output effect of a firm saving `amount`: reactivating when the
// saving is invested, a consumption fall of cp*amount when it is not. The
// non-invested figure is first-round only; no multiplier is applied.
double firm_savings_effect(double amount, double cp, bool invested);

// Annualized real return: (final/principal)^(1/years) - 1, as a fraction.
double project_return(double principal, double final_value, double years);

}  // namespace macrodesk::keynes
