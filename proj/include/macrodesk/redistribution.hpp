#pragma once

#include <cstdint>
#include <vector>

namespace macrodesk::redist {

// Income shares and consumption propensities of the three sectors:
// low-income particulars (1), remaining particulars (2), everyone else (3).
// Sector 1 may consume above its income (credit), so c1 > 1 is allowed.
struct SectorSplit {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    void validate() const;

    // Builds a split from the identified quantities: f1, c1 and the economy
    // propensity c. Only the product c2*f2 is pinned down by those, so the
    // f2/f3 boundary is a free choice.
    static SectorSplit from_composite(double f1, double c1, double composite, double f2 = -1.0);
};

// c = c1*f1 + c2*f2.
double composite_propensity(const SectorSplit& split);

struct RedistributionResult {
    double p = 0.0;
    double c_prime = 0.0;
    double m_prime = 0.0;
    double y_prime = 0.0;
    double f1_prime = 0.0;
    double f2_prime = 0.0;
    double f3_prime = 0.0;
    double y1_prime = 0.0;
    double y23_prime = 0.0;
    double pct_y = 0.0;    // percent change vs p = 0
    double pct_y1 = 0.0;
    double pct_y23 = 0.0;
};

// Shifts fraction p of sectors 2 and 3's income shares to sector 1 and
// solves the new equilibrium with autonomous demand held fixed.
RedistributionResult apply_redistribution(const SectorSplit& split, double p, double autonomous);

// Smallest p whose output growth reaches `growth` (for example 0.2 for the
// +20% full-employment target); closed-form inversion.
double required_p(const SectorSplit& split, double growth);

struct NoSavingsCheck {
    double m_prime_closed;   // m/(1-p)
    double m_prime_general;  // through the full redistribution algebra
    double y2_before, y2_after;
    double y3_before, y3_after;
};

// With c1 = 1 the new multiplier is exactly m/(1-p) and sectors 2 and 3 keep
// their incomes unchanged. Computes both routes so tests can compare them.
NoSavingsCheck no_savings_invariance(const SectorSplit& split, double p, double autonomous);

struct RedistributionTable {
    std::vector<RedistributionResult> rows;
    // Smallest tabulated p with pct_y >= target (negative when none).
    double threshold_p_tabulated = -1.0;
    // Exact p solving pct_y = target.
    double threshold_p_exact = -1.0;
    double target_pct = 0.0;
};

// One row per p value, measured against the p = 0 baseline of output
// `base_output`, plus the p threshold for the given output-growth target.
RedistributionTable redistribution_table(const SectorSplit& split,
                                         const std::vector<double>& p_values, double base_output,
                                         double target_growth = 0.20);

struct PopulationProfile {
    std::int64_t n_employed = 0;
    std::int64_t n_retired = 0;
    std::int64_t n_unemployed = 0;
    double wage_ratio = 2.5;          // employed-to-retired income ratio
    std::int64_t payments_per_year = 13;  // twelve months plus the aguinaldo

    void validate() const;
};

// Same cohort structure with the unemployed moved into employment.
PopulationProfile absorb_unemployed(const PopulationProfile& profile);

struct PopulationBreakdown {
    double monthly_bill_millions;  // sector income per payment, millions
    double avg_employed;           // per payment, currency units
    double avg_retired;
    double avg_member;             // bill over every member, unemployed included
};

// Splits the sector's income across cohorts with the employed/retired ratio
// fixed. `y1_annual_millions` covers payments_per_year payments.
PopulationBreakdown population_breakdown(const PopulationProfile& profile,
                                         double y1_annual_millions);

struct ScheduleStep {
    double p_cumulative = 0.0;
    double sector1_income_growth_pct = 0.0;  // vs the previous step's state
    double wage_increase_pct = 0.0;          // direct-share part of the rise
    double expected_sales_growth_pct = 0.0;  // activity part of the rise
};

// Phased path to target_p in increments of step_p. Each step's sector-1
// income rise splits additively into the direct wage rise and the sales
// growth the higher activity brings.
std::vector<ScheduleStep> gradual_schedule(const SectorSplit& split, double target_p,
                                           double step_p, double autonomous);

// Two successive redistributions p then q land on the same shares as this
// single redistribution.
double compose_p(double p, double q);

}  // namespace macrodesk::redist
