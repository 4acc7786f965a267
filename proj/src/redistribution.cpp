#include "macrodesk/redistribution.hpp"

#include <cmath>

#include "macrodesk/errors.hpp"
#include "macrodesk/keynes.hpp"

namespace macrodesk::redist {

void SectorSplit::validate() const {
    if (f1 < 0.0 || f2 < 0.0 || f3 < 0.0) {
        throw ValidationError("redistribution: income fractions must be >= 0");
    }
    if (std::abs(f1 + f2 + f3 - 1.0) > 1e-12) {
        throw ValidationError("redistribution: income fractions must sum to 1");
    }
    if (!(c1 > 0.0)) throw ValidationError("redistribution: c1 must be > 0");
    if (!(c2 > 0.0) || !(c2 < 1.0)) {
        throw ValidationError("redistribution: c2 must lie in (0,1)");
    }
}

SectorSplit SectorSplit::from_composite(double f1, double c1, double composite, double f2) {
    const double c2f2 = composite - c1 * f1;
    if (c2f2 <= 0.0) {
        throw ValidationError(
            "redistribution: composite propensity must exceed sector 1's contribution");
    }
    // Only c2*f2 is identified; when the caller does not fix f2, place it so
    // sector 2 consumes 85% of its income.
    if (f2 < 0.0) f2 = std::min(c2f2 / 0.85, 1.0 - f1);
    if (f2 <= 0.0) {
        throw ValidationError("redistribution: f2 must be > 0 to carry the residual propensity");
    }
    SectorSplit s;
    s.f1 = f1;
    s.f2 = f2;
    s.f3 = 1.0 - f1 - f2;
    s.c1 = c1;
    s.c2 = c2f2 / f2;
    s.validate();
    return s;
}

double composite_propensity(const SectorSplit& split) {
    split.validate();
    return split.c1 * split.f1 + split.c2 * split.f2;
}

RedistributionResult apply_redistribution(const SectorSplit& split, double p, double autonomous) {
    split.validate();
    if (p < 0.0 || p >= 1.0) throw ValidationError("redistribution: p must lie in [0,1)");
    if (autonomous <= 0.0) throw ValidationError("redistribution: autonomous demand must be > 0");

    const double c = composite_propensity(split);
    const double c_prime = c + p * (split.c1 - c);
    if (c_prime >= 1.0) {
        throw MultiplierDivergenceError("redistribution: post-transfer propensity reaches 1");
    }

    const double m = keynes::multiplier(c);
    const double y_base = m * autonomous;
    const double y1_base = split.f1 * y_base;
    const double y23_base = y_base - y1_base;

    RedistributionResult r;
    r.p = p;
    r.c_prime = c_prime;
    r.m_prime = keynes::multiplier(c_prime);
    r.y_prime = r.m_prime * autonomous;
    r.f1_prime = split.f1 * (1.0 - p) + p;
    r.f2_prime = split.f2 * (1.0 - p);
    r.f3_prime = split.f3 * (1.0 - p);
    r.y1_prime = r.f1_prime * r.y_prime;
    r.y23_prime = r.y_prime - r.y1_prime;
    r.pct_y = (r.y_prime / y_base - 1.0) * 100.0;
    r.pct_y1 = (r.y1_prime / y1_base - 1.0) * 100.0;
    r.pct_y23 = (r.y23_prime / y23_base - 1.0) * 100.0;
    return r;
}

double required_p(const SectorSplit& split, double growth) {
    split.validate();
    if (growth <= 0.0) throw ValidationError("redistribution: growth target must be > 0");
    const double c = composite_propensity(split);
    if (split.c1 <= c) {
        throw ModelError("redistribution: sector 1 must consume above average to lift output");
    }
    // (1-c)/(1-c') = 1+g with c' = c + p*(c1-c).
    return (1.0 - c) * growth / ((1.0 + growth) * (split.c1 - c));
}

NoSavingsCheck no_savings_invariance(const SectorSplit& split, double p, double autonomous) {
    if (split.c1 != 1.0) {
        throw ValidationError("redistribution: invariance requires c1 = 1 exactly");
    }
    const double c = composite_propensity(split);
    const double m = keynes::multiplier(c);
    const double y_base = m * autonomous;
    const RedistributionResult r = apply_redistribution(split, p, autonomous);

    NoSavingsCheck chk;
    chk.m_prime_closed = m / (1.0 - p);
    chk.m_prime_general = r.m_prime;
    chk.y2_before = split.f2 * y_base;
    chk.y3_before = split.f3 * y_base;
    chk.y2_after = r.f2_prime * r.y_prime;
    chk.y3_after = r.f3_prime * r.y_prime;
    return chk;
}

RedistributionTable redistribution_table(const SectorSplit& split,
                                         const std::vector<double>& p_values, double base_output,
                                         double target_growth) {
    split.validate();
    if (base_output <= 0.0) throw ValidationError("redistribution: base output must be > 0");
    for (std::size_t i = 1; i < p_values.size(); ++i) {
        if (!(p_values[i] > p_values[i - 1])) {
            throw ValidationError("redistribution: p values must be sorted ascending");
        }
    }
    const double c = composite_propensity(split);
    const double autonomous = (1.0 - c) * base_output;

    RedistributionTable table;
    table.target_pct = target_growth * 100.0;
    for (double p : p_values) {
        table.rows.push_back(apply_redistribution(split, p, autonomous));
        if (table.threshold_p_tabulated < 0.0 && table.rows.back().pct_y >= table.target_pct) {
            table.threshold_p_tabulated = p;
        }
    }
    if (split.c1 > c) table.threshold_p_exact = required_p(split, target_growth);
    return table;
}

void PopulationProfile::validate() const {
    if (n_employed < 0 || n_retired < 0 || n_unemployed < 0) {
        throw ValidationError("redistribution: cohort counts must be >= 0");
    }
    if (n_employed + n_retired + n_unemployed <= 0) {
        throw ValidationError("redistribution: population must be non-empty");
    }
    if (!(wage_ratio > 0.0)) throw ValidationError("redistribution: wage ratio must be > 0");
    if (payments_per_year < 1) {
        throw ValidationError("redistribution: payments per year must be >= 1");
    }
}

PopulationProfile absorb_unemployed(const PopulationProfile& profile) {
    profile.validate();
    PopulationProfile post = profile;
    post.n_employed += post.n_unemployed;
    post.n_unemployed = 0;
    return post;
}

PopulationBreakdown population_breakdown(const PopulationProfile& profile,
                                         double y1_annual_millions) {
    profile.validate();
    if (y1_annual_millions <= 0.0) {
        throw ValidationError("redistribution: sector income must be > 0");
    }
    if (profile.n_employed + profile.n_retired == 0) {
        throw ValidationError("redistribution: no earning cohort to split the income");
    }
    PopulationBreakdown b;
    b.monthly_bill_millions = y1_annual_millions / static_cast<double>(profile.payments_per_year);
    const double bill = b.monthly_bill_millions * 1e6;
    // ratio*retired goes to each employed member.
    const double weight = profile.wage_ratio * static_cast<double>(profile.n_employed) +
                          static_cast<double>(profile.n_retired);
    b.avg_retired = bill / weight;
    b.avg_employed = profile.wage_ratio * b.avg_retired;
    const double members = static_cast<double>(profile.n_employed + profile.n_retired +
                                               profile.n_unemployed);
    b.avg_member = bill / members;
    return b;
}

std::vector<ScheduleStep> gradual_schedule(const SectorSplit& split, double target_p,
                                           double step_p, double autonomous) {
    split.validate();
    if (target_p < 0.0 || target_p >= 1.0) {
        throw ValidationError("redistribution: target p must lie in [0,1)");
    }
    std::vector<ScheduleStep> schedule;
    if (target_p == 0.0) return schedule;
    if (!(step_p > 0.0) || step_p > target_p) {
        throw ValidationError("redistribution: step must satisfy 0 < step <= target");
    }

    double p_prev = 0.0;
    RedistributionResult prev = apply_redistribution(split, 0.0, autonomous);
    while (p_prev < target_p - 1e-15) {
        const double p_next = std::min(p_prev + step_p, target_p);
        const RedistributionResult next = apply_redistribution(split, p_next, autonomous);
        ScheduleStep step;
        step.p_cumulative = p_next;
        step.sector1_income_growth_pct = (next.y1_prime / prev.y1_prime - 1.0) * 100.0;
        step.expected_sales_growth_pct = (next.y_prime / prev.y_prime - 1.0) * 100.0;
        step.wage_increase_pct = step.sector1_income_growth_pct - step.expected_sales_growth_pct;
        schedule.push_back(step);
        p_prev = p_next;
        prev = next;
    }
    return schedule;
}

double compose_p(double p, double q) {
    return 1.0 - (1.0 - p) * (1.0 - q);
}

}  // namespace macrodesk::redist
