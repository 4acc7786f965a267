#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macrodesk/rational.hpp"

namespace macrodesk::island {

// Everything here is in real terms: fish per hour, fish per day. There is
// deliberately no price or money parameter anywhere in this module.
struct IslandParams {
    Rational productivity = rat(6);  // fish per hour per worker
    Rational satiation = rat(12);    // fish per day per person
    Rational subsistence = rat(1);   // fish per day per person
    std::int64_t n_workers = 2;
    std::int64_t n_employers = 1;

    void validate() const;
};

enum class Regime { Flexibilized, Solidarity, Syndical };

std::string regime_name(Regime r);

struct RegimeSolution {
    Rational wage;             // fish per hour
    Rational jornada;          // hours per day, per worker
    Rational production;       // fish per day, all workers
    Rational worker_income;    // fish per day, per worker
    Rational employer_income;  // fish per day, per employer
    Regime regime = Regime::Solidarity;
};

// Wage at which every person's income equals satiation; production-maximizing.
Rational solidarity_wage(const IslandParams& params);

// Equal-split solution where each worker and each employer receives exactly
// `satiation` fish per day.
RegimeSolution solidarity_solution(const IslandParams& params);

// Equilibrium for an arbitrary wage. Below the solidarity wage the employers
// are pinned at satiation and the jornada stretches until they get it; above
// it the workers are pinned at satiation and the jornada shrinks.
RegimeSolution regime_solution(const IslandParams& params, const Rational& wage);

// Evenly spaced wage grid from w_min to w_max inclusive (a single point when
// n_points == 1), solved point by point.
std::vector<RegimeSolution> wage_sweep(const IslandParams& params, const Rational& w_min,
                                       const Rational& w_max, std::int64_t n_points);

}  // namespace macrodesk::island
