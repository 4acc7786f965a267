#include "macrodesk/island.hpp"

#include "macrodesk/errors.hpp"

namespace macrodesk::island {

void IslandParams::validate() const {
    if (productivity <= rat(0)) throw ValidationError("island: productivity must be > 0");
    if (subsistence <= rat(0)) throw ValidationError("island: subsistence must be > 0");
    if (satiation <= subsistence) {
        throw ValidationError("island: satiation must exceed subsistence");
    }
    if (n_workers < 1) throw ValidationError("island: n_workers must be >= 1");
    if (n_employers < 1) throw ValidationError("island: n_employers must be >= 1");
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Flexibilized: return "flexibilized";
        case Regime::Solidarity: return "solidarity";
        case Regime::Syndical: return "syndical";
    }
    return "?";
}

Rational solidarity_wage(const IslandParams& params) {
    params.validate();
    // A = E = s  =>  w*j = s and n_w*j*(r-w) = n_e*s  =>  w = r*n_w/(n_w+n_e).
    return params.productivity * rat(params.n_workers) /
           rat(params.n_workers + params.n_employers);
}

namespace {

RegimeSolution assemble(const IslandParams& params, const Rational& wage, const Rational& jornada,
                        Regime regime) {
    RegimeSolution sol;
    sol.wage = wage;
    sol.jornada = jornada;
    sol.production = params.productivity * rat(params.n_workers) * jornada;
    sol.worker_income = wage * jornada;
    sol.employer_income =
        (sol.production - rat(params.n_workers) * sol.worker_income) / rat(params.n_employers);
    sol.regime = regime;
    return sol;
}

}  // namespace

RegimeSolution solidarity_solution(const IslandParams& params) {
    const Rational w = solidarity_wage(params);
    return assemble(params, w, params.satiation / w, Regime::Solidarity);
}

RegimeSolution regime_solution(const IslandParams& params, const Rational& wage) {
    params.validate();
    if (wage <= rat(0)) throw InvalidWageError("island: wage must be > 0");
    if (wage >= params.productivity) {
        throw NoSurplusError("island: wage at or above productivity leaves no employer share");
    }
    const Rational w_sol = solidarity_wage(params);
    if (wage == w_sol) return solidarity_solution(params);
    if (wage < w_sol) {
        // Employers pinned at satiation: n_w*j*(r-w) = n_e*s.
        const Rational j = rat(params.n_employers) * params.satiation /
                           (rat(params.n_workers) * (params.productivity - wage));
        return assemble(params, wage, j, Regime::Flexibilized);
    }
    // Workers pinned at satiation: w*j = s.
    return assemble(params, wage, params.satiation / wage, Regime::Syndical);
}

std::vector<RegimeSolution> wage_sweep(const IslandParams& params, const Rational& w_min,
                                       const Rational& w_max, std::int64_t n_points) {
    params.validate();
    if (n_points < 1) throw ValidationError("island: sweep needs at least one point");
    if (w_min <= rat(0) || w_max < w_min || w_max >= params.productivity) {
        throw ValidationError("island: sweep range must satisfy 0 < w_min <= w_max < productivity");
    }
    if (n_points == 1 && w_min != w_max) {
        throw ValidationError("island: single-point sweep requires w_min == w_max");
    }
    std::vector<RegimeSolution> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    if (n_points == 1) {
        rows.push_back(regime_solution(params, w_min));
        return rows;
    }
    const Rational step = (w_max - w_min) / rat(n_points - 1);
    for (std::int64_t i = 0; i < n_points; ++i) {
        rows.push_back(regime_solution(params, w_min + step * rat(i)));
    }
    return rows;
}

}  // namespace macrodesk::island
