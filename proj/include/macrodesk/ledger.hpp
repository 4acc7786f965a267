#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macrodesk/island.hpp"
#include "macrodesk/rational.hpp"

namespace macrodesk::ledger {

enum class Role { Worker, Employer };

struct AgentSpec {
    std::string id;
    Role role = Role::Worker;
    // Daily consumption-spending ceiling; empty means spend the whole wage.
    std::optional<Rational> spend_cap;
    // Borrowed each day and spent on fish for non-consumption use.
    Rational borrow_invest = rat(0);
    Rational initial_cash = rat(0);
};

struct SimConfig {
    island::IslandParams island;
    Rational price = rat(1);            // $ per fish
    Rational wage = rat(4);             // $ per hour
    Rational initial_jornada = rat(3);  // hours per day
    Rational money_supply = rat(24);
    std::int64_t max_days = 100;
    Rational deficit_tolerance = rat(0);
};

struct AgentDay {
    std::string id;
    Role role = Role::Worker;
    Rational wage_income;
    Rational sales_revenue;
    Rational wages_paid;  // employer only
    Rational purchases;
    Rational loaned_out;
    Rational borrowed;
    Rational saving;  // income minus purchases; loans shift cash, not saving
    Rational cash_end;
};

struct DailyLedger {
    std::int64_t day = 0;
    Rational jornada;
    Rational wage_bill;
    std::vector<AgentDay> agents;
    Rational production_fish;
    Rational sold_fish;
    Rational self_consumed_fish;  // employer eats unsold fish up to satiation
    Rational spoiled_fish;
    Rational employer_deficit;  // wage bill minus sales revenue
};

enum class Terminal { Equilibrium, MaxDays };

struct SimTrajectory {
    std::vector<DailyLedger> days;
    Terminal terminal = Terminal::MaxDays;
    Rational final_jornada;
    Rational money_supply;
};

// Day-by-day money ledger. Workers consume out of the day's wage up to their
// cap; planned saving funds any borrow-and-invest demand; unsold fish spoil.
// The employer cuts the next day's wage bill by the observed deficit, then by
// secant extrapolation of deficit-per-cut, until the deficit is inside
// tolerance.
SimTrajectory run_savings_sim(const SimConfig& config, const std::vector<AgentSpec>& agents);

bool money_conservation_check(const SimTrajectory& trajectory);

enum class UndercutEnd { SubsistenceBreach, MaxRounds };

struct UndercutRound {
    std::int64_t round = 0;
    Rational wage;  // real wage, fish per hour
    Rational jornada;
    Rational worker_income;  // fish per day
};

struct UndercutTrace {
    std::vector<UndercutRound> rounds;
    UndercutEnd termination = UndercutEnd::MaxRounds;
};

// Wage-undercutting race: jobless candidates bid the wage down by a fixed
// step each round while the employers' take stays pinned at satiation.
// MaxRounds models the workers closing ranks and fixing a common wage.
UndercutTrace run_undercut_sim(const SimConfig& config, std::int64_t n_candidates,
                               const Rational& undercut_step, std::int64_t max_rounds = 100);

}  // namespace macrodesk::ledger
