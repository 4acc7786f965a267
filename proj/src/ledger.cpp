#include "macrodesk/ledger.hpp"

#include <algorithm>

#include "macrodesk/errors.hpp"

namespace macrodesk::ledger {

namespace {

void validate(const SimConfig& config, const std::vector<AgentSpec>& agents) {
    config.island.validate();
    if (config.price <= rat(0)) throw ValidationError("ledger: price must be > 0");
    if (config.wage <= rat(0)) throw ValidationError("ledger: wage must be > 0");
    if (config.money_supply <= rat(0)) throw ValidationError("ledger: money supply must be > 0");
    if (config.initial_jornada <= rat(0)) throw ValidationError("ledger: jornada must be > 0");
    if (config.max_days < 1) throw ValidationError("ledger: max_days must be >= 1");
    if (config.deficit_tolerance < rat(0)) throw ValidationError("ledger: tolerance must be >= 0");
    if (config.wage / config.price >= config.island.productivity) {
        throw NoSurplusError("ledger: real wage at or above productivity");
    }

    std::int64_t workers = 0;
    std::int64_t employers = 0;
    Rational cash_total = rat(0);
    for (const auto& a : agents) {
        if (a.role == Role::Worker) ++workers; else ++employers;
        if (a.spend_cap && *a.spend_cap < rat(0)) {
            throw ValidationError("ledger: spend_cap must be >= 0 for agent " + a.id);
        }
        if (a.borrow_invest < rat(0)) {
            throw ValidationError("ledger: borrow_invest must be >= 0 for agent " + a.id);
        }
        if (a.initial_cash < rat(0)) {
            throw ValidationError("ledger: initial_cash must be >= 0 for agent " + a.id);
        }
        if (a.role == Role::Employer && a.borrow_invest != rat(0)) {
            throw ValidationError("ledger: employer cannot borrow-and-invest");
        }
        cash_total += a.initial_cash;
    }
    if (employers != 1) throw ValidationError("ledger: exactly one employer required");
    if (workers < 1) throw ValidationError("ledger: at least one worker required");
    if (workers != config.island.n_workers) {
        throw ValidationError("ledger: worker agents must match island.n_workers");
    }
    if (cash_total != config.money_supply) {
        throw ValidationError("ledger: initial cash must sum to money_supply");
    }
}

}  // namespace

SimTrajectory run_savings_sim(const SimConfig& config, const std::vector<AgentSpec>& agents) {
    validate(config, agents);

    const std::size_t n = agents.size();
    std::size_t employer_ix = 0;
    std::vector<std::size_t> worker_ix;
    for (std::size_t i = 0; i < n; ++i) {
        if (agents[i].role == Role::Employer) employer_ix = i; else worker_ix.push_back(i);
    }
    const Rational n_w = rat(static_cast<std::int64_t>(worker_ix.size()));

    std::vector<Rational> cash(n);
    for (std::size_t i = 0; i < n; ++i) cash[i] = agents[i].initial_cash;

    SimTrajectory traj;
    traj.money_supply = config.money_supply;

    Rational jornada = config.initial_jornada;
    Rational prev_deficit;
    Rational prev_cut;
    bool have_prev = false;

    for (std::int64_t day = 1; day <= config.max_days; ++day) {
        const Rational bill = n_w * config.wage * jornada;
        if (cash[employer_ix] < bill) {
            throw ValidationError("ledger: employer cash cannot cover the wage bill on day " +
                                  std::to_string(day));
        }

        DailyLedger led;
        led.day = day;
        led.jornada = jornada;
        led.wage_bill = bill;
        led.agents.resize(n);

        // Wages out.
        cash[employer_ix] -= bill;
        const Rational per_worker = config.wage * jornada;
        for (std::size_t wi : worker_ix) cash[wi] += per_worker;

        // Consumption plans and the credit market. Planned saving is the part
        // of today's wage a worker does not intend to spend; borrowers draw on
        // exactly that pool.
        Rational planned_saving_total = rat(0);
        Rational borrow_total = rat(0);
        std::vector<Rational> want(n), planned_saving(n);
        for (std::size_t wi : worker_ix) {
            const auto& spec = agents[wi];
            want[wi] = spec.spend_cap ? std::min(per_worker, *spec.spend_cap) : per_worker;
            planned_saving[wi] = per_worker - want[wi];
            planned_saving_total += planned_saving[wi];
            borrow_total += spec.borrow_invest;
        }
        if (borrow_total > planned_saving_total) {
            throw InfeasibleCreditError("ledger: borrowing demanded exceeds available saving on day " +
                                        std::to_string(day));
        }
        std::vector<Rational> loaned(n), borrowed(n);
        if (borrow_total > rat(0)) {
            for (std::size_t wi : worker_ix) {
                loaned[wi] = planned_saving[wi] * borrow_total / planned_saving_total;
                cash[wi] -= loaned[wi];
            }
            for (std::size_t wi : worker_ix) {
                borrowed[wi] = agents[wi].borrow_invest;
                cash[wi] += borrowed[wi];
            }
        }

        // Purchases settle same-day.
        Rational sales = rat(0);
        for (std::size_t wi : worker_ix) {
            const Rational spend = want[wi] + borrowed[wi];
            cash[wi] -= spend;
            sales += spend;
        }
        cash[employer_ix] += sales;

        led.production_fish = config.island.productivity * n_w * jornada;
        led.sold_fish = sales / config.price;
        const Rational unsold = led.production_fish - led.sold_fish;
        led.self_consumed_fish = std::min(unsold, config.island.satiation);
        led.spoiled_fish = unsold - led.self_consumed_fish;
        led.employer_deficit = bill - sales;

        for (std::size_t i = 0; i < n; ++i) {
            AgentDay& row = led.agents[i];
            row.id = agents[i].id;
            row.role = agents[i].role;
            if (i == employer_ix) {
                row.sales_revenue = sales;
                row.wages_paid = bill;
                row.saving = sales - bill;
            } else {
                row.wage_income = per_worker;
                row.purchases = want[i] + borrowed[i];
                row.loaned_out = loaned[i];
                row.borrowed = borrowed[i];
                row.saving = row.wage_income - row.purchases;
            }
            row.cash_end = cash[i];
        }
        traj.days.push_back(std::move(led));

        const Rational deficit = bill - sales;
        if (deficit <= config.deficit_tolerance) {
            traj.terminal = Terminal::Equilibrium;
            traj.final_jornada = jornada;
            return traj;
        }

        // First cut equals the observed deficit; afterwards extrapolate the
        // observed deficit-per-cut ratio to aim straight at zero.
        Rational cut = deficit;
        if (have_prev && prev_cut > rat(0) && prev_deficit > deficit) {
            const Rational ratio = (prev_deficit - deficit) / prev_cut;
            cut = deficit / ratio;
        }
        prev_deficit = deficit;
        prev_cut = cut;
        have_prev = true;

        Rational new_bill = bill - cut;
        if (new_bill < rat(0)) new_bill = rat(0);
        jornada = new_bill / (n_w * config.wage);
    }

    traj.terminal = Terminal::MaxDays;
    traj.final_jornada = jornada;
    return traj;
}

bool money_conservation_check(const SimTrajectory& trajectory) {
    for (const auto& day : trajectory.days) {
        Rational total = rat(0);
        for (const auto& a : day.agents) total += a.cash_end;
        if (total != trajectory.money_supply) return false;
    }
    return true;
}

UndercutTrace run_undercut_sim(const SimConfig& config, std::int64_t n_candidates,
                               const Rational& undercut_step, std::int64_t max_rounds) {
    config.island.validate();
    if (undercut_step <= rat(0)) throw ValidationError("ledger: undercut_step must be > 0");
    if (config.price <= rat(0)) throw ValidationError("ledger: price must be > 0");
    if (n_candidates <= config.island.n_workers) {
        throw ValidationError("ledger: candidates must outnumber jobs");
    }
    if (max_rounds < 0) throw ValidationError("ledger: max_rounds must be >= 0");

    const Rational real_wage0 = config.wage / config.price;
    if (real_wage0 >= config.island.productivity) {
        throw NoSurplusError("ledger: real wage at or above productivity");
    }

    const Rational r = config.island.productivity;
    const Rational s = config.island.satiation;
    const Rational n_w = rat(config.island.n_workers);
    const Rational n_e = rat(config.island.n_employers);

    UndercutTrace trace;
    for (std::int64_t round = 0;; ++round) {
        const Rational w = real_wage0 - undercut_step * rat(round);
        if (w <= rat(0)) {
            trace.termination = UndercutEnd::SubsistenceBreach;
            return trace;
        }
        UndercutRound row;
        row.round = round;
        row.wage = w;
        // Employers stay pinned at satiation while the bidding lasts.
        row.jornada = n_e * s / (n_w * (r - w));
        row.worker_income = w * row.jornada;
        trace.rounds.push_back(row);
        if (row.worker_income < config.island.subsistence) {
            trace.termination = UndercutEnd::SubsistenceBreach;
            return trace;
        }
        if (round >= max_rounds) {
            trace.termination = UndercutEnd::MaxRounds;
            return trace;
        }
    }
}

}  // namespace macrodesk::ledger
