#include "macrodesk/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "macrodesk/accounts.hpp"
#include "macrodesk/errors.hpp"
#include "macrodesk/island.hpp"
#include "macrodesk/keynes.hpp"
#include "macrodesk/ledger.hpp"
#include "macrodesk/market.hpp"
#include "macrodesk/redistribution.hpp"

namespace macrodesk::scenario {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
    throw ValidationError(ptr + ": " + what);
}

const json& member(const json& j, const std::string& ptr, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) fail(ptr + "/" + key, "missing required field");
    return *it;
}

double num(const json& j, const std::string& ptr, const char* key) {
    const json& v = member(j, ptr, key);
    if (!v.is_number()) fail(ptr + "/" + key, "expected a number");
    return v.get<double>();
}

double num_or(const json& j, const std::string& ptr, const char* key, double fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) fail(ptr + "/" + key, "expected a number");
    return it->get<double>();
}

std::int64_t integer(const json& j, const std::string& ptr, const char* key) {
    const json& v = member(j, ptr, key);
    if (!v.is_number_integer()) fail(ptr + "/" + key, "expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t integer_or(const json& j, const std::string& ptr, const char* key,
                        std::int64_t fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) fail(ptr + "/" + key, "expected an integer");
    return it->get<std::int64_t>();
}

std::string text(const json& j, const std::string& ptr, const char* key) {
    const json& v = member(j, ptr, key);
    if (!v.is_string()) fail(ptr + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::string text_or(const json& j, const char* key, const std::string& fallback) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) return fallback;
    return it->get<std::string>();
}

Rational rational_field(const json& j, const std::string& ptr, const char* key) {
    return rational_from_decimal(num(j, ptr, key));
}

Rational rational_or(const json& j, const std::string& ptr, const char* key, Rational fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) fail(ptr + "/" + key, "expected a number");
    return rational_from_decimal(it->get<double>());
}

island::IslandParams island_params(const json& j, const std::string& ptr) {
    const json& v = member(j, ptr, "island");
    if (!v.is_object()) fail(ptr + "/island", "expected an object");
    const std::string p = ptr + "/island";
    island::IslandParams params;
    params.productivity = rational_or(v, p, "productivity", rat(6));
    params.satiation = rational_or(v, p, "satiation", rat(12));
    params.subsistence = rational_or(v, p, "subsistence", rat(1));
    params.n_workers = integer_or(v, p, "n_workers", 2);
    params.n_employers = integer_or(v, p, "n_employers", 1);
    params.validate();
    return params;
}

std::string fmt(const Rational& r) { return csv::format(to_double(r)); }

// ----- island ---------------------------------------------------------------

csv::Table island_table(const std::vector<island::RegimeSolution>& rows) {
    csv::Table t({"wage", "jornada", "production", "worker_income", "employer_income", "regime"});
    for (const auto& s : rows) {
        t.add_row({fmt(s.wage), fmt(s.jornada), fmt(s.production), fmt(s.worker_income),
                   fmt(s.employer_income), island::regime_name(s.regime)});
    }
    return t;
}

void run_island(const json& params, const std::string& ptr, RunResult& result) {
    const island::IslandParams isl = island_params(params, ptr);
    const std::string op = text_or(params, "op", "sweep");
    if (op == "solidarity") {
        result.table = island_table({island::solidarity_solution(isl)});
    } else if (op == "solve") {
        result.table = island_table({island::regime_solution(isl, rational_field(params, ptr, "wage"))});
    } else if (op == "sweep") {
        const json& sw = member(params, ptr, "sweep");
        const std::string p = ptr + "/sweep";
        const auto rows = island::wage_sweep(isl, rational_field(sw, p, "w_min"),
                                             rational_field(sw, p, "w_max"),
                                             integer(sw, p, "points"));
        result.table = island_table(rows);
        const auto peak = std::max_element(rows.begin(), rows.end(),
                                           [](const auto& a, const auto& b) {
                                               return a.production < b.production;
                                           });
        result.notes.push_back("production peaks at wage " + fmt(peak->wage) + " with " +
                               fmt(peak->production) + " fish per day");
    } else {
        fail(ptr + "/op", "unknown island operation '" + op + "'");
    }
}

// ----- ledger ---------------------------------------------------------------

ledger::SimConfig ledger_config(const json& params, const std::string& ptr) {
    ledger::SimConfig cfg;
    cfg.island = island_params(params, ptr);
    cfg.price = rational_or(params, ptr, "price", rat(1));
    cfg.wage = rational_or(params, ptr, "wage", rat(4));
    cfg.initial_jornada = rational_or(params, ptr, "initial_jornada", rat(3));
    cfg.money_supply = rational_or(params, ptr, "money_supply", rat(24));
    cfg.max_days = integer_or(params, ptr, "max_days", 100);
    cfg.deficit_tolerance = rational_or(params, ptr, "deficit_tolerance", rat(0));
    return cfg;
}

std::vector<ledger::AgentSpec> ledger_agents(const json& params, const std::string& ptr) {
    const json& arr = member(params, ptr, "agents");
    if (!arr.is_array() || arr.empty()) fail(ptr + "/agents", "expected a non-empty array");
    std::vector<ledger::AgentSpec> agents;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = ptr + "/agents/" + std::to_string(i);
        const json& a = arr[i];
        if (!a.is_object()) fail(p, "expected an object");
        ledger::AgentSpec spec;
        spec.id = text(a, p, "id");
        const std::string role = text(a, p, "role");
        if (role == "worker") spec.role = ledger::Role::Worker;
        else if (role == "employer") spec.role = ledger::Role::Employer;
        else fail(p + "/role", "expected 'worker' or 'employer'");
        if (const auto it = a.find("spend_cap"); it != a.end() && !it->is_null()) {
            if (!it->is_number()) fail(p + "/spend_cap", "expected a number or null");
            spec.spend_cap = rational_from_decimal(it->get<double>());
        }
        spec.borrow_invest = rational_or(a, p, "borrow_invest", rat(0));
        spec.initial_cash = rational_or(a, p, "initial_cash", rat(0));
        agents.push_back(std::move(spec));
    }
    return agents;
}

void run_ledger(const json& params, const std::string& ptr, RunResult& result) {
    const std::string mode = text_or(params, "mode", "savings");
    if (mode == "savings") {
        const auto cfg = ledger_config(params, ptr);
        const auto agents = ledger_agents(params, ptr);
        const auto traj = ledger::run_savings_sim(cfg, agents);

        csv::Table t({"day", "agent", "role", "jornada", "wage_income", "sales_revenue",
                      "wages_paid", "purchases", "loaned_out", "borrowed", "saving", "cash_end",
                      "deficit"});
        for (const auto& day : traj.days) {
            for (const auto& a : day.agents) {
                t.add_row({csv::format(static_cast<long long>(day.day)), a.id,
                           a.role == ledger::Role::Worker ? "worker" : "employer",
                           fmt(day.jornada), fmt(a.wage_income), fmt(a.sales_revenue),
                           fmt(a.wages_paid), fmt(a.purchases), fmt(a.loaned_out),
                           fmt(a.borrowed), fmt(a.saving), fmt(a.cash_end),
                           fmt(day.employer_deficit)});
            }
        }
        result.table = std::move(t);
        result.notes.push_back(std::string("terminal: ") +
                               (traj.terminal == ledger::Terminal::Equilibrium ? "equilibrium"
                                                                               : "max-days") +
                               " after " + std::to_string(traj.days.size()) +
                               " days, final jornada " + fmt(traj.final_jornada) + " h");
        result.notes.push_back(std::string("money conservation: ") +
                               (ledger::money_conservation_check(traj) ? "ok" : "VIOLATED"));
    } else if (mode == "undercut") {
        const auto cfg = ledger_config(params, ptr);
        const auto trace = ledger::run_undercut_sim(
            cfg, integer(params, ptr, "n_candidates"),
            rational_field(params, ptr, "undercut_step"),
            integer_or(params, ptr, "max_rounds", 100));
        csv::Table t({"round", "wage", "jornada", "worker_income"});
        for (const auto& row : trace.rounds) {
            t.add_row({csv::format(static_cast<long long>(row.round)), fmt(row.wage),
                       fmt(row.jornada), fmt(row.worker_income)});
        }
        result.table = std::move(t);
        result.notes.push_back(std::string("termination: ") +
                               (trace.termination == ledger::UndercutEnd::SubsistenceBreach
                                    ? "subsistence breach"
                                    : "max rounds (workers close ranks)"));
    } else {
        fail(ptr + "/mode", "unknown ledger mode '" + mode + "'");
    }
}

// ----- accounts -------------------------------------------------------------

Money money_field(const json& j, const std::string& ptr, const char* key) {
    return Money::parse(num(j, ptr, key));
}

Money money_or(const json& j, const std::string& ptr, const char* key, Money fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) fail(ptr + "/" + key, "expected a number");
    return Money::parse(it->get<double>());
}

void run_accounts(const json& params, const std::string& ptr, RunResult& result) {
    std::vector<accounts::FirmBook> books;
    if (const auto it = params.find("log_file"); it != params.end()) {
        books = accounts::read_transaction_log_file(text(params, ptr, "log_file"));
    } else {
        const json& arr = member(params, ptr, "books");
        if (!arr.is_array()) fail(ptr + "/books", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string p = ptr + "/books/" + std::to_string(i);
            const json& b = arr[i];
            if (!b.is_object()) fail(p, "expected an object");
            accounts::FirmBook book;
            book.firm = text_or(b, "firm", "firm-" + std::to_string(i));
            book.ven_p = money_or(b, p, "ven_p", Money{});
            book.ven_e = money_or(b, p, "ven_e", Money{});
            book.ven_g = money_or(b, p, "ven_g", Money{});
            book.ven_x = money_or(b, p, "ven_x", Money{});
            book.comp_e = money_or(b, p, "comp_e", Money{});
            book.comp_x = money_or(b, p, "comp_x", Money{});
            book.var_stk = money_or(b, p, "var_stk", Money{});
            book.inv = money_or(b, p, "inv", Money{});
            if (const auto vs = b.find("voluntary_stock"); vs != b.end()) {
                if (!vs->is_boolean()) fail(p + "/voluntary_stock", "expected a boolean");
                book.voluntary_stock = vs->get<bool>();
            }
            book.validate();
            books.push_back(std::move(book));
        }
    }

    accounts::GovernmentInputs gov;
    gov.wages = money_or(params, ptr, "gov_wages", Money{});
    gov.purchases = money_or(params, ptr, "gov_purchases", Money{});
    gov.investment = money_or(params, ptr, "gov_investment", Money{});
    const Money durables = money_or(params, ptr, "particular_durables", Money{});
    const Money tolerance = money_or(params, ptr, "interfirm_tolerance", Money{});

    auto acc = accounts::aggregate(books, gov, durables, tolerance);
    if (const auto it = params.find("depreciation"); it != params.end()) {
        accounts::set_depreciation(acc, money_field(params, ptr, "depreciation"));
    }

    const double pbi = acc.pbi.value();
    csv::Table t({"quantity", "amount", "pct_of_pbi"});
    const auto row = [&](const char* label, Money m) {
        t.add_row({label, m.str(), pbi != 0.0 ? csv::format(m.value() / pbi * 100.0) : "0"});
    };
    row("pbi", acc.pbi);
    row("consumption", acc.consumption);
    row("government", acc.government);
    row("investment", acc.investment);
    row("overproduction", acc.overproduction);
    row("net_exports", acc.net_exports);
    row("exports", acc.exports);
    row("imports", -acc.imports);
    const auto saving = accounts::national_saving(acc);
    row("national_saving", saving.saving);
    if (acc.has_depreciation) row("pni", acc.pni);
    result.table = std::move(t);

    if (const auto it = params.find("flows"); it != params.end()) {
        const json& f = *it;
        const std::string p = ptr + "/flows";
        if (!f.is_object()) fail(p, "expected an object");
        accounts::IncomeFlows flows;
        flows.wages_e = money_or(f, p, "w_e", Money{});
        flows.benefits_e = money_or(f, p, "b_e", Money{});
        flows.taxes_e = money_or(f, p, "t_e", Money{});
        flows.taxes_p = money_or(f, p, "t_p", Money{});
        flows.pensions = money_or(f, p, "j", Money{});
        flows.debt_interest = money_or(f, p, "d_int", Money{});
        flows.r_e = money_or(f, p, "r_e", Money{});
        flows.r_p = money_or(f, p, "r_p", Money{});
        flows.r_g = money_or(f, p, "r_g", Money{});
        flows.r_x = money_or(f, p, "r_x", Money{});
        const auto y = accounts::sector_incomes(acc, flows);
        result.notes.push_back("sector incomes: enterprises " + y.enterprises.str() +
                               ", particulars " + y.particulars.str() + ", government " +
                               y.government.str() + ", external " + y.external.str());
    }
    if (const auto it = params.find("population"); it != params.end()) {
        const auto pc = accounts::per_capita(pbi, integer(params, ptr, "population"));
        result.notes.push_back("per capita: " + csv::format(pc.annual) + " per year, " +
                               csv::format(pc.monthly) + " per month");
    }
}

// ----- keynes ---------------------------------------------------------------

void run_keynes(const json& params, const std::string& ptr, RunResult& result) {
    const std::string op = text(params, ptr, "op");
    if (op == "cross_series") {
        const double c = num(params, ptr, "propensity");
        const double autonomous = num(params, ptr, "autonomous");
        const double y_eq = keynes::equilibrium_output(c, autonomous, 0.0, 0.0);
        const auto series = keynes::demand_cross_series(
            c, autonomous, num_or(params, ptr, "y_min", 0.0),
            num_or(params, ptr, "y_max", 2.0 * y_eq), integer_or(params, ptr, "points", 101));
        csv::Table t({"output", "production_line", "demand_line"});
        for (const auto& pt : series) {
            t.add_row({csv::format(pt.output), csv::format(pt.production_line),
                       csv::format(pt.demand_line)});
        }
        result.table = std::move(t);
        result.notes.push_back("lines cross at output " + csv::format(y_eq));
    } else if (op == "exports") {
        const auto& base = keynes::baseline_1995();
        const double unemployment = num_or(params, ptr, "unemployment_rate", 0.20);
        const double eg = num_or(params, ptr, "export_growth", 1.0);
        const double ig = num_or(params, ptr, "import_growth", 0.5);
        csv::Table t({"convention", "exports_new", "imports_new", "net_exports_new",
                      "delta_net_exports", "delta_output", "share_of_needed_pct"});
        const auto add = [&](const char* label, keynes::ExportsConvention conv) {
            const auto sc = keynes::exports_scenario(base, unemployment, eg, ig, conv);
            t.add_row({label, csv::format(sc.exports_new), csv::format(sc.imports_new),
                       csv::format(sc.net_exports_new), csv::format(sc.delta_net_exports),
                       csv::format(sc.delta_output), csv::format(sc.share_of_needed * 100.0)});
        };
        const std::string conv = text_or(params, "convention", "both");
        if (conv == "paper" || conv == "both") add("paper", keynes::ExportsConvention::PaperRounding);
        if (conv == "baseline" || conv == "both") add("baseline", keynes::ExportsConvention::FromBaseline);
        if (t.rows() == 0) fail(ptr + "/convention", "expected 'paper', 'baseline' or 'both'");
        result.table = std::move(t);
    } else if (op == "shift") {
        keynes::MacroState state;
        state.propensity = num(params, ptr, "propensity");
        const double c_new = num(params, ptr, "propensity_new");
        const auto shift = keynes::consumption_shift(state, c_new);
        csv::Table t({"propensity", "propensity_new", "m_before", "m_after", "pct_change"});
        t.add_row({csv::format(state.propensity), csv::format(c_new),
                   csv::format(shift.m_before), csv::format(shift.m_after),
                   csv::format(shift.pct_multiplier)});
        result.table = std::move(t);
    } else if (op == "gap") {
        const double y = num(params, ptr, "output");
        const auto gap = keynes::employment_gap(num(params, ptr, "unemployment_rate"), y);
        csv::Table t({"output", "delta_output", "delta_pct", "new_employment_ratio"});
        t.add_row({csv::format(y), csv::format(gap.delta_output), csv::format(gap.delta_pct),
                   csv::format(gap.new_employment_ratio)});
        result.table = std::move(t);
    } else if (op == "return") {
        const double rate = keynes::project_return(num(params, ptr, "principal"),
                                                   num(params, ptr, "final_value"),
                                                   num(params, ptr, "years"));
        csv::Table t({"principal", "final_value", "years", "annual_rate_pct"});
        t.add_row({csv::format(num(params, ptr, "principal")),
                   csv::format(num(params, ptr, "final_value")),
                   csv::format(num(params, ptr, "years")), csv::format(rate * 100.0)});
        result.table = std::move(t);
    } else {
        fail(ptr + "/op", "unknown keynes operation '" + op + "'");
    }
}

// ----- redistribution -------------------------------------------------------

void run_redistribution(const json& params, const std::string& ptr, RunResult& result) {
    const double f1 = num(params, ptr, "f1");
    const double c1 = num(params, ptr, "c1");
    const double c = num(params, ptr, "c");
    const double y = num(params, ptr, "Y");  // millions
    const auto split = redist::SectorSplit::from_composite(f1, c1, c,
                                                           num_or(params, ptr, "f2", -1.0));
    const std::string op = text_or(params, "op", "table");
    // Published-table scale: thousands of millions.
    const double k = 1000.0;

    if (op == "table") {
        const json& plist = member(params, ptr, "p_list");
        if (!plist.is_array() || plist.empty()) fail(ptr + "/p_list", "expected a non-empty array");
        std::vector<double> ps;
        for (std::size_t i = 0; i < plist.size(); ++i) {
            if (!plist[i].is_number()) {
                fail(ptr + "/p_list/" + std::to_string(i), "expected a number");
            }
            ps.push_back(plist[i].get<double>());
        }
        const auto table = redist::redistribution_table(split, ps, y,
                                                        num_or(params, ptr, "target_growth", 0.20));
        csv::Table t({"p_pct", "c_prime", "m_prime", "y_prime", "f1_prime", "y1_prime",
                      "y23_prime", "pct_y", "pct_y1", "pct_y23"});
        for (const auto& r : table.rows) {
            t.add_row({csv::format(r.p * 100.0), csv::format(r.c_prime), csv::format(r.m_prime),
                       csv::format(r.y_prime / k), csv::format(r.f1_prime),
                       csv::format(r.y1_prime / k), csv::format(r.y23_prime / k),
                       csv::format(r.pct_y), csv::format(r.pct_y1), csv::format(r.pct_y23)});
        }
        result.table = std::move(t);
        if (table.threshold_p_tabulated >= 0.0) {
            result.notes.push_back("first tabulated p with output growth >= " +
                                   csv::format(table.target_pct) + "%: " +
                                   csv::format(table.threshold_p_tabulated * 100.0) + "%");
        }
        if (table.threshold_p_exact >= 0.0) {
            result.notes.push_back("exact p for that growth: " +
                                   csv::format(table.threshold_p_exact * 100.0) + "%");
        }
    } else if (op == "series") {
        const double p_max = num_or(params, ptr, "p_max", 0.20);
        const std::int64_t points = integer_or(params, ptr, "points", 101);
        if (points < 2 || p_max <= 0.0 || p_max >= 1.0) {
            fail(ptr, "series requires points >= 2 and p_max in (0,1)");
        }
        const double autonomous = (1.0 - redist::composite_propensity(split)) * y;
        csv::Table t({"p_pct", "y_prime", "y1_prime", "y23_prime"});
        for (std::int64_t i = 0; i < points; ++i) {
            const double p = p_max * static_cast<double>(i) / static_cast<double>(points - 1);
            const auto r = redist::apply_redistribution(split, p, autonomous);
            t.add_row({csv::format(p * 100.0), csv::format(r.y_prime / k),
                       csv::format(r.y1_prime / k), csv::format(r.y23_prime / k)});
        }
        result.table = std::move(t);
    } else {
        fail(ptr + "/op", "unknown redistribution operation '" + op + "'");
    }
}

// ----- market ---------------------------------------------------------------

market::LinearCurve curve(const json& j, const std::string& ptr, const char* key) {
    const json& v = member(j, ptr, key);
    if (!v.is_object()) fail(ptr + "/" + key, "expected an object");
    market::LinearCurve c;
    c.intercept = num(v, ptr + "/" + key, "intercept");
    c.slope = num(v, ptr + "/" + key, "slope");
    return c;
}

market::GammaFn gamma_fn(const json& j, const std::string& ptr) {
    const json& v = member(j, ptr, "gamma");
    market::GammaFn g;
    if (v.is_number()) {
        g.kind = market::GammaFn::Kind::Constant;
        g.base = v.get<double>();
        return g;
    }
    if (!v.is_object()) fail(ptr + "/gamma", "expected a number or an object");
    const std::string p = ptr + "/gamma";
    const std::string kind = text(v, p, "kind");
    if (kind == "constant") {
        g.kind = market::GammaFn::Kind::Constant;
        g.base = num(v, p, "value");
    } else if (kind == "saturating") {
        g.kind = market::GammaFn::Kind::Saturating;
        g.base = num(v, p, "base");
        g.gain = num(v, p, "gain");
    } else {
        fail(p + "/kind", "expected 'constant' or 'saturating'");
    }
    return g;
}

void run_market(const json& params, const std::string& ptr, RunResult& result) {
    const std::string op = text(params, ptr, "op");
    if (op == "tatonnement") {
        const json& cases = member(params, ptr, "cases");
        if (!cases.is_array() || cases.empty()) fail(ptr + "/cases", "expected a non-empty array");
        csv::Table t({"case", "iteration", "price"});
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const std::string p = ptr + "/cases/" + std::to_string(i);
            const json& cs = cases[i];
            const std::string name = text_or(cs, "name", "case-" + std::to_string(i));
            const auto supply = curve(cs, p, "supply");
            const auto demand = curve(cs, p, "demand");
            market::TatonnementConfig cfg;
            if (const auto it = cs.find("config"); it != cs.end()) {
                const std::string pc = p + "/config";
                cfg.speed = num_or(*it, pc, "speed", cfg.speed);
                cfg.tolerance = num_or(*it, pc, "tolerance", cfg.tolerance);
                cfg.max_iterations = integer_or(*it, pc, "max_iterations", cfg.max_iterations);
                cfg.initial_price = num_or(*it, pc, "initial_price", cfg.initial_price);
            }
            const auto run = market::tatonnement(supply, demand, cfg);
            for (std::size_t step = 0; step < run.prices.size(); ++step) {
                t.add_row({name, csv::format(static_cast<long long>(step)),
                           csv::format(run.prices[step])});
            }
            result.notes.push_back(name + ": " + market::verdict_name(run.verdict) +
                                   " (stability factor " +
                                   csv::format(market::stability_factor(supply, demand, cfg.speed)) +
                                   ", equilibrium price " + csv::format(run.equilibrium_price) +
                                   ")");
        }
        result.table = std::move(t);
    } else if (op == "statics") {
        market::ConcaveProduction prod;
        const json& pr = member(params, ptr, "production");
        const std::string pp = ptr + "/production";
        prod.scale = num(pr, pp, "scale");
        prod.exponent = num(pr, pp, "exponent");
        prod.full_employment = num(pr, pp, "full_employment");
        market::WageDemand dem;
        dem.autonomous = num(params, ptr, "autonomous");
        dem.gamma = gamma_fn(params, ptr);
        const json& wg = member(params, ptr, "wages");
        const std::string pw = ptr + "/wages";
        const double w_min = num(wg, pw, "min");
        const double w_max = num(wg, pw, "max");
        const std::int64_t points = integer(wg, pw, "points");
        if (points < 2 || !(w_min > 0.0) || !(w_max > w_min)) {
            fail(pw, "requires 0 < min < max and points >= 2");
        }
        std::vector<double> grid;
        for (std::int64_t i = 0; i < points; ++i) {
            grid.push_back(w_min + (w_max - w_min) * static_cast<double>(i) /
                                       static_cast<double>(points - 1));
        }
        dem.wage = grid.front();
        csv::Table t({"wage", "gamma", "employment", "output", "corner"});
        for (const auto& row : market::wage_comparative_statics(prod, dem, grid)) {
            t.add_row({csv::format(row.wage), csv::format(row.gamma),
                       csv::format(row.employment), csv::format(row.output),
                       row.corner ? "yes" : "no"});
        }
        result.table = std::move(t);
    } else if (op == "longrun") {
        const json& factors = member(params, ptr, "factors");
        if (!factors.is_array() || factors.empty()) {
            fail(ptr + "/factors", "expected a non-empty array");
        }
        std::vector<double> pis;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (!factors[i].is_number()) {
                fail(ptr + "/factors/" + std::to_string(i), "expected a number");
            }
            pis.push_back(factors[i].get<double>());
        }
        const auto series = market::long_run_series(pis, num(params, ptr, "gamma"),
                                                    num(params, ptr, "autonomous"),
                                                    num_or(params, ptr, "base_slope", 1.0));
        csv::Table t({"period", "productivity_factor", "employment", "output"});
        for (const auto& pt : series) {
            t.add_row({csv::format(static_cast<long long>(pt.period)),
                       csv::format(pt.productivity_factor), csv::format(pt.employment),
                       csv::format(pt.output)});
        }
        result.table = std::move(t);
    } else {
        fail(ptr + "/op", "unknown market operation '" + op + "'");
    }
}

}  // namespace

RunResult run_scenario(const json& doc) {
    if (!doc.is_object()) fail("", "scenario must be a JSON object");
    RunResult result;
    result.name = text_or(doc, "name", "unnamed");
    result.kind = text(doc, "", "kind");

    if (const auto it = doc.find("outputs"); it != doc.end()) {
        if (!it->is_array()) fail("/outputs", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = "/outputs/" + std::to_string(i);
            const json& o = (*it)[i];
            if (!o.is_object()) fail(p, "expected an object");
            OutputSpec spec;
            spec.type = text(o, p, "type");
            if (spec.type == "csv") {
                spec.path = text(o, p, "path");
            } else if (spec.type != "table") {
                fail(p + "/type", "expected 'csv' or 'table'");
            }
            result.outputs.push_back(std::move(spec));
        }
    }

    const json& params = member(doc, "", "parameters");
    if (!params.is_object()) fail("/parameters", "expected an object");
    const std::string ptr = "/parameters";

    if (result.kind == "island") run_island(params, ptr, result);
    else if (result.kind == "ledger") run_ledger(params, ptr, result);
    else if (result.kind == "accounts") run_accounts(params, ptr, result);
    else if (result.kind == "keynes") run_keynes(params, ptr, result);
    else if (result.kind == "redistribution") run_redistribution(params, ptr, result);
    else if (result.kind == "market") run_market(params, ptr, result);
    else fail("/kind", "unknown scenario kind '" + result.kind + "'");

    return result;
}

RunResult run_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scenario: cannot open " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ValidationError("scenario: invalid JSON in " + path);
    return run_scenario(doc);
}

std::vector<CatalogEntry> list_scenarios(const std::vector<std::string>& dirs) {
    namespace fs = std::filesystem;
    std::vector<CatalogEntry> entries;
    for (const auto& dir : dirs) {
        if (!fs::is_directory(dir)) {
            throw ValidationError("scenario: not a directory: " + dir);
        }
        std::vector<fs::path> files;
        for (const auto& item : fs::directory_iterator(dir)) {
            if (item.is_regular_file() && item.path().extension() == ".json") {
                files.push_back(item.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::ifstream in(file);
            json doc = json::parse(in, nullptr, false);
            if (doc.is_discarded() || !doc.is_object() || !doc.contains("kind")) {
                throw ValidationError("scenario: corrupted scenario file " + file.string());
            }
            CatalogEntry e;
            e.name = text_or(doc, "name", file.stem().string());
            e.kind = text_or(doc, "kind", "?");
            e.description = text_or(doc, "description", "");
            e.file = file.string();
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

}  // namespace macrodesk::scenario
