#include "macrodesk/accounts.hpp"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>

#include "macrodesk/errors.hpp"

namespace macrodesk::accounts {

void FirmBook::validate() const {
    const Money zero{};
    if (ven_p < zero || ven_e < zero || ven_g < zero || ven_x < zero) {
        throw ValidationError("accounts: sales components must be >= 0 (firm " + firm + ")");
    }
    if (comp_e < zero || comp_x < zero || inv < zero) {
        throw ValidationError("accounts: purchases and investment must be >= 0 (firm " + firm +
                              ")");
    }
}

Money value_added(const FirmBook& book) {
    book.validate();
    const Money sales = book.ven_p + book.ven_e + book.ven_g + book.ven_x;
    const Money purchases = book.comp_e + book.comp_x;
    return sales - purchases + book.var_stk + book.inv;
}

NationalAccounts aggregate(const std::vector<FirmBook>& books, const GovernmentInputs& gov,
                           Money particular_durables, Money interfirm_tolerance) {
    const Money zero{};
    if (gov.wages < zero || gov.purchases < zero || gov.investment < zero) {
        throw ValidationError("accounts: government inputs must be >= 0");
    }
    if (particular_durables < zero) {
        throw ValidationError("accounts: particular durables must be >= 0");
    }

    Money ven_p, ven_e, ven_g, ven_x, comp_e, comp_x;
    Money unsold, firm_investment, production;
    for (const auto& b : books) {
        production += value_added(b);
        ven_p += b.ven_p;
        ven_e += b.ven_e;
        ven_g += b.ven_g;
        ven_x += b.ven_x;
        comp_e += b.comp_e;
        comp_x += b.comp_x;
        if (b.voluntary_stock) firm_investment += b.var_stk; else unsold += b.var_stk;
        firm_investment += b.inv;
    }

    // Every sale between firms is someone else's purchase.
    const Money gap = ven_e - comp_e;
    const Money gap_abs = gap < zero ? -gap : gap;
    if (gap_abs > interfirm_tolerance) {
        throw InconsistentLogError("accounts: inter-firm sales " + ven_e.str() +
                                   " and purchases " + comp_e.str() + " do not match");
    }
    if (particular_durables > ven_p) {
        throw ValidationError("accounts: particular durables exceed sales to particulars");
    }
    if (gov.purchases + gov.investment != ven_g) {
        throw InconsistentLogError("accounts: C(G) + I(G) = " +
                                   (gov.purchases + gov.investment).str() +
                                   " must equal recorded sales to government " + ven_g.str());
    }

    NationalAccounts acc;
    acc.c_particulars = ven_p - particular_durables;
    acc.i_particulars = particular_durables;
    acc.c_government = gov.purchases;
    acc.i_government = gov.investment;
    acc.i_enterprises = firm_investment;
    acc.gov_wages = gov.wages;
    acc.exports = ven_x;
    acc.imports = comp_x;
    acc.firm_production = production;

    acc.consumption = acc.c_particulars;
    acc.government = acc.c_government + acc.gov_wages;
    acc.investment = acc.i_particulars + acc.i_government + acc.i_enterprises;
    acc.net_exports = acc.exports - acc.imports;
    acc.overproduction = unsold;
    acc.pbi = acc.consumption + acc.government + acc.investment + acc.net_exports +
              acc.overproduction;
    return acc;
}

void set_depreciation(NationalAccounts& accounts, Money depreciation) {
    if (depreciation < Money{}) throw ValidationError("accounts: depreciation must be >= 0");
    accounts.has_depreciation = true;
    accounts.depreciation = depreciation;
    accounts.pni = accounts.pbi - depreciation;
}

SectorIncomes sector_incomes(const NationalAccounts& accounts, const IncomeFlows& flows) {
    if (flows.r_e + flows.r_p + flows.r_g + flows.r_x != Money{}) {
        throw InvalidTransfersError("accounts: transfer flows must sum to zero");
    }
    SectorIncomes y;
    y.enterprises = accounts.firm_production - flows.wages_e - flows.benefits_e - flows.taxes_e +
                    flows.r_e;
    y.particulars = flows.wages_e + flows.benefits_e - flows.taxes_p + flows.pensions + flows.r_p;
    y.government = accounts.gov_wages + flows.taxes_e + flows.taxes_p - flows.pensions -
                   flows.debt_interest + flows.r_g;
    y.external = flows.debt_interest + flows.r_x;
    return y;
}

SavingResult national_saving(const NationalAccounts& accounts) {
    SavingResult s;
    s.saving = accounts.pbi - accounts.consumption - accounts.government;
    s.absorption = accounts.investment + accounts.net_exports + accounts.overproduction;
    if (s.saving != s.absorption) {
        throw ModelError("accounts: saving identity violated; accounts were not aggregated");
    }
    return s;
}

PerCapita per_capita(double pbi_millions, std::int64_t population) {
    if (population <= 0) throw ValidationError("accounts: population must be > 0");
    PerCapita pc;
    pc.annual = pbi_millions * 1e6 / static_cast<double>(population);
    pc.monthly = pc.annual / 12.0;
    return pc;
}

double real_growth(double nominal_t0, double nominal_t1, double deflator) {
    if (nominal_t0 <= 0 || nominal_t1 <= 0) {
        throw ValidationError("accounts: nominal values must be > 0");
    }
    if (deflator <= 0) throw ValidationError("accounts: deflator must be > 0");
    return (nominal_t1 / deflator / nominal_t0 - 1.0) * 100.0;
}

namespace {

Money field(const nlohmann::json& j, const char* key, std::size_t line) {
    const auto it = j.find(key);
    if (it == j.end()) return Money{};
    if (!it->is_number()) {
        throw ValidationError("accounts: line " + std::to_string(line) + ": field " + key +
                              " must be a number");
    }
    return Money::parse(it->get<double>());
}

}  // namespace

std::vector<FirmBook> read_transaction_log(std::istream& in) {
    std::vector<FirmBook> books;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw ValidationError("accounts: line " + std::to_string(line_no) +
                                  ": invalid JSON record");
        }
        FirmBook b;
        b.firm = j.value("firm", std::string{});
        b.ven_p = field(j, "ven_p", line_no);
        b.ven_e = field(j, "ven_e", line_no);
        b.ven_g = field(j, "ven_g", line_no);
        b.ven_x = field(j, "ven_x", line_no);
        b.comp_e = field(j, "comp_e", line_no);
        b.comp_x = field(j, "comp_x", line_no);
        b.var_stk = field(j, "var_stk", line_no);
        b.inv = field(j, "inv", line_no);
        b.voluntary_stock = j.value("voluntary_stock", false);
        b.validate();
        books.push_back(std::move(b));
    }
    return books;
}

std::vector<FirmBook> read_transaction_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("accounts: cannot open transaction log " + path);
    return read_transaction_log(in);
}

}  // namespace macrodesk::accounts
