#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "macrodesk/money.hpp"

namespace macrodesk::accounts {

// One firm-period record. Field names follow the transaction-log schema:
// sales split by buyer sector, purchases split by seller sector.
struct FirmBook {
    std::string firm;
    Money ven_p;    // sales to particulars
    Money ven_e;    // sales to other firms
    Money ven_g;    // sales to government
    Money ven_x;    // exports
    Money comp_e;   // purchases from other firms
    Money comp_x;   // imports
    Money var_stk;  // stock change over the period, signed
    Money inv;      // equipment and other investment purchases
    // Deliberate stockpiling counts as firm investment, not overproduction.
    bool voluntary_stock = false;

    void validate() const;
};

// Output value minus purchased inputs, corrected for stock change and
// investment purchases. May be negative; callers decide whether that is
// noteworthy.
Money value_added(const FirmBook& book);

struct NationalAccounts {
    Money consumption;      // C = C(P)
    Money government;       // G = C(G) + W(G)
    Money investment;       // Iv = I(P) + I(G) + I(E)
    Money net_exports;      // Xn = X - M
    Money overproduction;   // Q, unsold output
    Money pbi;              // C + G + Iv + Xn + Q

    Money c_particulars;    // C(P)
    Money i_particulars;    // I(P)
    Money c_government;     // C(G)
    Money i_government;     // I(G)
    Money i_enterprises;    // I(E)
    Money gov_wages;        // W(G)
    Money exports;          // X
    Money imports;          // M
    Money firm_production;  // P(E), total firm value added

    // Depreciation is an optional user input; it is never estimated.
    bool has_depreciation = false;
    Money depreciation;
    Money pni;  // pbi - depreciation, meaningful only when has_depreciation
};

struct GovernmentInputs {
    Money wages;        // W(G)
    Money purchases;    // C(G)
    Money investment;   // I(G)
};

// Aggregates firm books into the national accounts. Inter-firm sales and
// purchases are two views of the same transactions and must agree within
// `interfirm_tolerance`; the government split must cover its recorded sales
// exactly; particulars' durables split their recorded sales into C(P)/I(P).
NationalAccounts aggregate(const std::vector<FirmBook>& books, const GovernmentInputs& gov,
                           Money particular_durables = Money{},
                           Money interfirm_tolerance = Money{});

void set_depreciation(NationalAccounts& accounts, Money depreciation);

// Transfer and distribution flows between sectors. All r_* entries are
// transfers and must sum to zero.
struct IncomeFlows {
    Money wages_e;        // W(E), firm wages to particulars
    Money benefits_e;     // B(E), distributed profits
    Money taxes_e;        // T(E)
    Money taxes_p;        // T(P)
    Money pensions;       // J
    Money debt_interest;  // external debt interest paid by government
    Money r_e, r_p, r_g, r_x;
};

struct SectorIncomes {
    Money enterprises;
    Money particulars;
    Money government;
    Money external;
};

SectorIncomes sector_incomes(const NationalAccounts& accounts, const IncomeFlows& flows);

struct SavingResult {
    Money saving;           // Y - C - G
    Money absorption;       // Iv + Xn + Q, must equal saving
};

// National saving by the income route, cross-checked against the absorption
// route. The two are the same identity read from opposite sides; a mismatch
// means the accounts were not built by aggregate().
SavingResult national_saving(const NationalAccounts& accounts);

struct PerCapita {
    double annual;   // per person per year
    double monthly;  // per person per month
};

// `pbi_millions` is in millions of currency units; results are in plain units.
PerCapita per_capita(double pbi_millions, std::int64_t population);

// Percent growth of nominal_t1/deflator relative to nominal_t0.
double real_growth(double nominal_t0, double nominal_t1, double deflator);

// Parses a line-delimited JSON transaction log (one firm-period per line).
std::vector<FirmBook> read_transaction_log(std::istream& in);
std::vector<FirmBook> read_transaction_log_file(const std::string& path);

}  // namespace macrodesk::accounts
