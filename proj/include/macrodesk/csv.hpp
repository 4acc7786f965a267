#pragma once

#include <string>
#include <vector>

namespace macrodesk::csv {

// Locale-independent number formatting shared by every CSV and table writer,
// so repeated runs produce byte-identical output.
std::string format(double value);
std::string format(long long value);

class Table {
  public:
    explicit Table(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);

    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& data() const { return rows_; }

    std::string to_csv() const;
    std::string to_text() const;  // aligned columns for terminal output

    // Writes via a temp file and rename, so readers never see partial files.
    void write_csv_atomic(const std::string& path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace macrodesk::csv
