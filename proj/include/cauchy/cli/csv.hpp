#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cauchy::cli {

/// Shortest general-format rendering with 17 significant digits, '.' as
/// decimal separator, independent of the global locale.
std::string format_number(double v);

/// Row-oriented CSV builder: ',' separators, LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;

    /// Writes the table in binary mode; throws std::runtime_error on I/O failure.
    void write(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void write_text(const std::string& path, std::string_view text);

}  // namespace cauchy::cli
