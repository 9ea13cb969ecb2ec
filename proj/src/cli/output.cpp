#include "output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ptosc::cli {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (result.ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return {buffer, result.ptr};
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable::Row& CsvTable::Row::add(double value) {
    cells_.push_back(format_double(value));
    return *this;
}

CsvTable::Row& CsvTable::Row::add(long value) {
    cells_.push_back(std::to_string(value));
    return *this;
}

CsvTable::Row& CsvTable::Row::add(std::string_view text) {
    cells_.emplace_back(text);
    return *this;
}

CsvTable::Row& CsvTable::Row::add(bool flag) {
    cells_.emplace_back(flag ? "true" : "false");
    return *this;
}

void CsvTable::push(Row row) {
    if (row.cells_.size() != header_.size()) throw std::logic_error("CSV row width does not match header");
    rows_.push_back(std::move(row.cells_));
}

std::string CsvTable::str() const {
    std::string text;
    auto emit = [&text](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text += ',';
            text += cells[i];
        }
        text += '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return text;
}

std::string to_canonical_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

} // namespace ptosc::cli
