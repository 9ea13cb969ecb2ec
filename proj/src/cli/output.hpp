#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ptosc::cli {

/// Shortest decimal that round-trips to the same double; "inf", "-inf", "nan" otherwise.
std::string format_double(double value);

/// Comma-separated table with a fixed header and '\n' line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    class Row {
    public:
        Row& add(double value);
        Row& add(long value);
        Row& add(std::string_view text);
        Row& add(bool flag);

    private:
        friend class CsvTable;
        std::vector<std::string> cells_;
    };

    void push(Row row);
    [[nodiscard]] std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Canonical JSON text: sorted keys, two-space indent, trailing newline. Non-finite numbers become null.
std::string to_canonical_json(const nlohmann::json& doc);

} // namespace ptosc::cli
