#pragma once

#include <string>
#include <vector>

namespace mcs {

struct CsvTable {
    std::string invocation;  // recorded as a leading comment line
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// 9 significant digits, the fixed CSV float format
std::string format_g9(double x);

std::string to_csv_string(const CsvTable& t);
void write_csv(const CsvTable& t, const std::string& path);

// Skips '#' comment lines; first non-comment line is the header.
CsvTable read_csv(const std::string& path);

}  // namespace mcs
