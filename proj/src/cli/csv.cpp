#include "cli/csv.hpp"

#include <cstdio>

namespace nhq::cli {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << '\n'; }

void CsvWriter::comment(std::string_view key, double value) {
    out_ << "# " << key << '=' << format_number(value) << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_number(values[i]);
    out_ << '\n';
}

void CsvWriter::row(std::string_view label, const std::vector<double>& values) {
    out_ << label;
    for (double v : values) out_ << ',' << format_number(v);
    out_ << '\n';
}

}  // namespace nhq::cli
