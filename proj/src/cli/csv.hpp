// CSV emission: '#' comment header, one header row, numbers as %.12g.

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nhq::cli {

std::string format_number(double v);

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(std::string_view text);
    void comment(std::string_view key, double value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    /// Row whose first cell is a label.
    void row(std::string_view label, const std::vector<double>& values);

private:
    std::ostream& out_;
};

}  // namespace nhq::cli
