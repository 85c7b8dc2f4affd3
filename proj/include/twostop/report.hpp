#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twostop {

/// Rectangular numeric report with named columns. CSV output prints 6
/// significant digits (UTF-8, LF); JSON keeps full double precision and
/// round-trips exactly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write_file(const std::string& path, const std::string& format) const;

    static Table read_csv(std::istream& is);
    static Table read_json(std::istream& is);
    static Table read_file(const std::string& path, const std::string& format);
};

std::string format_sig6(double v);

} // namespace twostop
