#include "twostop/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twostop {

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table: row width does not match header");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_sig6(row[i]);
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const {
    nlohmann::json j;
    j["columns"] = columns;
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

void Table::write_file(const std::string& path, const std::string& format) const {
    std::ofstream os(path, std::ios::binary);  // binary keeps LF on any host
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    if (format == "csv")
        write_csv(os);
    else if (format == "json")
        write_json(os);
    else
        throw std::invalid_argument("unknown format: " + format);
    if (!os) throw std::runtime_error("write failed: " + path);
}

Table Table::read_csv(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty csv");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        t.add_row(std::move(row));
    }
    return t;
}

Table Table::read_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows"))
        t.add_row(r.get<std::vector<double>>());
    return t;
}

Table Table::read_file(const std::string& path, const std::string& format) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return format == "json" ? read_json(is) : read_csv(is);
}

} // namespace twostop
