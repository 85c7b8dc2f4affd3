#include "twostop/report.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace twostop;

TEST_CASE("six significant digits") {
    CHECK(format_sig6(1.0) == "1");
    CHECK(format_sig6(1.165624) == "1.16562");
    CHECK(format_sig6(0.000123456789) == "0.000123457");
    CHECK(format_sig6(123456.789) == "123457");
}

TEST_CASE("csv round trip at print precision") {
    Table t;
    t.columns = {"a", "b", "c"};
    t.add_row({1.0, 0.5, 2.793997});
    t.add_row({2.0, 0.25, 11.93118});
    std::stringstream ss;
    t.write_csv(ss);
    // header + LF line endings only
    CHECK(ss.str().find("a,b,c\n") == 0);
    CHECK(ss.str().find('\r') == std::string::npos);

    const Table back = Table::read_csv(ss);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(back.rows[i][j] ==
                  doctest::Approx(t.rows[i][j]).epsilon(5e-6));
    // re-serialization is idempotent at the printed precision
    std::stringstream ss2;
    back.write_csv(ss2);
    CHECK(ss.str() == ss2.str());
}

TEST_CASE("json round trip is exact") {
    Table t;
    t.columns = {"x", "y"};
    t.add_row({0.1 + 0.2, 1.0 / 3.0});
    t.add_row({2.793997652601553, 1e-17});
    std::stringstream ss;
    t.write_json(ss);
    const Table back = Table::read_json(ss);
    REQUIRE(back.columns == t.columns);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            CHECK(back.rows[i][j] == t.rows[i][j]);
}

TEST_CASE("file io and errors") {
    Table t;
    t.columns = {"v"};
    t.add_row({42.0});
    const std::string path = "report_test_tmp.csv";
    t.write_file(path, "csv");
    const Table back = Table::read_file(path, "csv");
    CHECK(back.rows[0][0] == 42.0);
    std::remove(path.c_str());

    CHECK_THROWS(t.write_file(path, "xml"));
    CHECK_THROWS(t.add_row({1.0, 2.0}));
    CHECK_THROWS(Table::read_file("no_such_dir/nope.csv", "csv"));
}

TEST_CASE("reference data file parses") {
    const Table t = Table::read_file(std::string(TWOSTOP_DATA_DIR) + "/table1.csv",
                                     "csv");
    CHECK(t.columns.size() == 9);
    CHECK(t.columns[0] == "alpha");
    CHECK(t.columns[8] == "improvement");
    CHECK(t.rows.size() == 19);
    CHECK(t.rows[9][0] == 1.0);
    CHECK(t.rows[9][3] == doctest::Approx(1.16562));
}
