#include <doctest.h>

#include <sstream>

#include "eulerx/csv.hpp"

using namespace eulerx;

TEST_CASE("metadata header and rows") {
  std::stringstream ss;
  CsvWriter w(ss);
  w.meta("command", "demo");
  w.meta("sigma", 0.5);
  w.columns({"t", "value"});
  w.row({1.0, 2.5});
  w.row({1.5, -0.125});
  CHECK(ss.str() ==
        "# command = demo\n"
        "# sigma = 0.5\n"
        "t,value\n"
        "1,2.5\n"
        "1.5,-0.125\n");
}

TEST_CASE("format_double keeps 12 significant digits") {
  CHECK(format_double(0.944258314841) == "0.944258314841");
  CHECK(format_double(1e7) == "10000000");
  CHECK(format_double(-0.5) == "-0.5");
}
