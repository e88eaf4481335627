#include "eulerx/csv.hpp"

#include <cstdio>

namespace eulerx {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  os_ << "# " << key << " = " << value << "\n";
}

void CsvWriter::meta(const std::string& key, double value) {
  meta(key, format_double(value));
}

void CsvWriter::columns(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    os_ << (i ? "," : "") << names[i];
  os_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    os_ << (i ? "," : "") << format_double(values[i]);
  os_ << "\n";
}

}  // namespace eulerx
