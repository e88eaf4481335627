#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerx {

/// CSV with '#'-prefixed metadata header lines; plot-tool agnostic and
/// diff-friendly.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void meta(const std::string& key, const std::string& value);
  void meta(const std::string& key, double value);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
};

std::string format_double(double v);

}  // namespace eulerx
