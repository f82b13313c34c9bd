#ifndef NODALVAR_CSV_HPP
#define NODALVAR_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nodalvar {

/// Fixed scientific notation with `sig` significant digits; deterministic
/// byte-for-byte across runs.
std::string format_sci(double value, int sig = 6);

/// CSV with '#'-prefixed metadata lines, comma separation, LF endings and
/// quoting of cells containing commas.
class CsvWriter {
public:
  CsvWriter(std::ostream& out, int precision = 6)
      : out_(out), precision_(precision) {}

  void comment(const std::string& text);
  void row(const std::vector<std::string>& cells);
  std::string num(double value) const { return format_sci(value, precision_); }

private:
  std::ostream& out_;
  int precision_;
};

struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::vector<std::string>> rows;  // header row included
};

/// Parses quoted cells; used by the diff machinery and tests.
CsvTable read_csv(std::istream& in);

}  // namespace nodalvar

#endif
