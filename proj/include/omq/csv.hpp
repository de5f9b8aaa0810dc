#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace omq {

/// CSV with a '#'-prefixed header block for units and run provenance.
/// Numbers are written with %.17g so identical runs produce identical bytes.
class CsvWriter {
 public:
  void comment(const std::string& line) { header_ += "# " + line + "\n"; }

  void columns(const std::vector<std::string>& names) {
    cols_.clear();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) cols_ += ",";
      cols_ += names[i];
    }
    cols_ += "\n";
  }

  void row(const std::vector<double>& values) {
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) body_ += ",";
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      body_ += buf;
    }
    body_ += "\n";
  }

  std::string str() const { return header_ + cols_ + body_; }

 private:
  std::string header_, cols_, body_;
};

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace omq
