#ifndef ETPA_CSV_HPP
#define ETPA_CSV_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "etpa/errors.hpp"

namespace etpa {

// CSV writer with 17-significant-digit floats (lossless double round trip)
// and '#'-prefixed comment lines for parameter echoes.
class csv_writer {
 public:
  explicit csv_writer(const std::string& path) : out_(path) {
    if (!out_) throw error("csv_writer: cannot open " + path);
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }

  void row(const std::vector<double>& vals) {
    char buf[32];
    for (std::size_t i = 0; i < vals.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
      out_ << (i ? "," : "") << buf;
    }
    out_ << "\n";
  }

  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  std::ofstream out_;
};

}  // namespace etpa

#endif
