//! \file csv.hpp
//! \brief CSV emission with atomic write-then-rename and the 6-significant-
//!        digit scientific float format used by all table outputs.

#ifndef LOPWENO_CSV_HPP_
#define LOPWENO_CSV_HPP_

#include <cstdio>
#include <string>
#include <vector>

#include "lopweno/errors.hpp"

namespace lopweno {

inline std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5E", v);
  return buf;
}

// Writes header + rows to path via a temporary file and rename.
void emit_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);

void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace lopweno

#endif  // LOPWENO_CSV_HPP_
