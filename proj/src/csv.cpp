//! \file csv.cpp

#include "lopweno/csv.hpp"

#include <cstdio>
#include <fstream>

namespace lopweno {

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp);
    out << content;
    if (!out) throw IoError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("rename failed for " + path);
}

void emit_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  std::string body;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) body += ',';
    body += header[i];
  }
  body += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) body += ',';
      body += format_sci(row[i]);
    }
    body += '\n';
  }
  write_text_atomic(path, body);
}

}  // namespace lopweno
