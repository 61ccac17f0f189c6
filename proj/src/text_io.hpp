#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mlsa/error.hpp"

namespace mlsa::detail {

// Reads the next non-blank line with '#' comments stripped, splitting it
// into integer tokens. Returns false at end of input.
inline bool next_int_line(std::istream& in, int& line_no, std::vector<long long>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    tokens.clear();
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorKind::kParse,
                    "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
      }
      tokens.push_back(value);
    }
    if (!tokens.empty()) return true;
  }
  return false;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return in;
}

}  // namespace mlsa::detail
