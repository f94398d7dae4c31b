#ifndef IFCS_SRC_TSV_H_
#define IFCS_SRC_TSV_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ifcs {

// Calls `row(line_number, fields)` for every non-blank, non-comment line.
// Fields are tab-separated; a trailing '\r' is dropped.
template <typename Fn>
void ForEachTsvRow(std::istream& in, Fn&& row) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> fields;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fields.clear();
    std::string_view rest(line);
    while (true) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    row(line_no, fields);
  }
}

}  // namespace ifcs

#endif  // IFCS_SRC_TSV_H_
