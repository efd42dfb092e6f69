#ifndef BALGAMMA_SRC_LINE_READER_HPP
#define BALGAMMA_SRC_LINE_READER_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace balgamma::detail {

// Calls f(line_number, tokens) for every non-blank, non-comment line.
template <class F>
void for_each_record(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::istringstream is{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    f(line_no, tok);
    if (end == text.size()) break;
  }
}

}  // namespace balgamma::detail

#endif  // BALGAMMA_SRC_LINE_READER_HPP
