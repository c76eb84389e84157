#include <sstream>

#include "orthopat/pattern.hpp"

namespace orthopat {

std::vector<ZeroPattern> parse_patterns(std::string_view text) {
  std::vector<ZeroPattern> out;
  std::vector<std::string> block;
  auto flush = [&] {
    if (block.empty()) return;
    try {
      out.push_back(ZeroPattern::from_strings(block));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    block.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string cells;
    for (char ch : line)
      if (ch != ' ' && ch != '\t' && ch != '\r' && ch != ',') cells.push_back(ch);
    if (!cells.empty() && cells.front() == '#') continue;
    if (cells.empty()) {
      flush();
      continue;
    }
    block.push_back(std::move(cells));
  }
  flush();
  return out;
}

ZeroPattern parse_pattern(std::string_view text) {
  std::vector<ZeroPattern> all = parse_patterns(text);
  if (all.size() != 1) throw ParseError("expected one pattern, found " + std::to_string(all.size()));
  return all.front();
}

std::string format_patterns(const std::vector<ZeroPattern>& patterns) {
  std::string out;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i) out += '\n';
    out += patterns[i].to_string();
  }
  return out;
}

}  // namespace orthopat
