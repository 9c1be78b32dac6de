#include "resint/labels.hpp"

#include <stdexcept>

namespace resint {

std::string GeneratorLabel::to_string() const {
  if (is_q()) return "Q" + std::to_string(q);
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(rows[k]);
  }
  return out + "]";
}

GeneratorLabel GeneratorLabel::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed generator label '" + text + "'"); };
  if (text.size() >= 2 && text[0] == 'Q') {
    std::size_t used = 0;
    int i = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1 || i < 1) throw bad();
    return Q(i);
  }
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw bad();
  std::vector<int> rows;
  std::size_t pos = 1;
  while (pos < text.size() - 1) {
    std::size_t used = 0;
    rows.push_back(std::stoi(text.substr(pos), &used));
    pos += used;
    if (text[pos] == ',') ++pos;
    else if (pos != text.size() - 1) throw bad();
  }
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] < 1 || (k && rows[k] <= rows[k - 1])) throw bad();
  return Minor(std::move(rows));
}

std::vector<GeneratorLabel> all_labels(int m, int n) {
  std::vector<GeneratorLabel> out;
  for (int i = 1; i <= m; ++i) out.push_back(GeneratorLabel::Q(i));
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(GeneratorLabel::Minor(cur));
      return;
    }
    for (int v = start; v <= m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace resint
