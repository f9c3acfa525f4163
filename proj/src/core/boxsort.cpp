#include "boxsort.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ytab {

int Owp::size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

bool Owp::valid() const {
  int n = size();
  if (static_cast<int>(blocks.size()) != order * n + 1) return false;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (size_t j = 0; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    if (!std::is_sorted(b.begin(), b.end())) return false;
    for (int e : b) {
      if (e < 1 || e > n || seen[static_cast<size_t>(e)]) return false;
      seen[static_cast<size_t>(e)] = true;
    }
    if (j >= 1 && !b.empty()) {
      // slot j belongs to the range opened after element i was placed
      int i = static_cast<int>((j - 1) / order) + 1;
      if (b.front() <= i) return false;
    }
  }
  if (blocks.empty() || blocks[0].empty() || blocks[0].front() != 1)
    return false;
  return true;
}

std::string Owp::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (j) os << '|';
    if (blocks[j].empty()) {
      os << '-';
    } else {
      for (size_t k = 0; k < blocks[j].size(); ++k) {
        if (k) os << ',';
        os << blocks[j][k];
      }
    }
  }
  return os.str();
}

void enumerate_owp(int n, int m, const std::function<void(const Owp&)>& sink) {
  Owp p;
  p.order = m;
  p.blocks.assign(static_cast<size_t>(m) * n + 1, {});
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      sink(p);
      return;
    }
    int open = m * (next - 1) + 1;
    for (int j = 0; j < open; ++j) {
      p.blocks[static_cast<size_t>(j)].push_back(next);
      self(self, next + 1);
      p.blocks[static_cast<size_t>(j)].pop_back();
    }
  };
  rec(rec, 1);
}

std::vector<Owp> all_owp(int n, int m) {
  std::vector<Owp> out;
  enumerate_owp(n, m, [&](const Owp& p) { out.push_back(p); });
  return out;
}

Poly owp_weight(const Owp& p) {
  Monomial mono;
  for (const auto& b : p.blocks) {
    VarId v("c", static_cast<int>(b.size()));
    mono.set_exponent(v, mono.exponent(v) + 1);
  }
  return Poly::term(1, mono);
}

Tableau phi(const Owp& p) {
  std::vector<std::vector<int>> rows;
  for (const auto& b : p.blocks)
    if (!b.empty()) rows.push_back(b);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (size_t j = 0; j < width; ++j) {
    std::vector<int> col;
    for (const auto& r : rows)
      if (j < r.size()) col.push_back(r[j]);
    std::sort(col.begin(), col.end());
    for (size_t r = 0; r < col.size(); ++r) rows[r][j] = col[r];
  }
  return Tableau(std::move(rows));
}

Int fiber_count(const Tableau& t, int m) {
  Int count = 0;
  enumerate_owp(t.size(), m, [&](const Owp& p) {
    if (phi(p) == t) ++count;
  });
  return count;
}

Owp parse_owp(const std::string& text) {
  Owp p;
  std::istringstream is(text);
  std::string blocktext;
  while (std::getline(is, blocktext, '|')) {
    std::vector<int> block;
    if (blocktext != "-" && !blocktext.empty()) {
      std::istringstream bs(blocktext);
      std::string cell;
      while (std::getline(bs, cell, ',')) block.push_back(std::stoi(cell));
    }
    p.blocks.push_back(std::move(block));
  }
  int n = p.size();
  if (n == 0 || (static_cast<int>(p.blocks.size()) - 1) % n != 0)
    throw ParseError("block count does not match any order: " + text);
  p.order = (static_cast<int>(p.blocks.size()) - 1) / n;
  if (!p.valid()) throw ParseError("not a valid ordered partition: " + text);
  return p;
}

}  // namespace ytab
