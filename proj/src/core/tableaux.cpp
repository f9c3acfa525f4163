#include "tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace ytab {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

bool Tableau::valid() const {
  int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) return false;
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) return false;
    for (size_t j = 0; j < rows_[r].size(); ++j) {
      int e = rows_[r][j];
      if (e < 1 || e > n || seen[static_cast<size_t>(e)]) return false;
      seen[static_cast<size_t>(e)] = true;
      if (j > 0 && rows_[r][j - 1] >= e) return false;
      if (r > 0 && rows_[r - 1][j] >= e) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::col_profile(int i) const {
  std::vector<int> cols;
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] > i) break;
      if (cols.size() <= j) cols.resize(j + 1, 0);
      ++cols[j];
    }
  }
  return cols;
}

Int Tableau::box_index(int i, int m) const {
  // locate i
  size_t col = 0;
  bool found = false;
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] == i) {
        col = j;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw OutOfRange("entry not present in tableau");
  auto cols = col_profile(i);
  if (col == 0) return Int(m) * i - cols[0] - (m - 2);
  // entry in column col+1 (1-based): col_j(T_i) - col_(j+1)(T_i) + 1,
  // where column j+1 is the one holding i
  return Int(cols[col - 1]) - cols[col] + 1;
}

std::vector<int> Tableau::row_length_counts() const {
  std::vector<int> w(static_cast<size_t>(size()) + 1, 0);
  for (const auto& r : rows_) ++w[r.size()];
  return w;
}

std::set<int> Tableau::descent_set() const {
  std::vector<int> row_of(static_cast<size_t>(size()) + 1, 0);
  for (size_t r = 0; r < rows_.size(); ++r)
    for (int e : rows_[r]) row_of[static_cast<size_t>(e)] = static_cast<int>(r);
  std::set<int> des;
  for (int i = 1; i < size(); ++i)
    if (row_of[static_cast<size_t>(i + 1)] > row_of[static_cast<size_t>(i)])
      des.insert(i);
  return des;
}

int Tableau::descent_count() const {
  return static_cast<int>(descent_set().size());
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << '/';
    for (size_t j = 0; j < rows_[r].size(); ++j) {
      if (j) os << ',';
      os << rows_[r][j];
    }
  }
  return os.str();
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream is(text);
  std::string rowtext;
  while (std::getline(is, rowtext, '/')) {
    std::vector<int> row;
    std::istringstream rs(rowtext);
    std::string cell;
    while (std::getline(rs, cell, ',')) row.push_back(std::stoi(cell));
    rows.push_back(std::move(row));
  }
  Tableau t(std::move(rows));
  if (!t.valid()) throw ParseError("not a standard Young tableau: " + text);
  return t;
}

namespace {

// Shapes of n in reverse-lexicographic order, optionally width-capped.
std::vector<std::vector<int>> shapes(int n, int max_cols) {
  std::vector<std::vector<int>> out;
  for (const auto& p : partitions_of(n)) {
    if (max_cols > 0 && !p.parts.empty() && p.parts[0] > max_cols) continue;
    out.push_back(p.parts);
  }
  return out;
}

void fill_shape(const std::vector<int>& shape, int n,
                const std::function<void(const Tableau&)>& sink) {
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<int> filled(shape.size(), 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      sink(Tableau(rows));
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] >= shape[r]) continue;
      // cell below (row r-1, same column) must already be filled
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      rows[r].push_back(next);
      ++filled[r];
      self(self, next + 1);
      --filled[r];
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

void enumerate_syt(int n, int max_cols,
                   const std::function<void(const Tableau&)>& sink) {
  for (const auto& shape : shapes(n, max_cols)) fill_shape(shape, n, sink);
}

std::vector<Tableau> all_syt(int n, int max_cols) {
  std::vector<Tableau> out;
  enumerate_syt(n, max_cols, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Poly syt_expansion(int n, int m, const Poly& base,
                   const std::function<Poly(int)>& jets) {
  std::vector<Poly> jet(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) jet[static_cast<size_t>(i)] = jets(i);
  Poly total;
  enumerate_syt(n, 0, [&](const Tableau& t) {
    auto w = t.row_length_counts();
    Int idx = 1;
    for (int i = 1; i <= n; ++i) idx *= t.box_index(i, m);
    Poly contrib(idx);
    for (int i = 1; i <= n; ++i) {
      if (w[static_cast<size_t>(i)] == 0) continue;
      if (jet[static_cast<size_t>(i)].is_zero()) {
        contrib = Poly();
        break;
      }
      contrib =
          contrib * jet[static_cast<size_t>(i)].pow(w[static_cast<size_t>(i)]);
    }
    if (contrib.is_zero()) return;
    contrib = contrib * base.pow(m * n + 1 - t.row_count());
    total += contrib;
  });
  return total;
}

Poly syt_index_poly(int n, int m, const VarId& x) {
  Poly total;
  enumerate_syt(n, 0, [&](const Tableau& t) {
    Int idx = 1;
    for (int i = 1; i <= n; ++i) idx *= t.box_index(i, m);
    total += Poly::term(idx, Monomial::var(x, t.row_count()));
  });
  return total;
}

}  // namespace ytab
