#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ytab {

namespace {

using StatEval = std::function<int(const std::string&)>;
using Sink = std::function<void(const StatEval&)>;

[[noreturn]] void bad_stat(const std::string& cls, const std::string& stat) {
  throw UnknownStatistic("class " + cls + " has no statistic " + stat);
}

// ---- permutations ---------------------------------------------------------

int perm_stat(const std::vector<int>& p, const std::string& s) {
  int n = static_cast<int>(p.size());
  auto at = [&](int i) { return i < 1 || i > n ? 0 : p[static_cast<size_t>(i) - 1]; };
  int v = 0;
  if (s == "des" || s == "des1") {
    for (int i = 1; i < n; ++i) v += at(i) > at(i + 1);
    if (s == "des1") ++v;
  } else if (s == "exc") {
    for (int i = 1; i <= n; ++i) v += at(i) > i;
  } else if (s == "cyc") {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      ++v;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = at(j))
        seen[static_cast<size_t>(j)] = true;
    }
  } else if (s == "ipk") {
    for (int i = 2; i < n; ++i) v += at(i - 1) < at(i) && at(i) > at(i + 1);
  } else if (s == "lpk") {
    for (int i = 1; i < n; ++i) v += at(i - 1) < at(i) && at(i) > at(i + 1);
  } else if (s == "val") {
    for (int i = 2; i < n; ++i) v += at(i - 1) > at(i) && at(i) < at(i + 1);
  } else if (s == "dd") {
    // p(0) = p(n+1) = 0
    for (int i = 1; i <= n; ++i) v += at(i - 1) > at(i) && at(i) > at(i + 1);
  } else {
    bad_stat("permutation", s);
  }
  return v;
}

void enum_permutations(int n, const Sink& sink) {
  if (n > 9) throw TooLarge("permutation oracle bounded at n <= 9");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    sink([&](const std::string& s) { return perm_stat(p, s); });
  } while (std::next_permutation(p.begin(), p.end()));
}

// ---- signed permutations --------------------------------------------------

void enum_signed(int n, const Sink& sink) {
  if (n > 7) throw TooLarge("signed permutation oracle bounded at n <= 7");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s(static_cast<size_t>(n) + 1, 0);
      for (int i = 0; i < n; ++i)
        s[static_cast<size_t>(i) + 1] =
            (mask >> i) & 1 ? -p[static_cast<size_t>(i)]
                            : p[static_cast<size_t>(i)];
      sink([&](const std::string& st) {
        if (st != "desB") bad_stat("signedPermutation", st);
        int v = 0;
        for (int i = 0; i < n; ++i)
          v += s[static_cast<size_t>(i)] > s[static_cast<size_t>(i) + 1];
        return v;
      });
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

// ---- Stirling permutations (k copies, blockwise insertion) -----------------

int word_stat(const std::vector<int>& w, const std::string& s,
              const std::string& cls) {
  int L = static_cast<int>(w.size());
  auto at = [&](int i) { return w[static_cast<size_t>(i)]; };
  int v = 0;
  if (s == "des" && cls == "stirlingPermutation") {
    for (int i = 0; i + 1 < L; ++i) v += at(i) > at(i + 1);
    ++v;  // trailing 0: the last position is always a descent
  } else if (s == "des" && cls == "multisetPermutation") {
    for (int i = 0; i + 1 < L; ++i) v += at(i) > at(i + 1);
  } else if (s == "asc") {
    v = 1;  // leading 0: position 0 is always an ascent
    for (int i = 0; i + 1 < L; ++i) v += at(i) < at(i + 1);
  } else if (s == "plat") {
    for (int i = 0; i + 1 < L; ++i) v += at(i) == at(i + 1);
  } else if (s == "ap" || s == "lap" || s == "fap") {
    int ap = 0;
    for (int i = 1; i + 1 < L; ++i)
      ap += at(i - 1) < at(i) && at(i) == at(i + 1);
    int lap = ap + (L >= 2 && at(0) == at(1) ? 1 : 0);
    v = s == "ap" ? ap : s == "lap" ? lap : ap + lap;
  } else {
    bad_stat(cls, s);
  }
  return v;
}

void enum_stirling(int k, int n, const Sink& sink) {
  double count = 1;
  for (int i = 1; i <= n; ++i) count *= k * (i - 1) + 1;
  if (count > 3e6) throw TooLarge("Stirling permutation oracle too large");
  std::vector<int> w;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      sink([&](const std::string& s) {
        return word_stat(w, s, "stirlingPermutation");
      });
      return;
    }
    int gaps = static_cast<int>(w.size()) + 1;
    for (int g = 0; g < gaps; ++g) {
      w.insert(w.begin() + g, static_cast<size_t>(k), next);
      self(self, next + 1);
      w.erase(w.begin() + g, w.begin() + g + k);
    }
  };
  rec(rec, 1);
}

// ---- multiset permutations --------------------------------------------------

void enum_multiset(const std::vector<int>& mult, const Sink& sink) {
  std::vector<int> w;
  for (size_t i = 0; i < mult.size(); ++i)
    w.insert(w.end(), static_cast<size_t>(mult[i]), static_cast<int>(i) + 1);
  if (w.size() > 12) throw TooLarge("multiset permutation oracle too large");
  std::sort(w.begin(), w.end());
  do {
    sink([&](const std::string& s) {
      return word_stat(w, s, "multisetPermutation");
    });
  } while (std::next_permutation(w.begin(), w.end()));
}

// ---- partitions of [n] into lists -------------------------------------------

void enum_list_partitions(int n, const Sink& sink) {
  if (n > 8) throw TooLarge("list partition oracle bounded at n <= 8");
  std::vector<std::vector<int>> lists;
  auto stats = [&](const std::string& s) {
    if (s == "lists") return static_cast<int>(lists.size());
    if (s == "asc") {
      // a leading 0 on every list makes its first entry an ascent
      int v = 0;
      for (const auto& l : lists) {
        ++v;
        for (size_t i = 0; i + 1 < l.size(); ++i) v += l[i] < l[i + 1];
      }
      return v;
    }
    bad_stat("listPartition", s);
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      sink(stats);
      return;
    }
    // lists stay ordered by their minimum (= creation element); index
    // access, since deeper recursion may reallocate the outer vector
    for (size_t li = 0; li < lists.size(); ++li) {
      for (size_t pos = 0; pos <= lists[li].size(); ++pos) {
        lists[li].insert(lists[li].begin() + static_cast<long>(pos), next);
        self(self, next + 1);
        lists[li].erase(lists[li].begin() + static_cast<long>(pos));
      }
    }
    lists.push_back({next});
    self(self, next + 1);
    lists.pop_back();
  };
  rec(rec, 1);
}

// ---- rooted labeled trees ----------------------------------------------------

void enum_rooted_trees(int n, const Sink& sink) {
  if (n > 7) throw TooLarge("rooted tree oracle bounded at n <= 7");
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
  std::vector<int> submin(static_cast<size_t>(n) + 1, 0);
  for (int root = 1; root <= n; ++root) {
    std::vector<int> nodes;
    for (int v = 1; v <= n; ++v)
      if (v != root) nodes.push_back(v);
    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == nodes.size()) {
        // acyclicity: every node must reach the root
        for (int v = 1; v <= n; ++v) {
          int steps = 0;
          int u = v;
          while (u != root && steps <= n) {
            u = parent[static_cast<size_t>(u)];
            ++steps;
          }
          if (u != root) return;
        }
        sink([&](const std::string& s) {
          if (s != "improper") bad_stat("rootedLabeledTree", s);
          for (int v = 1; v <= n; ++v) submin[static_cast<size_t>(v)] = v;
          // propagate subtree minima leafward-to-root by label-free
          // repetition (depth <= n)
          for (int pass = 0; pass < n; ++pass)
            for (int v = 1; v <= n; ++v)
              if (v != root) {
                int pu = parent[static_cast<size_t>(v)];
                submin[static_cast<size_t>(pu)] =
                    std::min(submin[static_cast<size_t>(pu)],
                             submin[static_cast<size_t>(v)]);
              }
          int count = 0;
          for (int v = 1; v <= n; ++v)
            if (v != root &&
                submin[static_cast<size_t>(v)] < parent[static_cast<size_t>(v)])
              ++count;
          return count;
        });
        return;
      }
      for (int par = 1; par <= n; ++par) {
        parent[static_cast<size_t>(nodes[idx])] = par;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
}

// ---- 0-1-2 increasing trees ---------------------------------------------------

void enum_inc_trees(int n, const Sink& sink) {
  if (n > 10) throw TooLarge("0-1-2 tree oracle bounded at n <= 10");
  std::vector<int> childcount(static_cast<size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      sink([&](const std::string& s) {
        int want = s == "leaves" ? 0 : s == "deg1" ? 1 : -1;
        if (want < 0) bad_stat("incTree012", s);
        int v = 0;
        for (int u = 1; u <= n; ++u)
          v += childcount[static_cast<size_t>(u)] == want;
        return v;
      });
      return;
    }
    for (int par = 1; par < next; ++par) {
      if (childcount[static_cast<size_t>(par)] >= 2) continue;
      ++childcount[static_cast<size_t>(par)];
      self(self, next + 1);
      --childcount[static_cast<size_t>(par)];
    }
  };
  if (n == 0) {
    sink([&](const std::string& s) {
      if (s != "leaves" && s != "deg1") bad_stat("incTree012", s);
      return 0;
    });
    return;
  }
  rec(rec, 2);
}

}  // namespace

Poly stat_poly(const std::string& cls, const std::vector<int>& params, int n,
               const std::vector<std::pair<std::string, VarId>>& stats) {
  Poly out;
  Sink sink = [&](const StatEval& eval) {
    Monomial m;
    for (const auto& [name, var] : stats)
      m.set_exponent(var, m.exponent(var) + eval(name));
    out.add_term(1, m);
  };
  if (cls == "permutation") {
    enum_permutations(n, sink);
  } else if (cls == "signedPermutation") {
    enum_signed(n, sink);
  } else if (cls == "stirlingPermutation") {
    if (params.size() != 1 || params[0] < 1)
      throw UnknownClass("stirlingPermutation needs a copy count k >= 1");
    enum_stirling(params[0], n, sink);
  } else if (cls == "multisetPermutation") {
    if (params.empty())
      throw UnknownClass("multisetPermutation needs multiplicities");
    enum_multiset(params, sink);
  } else if (cls == "listPartition") {
    enum_list_partitions(n, sink);
  } else if (cls == "rootedLabeledTree") {
    enum_rooted_trees(n, sink);
  } else if (cls == "incTree012") {
    enum_inc_trees(n, sink);
  } else {
    throw UnknownClass("unknown object class " + cls);
  }
  return out;
}

Int alternating_count(int n) {
  if (n == 0) return 1;
  if (n > 10) throw TooLarge("alternating count bounded at n <= 10");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  Int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) {
      bool up = p[static_cast<size_t>(i)] < p[static_cast<size_t>(i) + 1];
      if (up != (i % 2 == 0)) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace ytab
