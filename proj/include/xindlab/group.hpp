#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xindlab/error.hpp"

namespace xindlab {

// Finite group given by an explicit multiplication table. Elements are
// identified by index; labels exist for I/O only. Immutable after
// construction, safe to share across threads.
class FiniteGroup {
 public:
  static constexpr int max_order = 24;

  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table) {
    return FiniteGroup(std::move(labels), std::move(table));
  }

  // Additive cyclic group of order n, labels "0".."n-1".
  static FiniteGroup cyclic(int n) {
    if (n < 1) raise(Err::BadParameters, "cyclic group order must be >= 1");
    if (n > max_order) raise(Err::TooLarge, "group order above " + std::to_string(max_order));
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      labels[i] = std::to_string(i);
      for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(labels), std::move(table));
  }

  // Permutations of {1..n} under composition; labels are one-line strings,
  // identity first. table[a][b] = a∘b (b applied first).
  static FiniteGroup symmetric(int n) {
    if (n < 1 || n > 4) raise(Err::UnsupportedSize, "symmetric group supported for 1 <= n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const int m = static_cast<int>(perms.size());
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < n; ++i) labels[a] += std::to_string(perms[a][i] + 1);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<int> comp(n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
        table[a][b] = static_cast<int>(
            std::find(perms.begin(), perms.end(), comp) - perms.begin());
      }
    }
    return FiniteGroup(std::move(labels), std::move(table));
  }

  // Built-in names for CLI flags and files: "Z1".."Z24", "S1".."S4".
  static std::optional<FiniteGroup> by_name(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      k = k * 10 + (name[i] - '0');
    }
    if (name[0] == 'Z' && k >= 1 && k <= max_order) return cyclic(k);
    if (name[0] == 'S' && k >= 1 && k <= 4) return symmetric(k);
    return std::nullopt;
  }

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }

  int mul(int a, int b) const {
    check_index(a);
    check_index(b);
    return table_[a][b];
  }

  int inv(int a) const {
    check_index(a);
    return inverse_[a];
  }

  const std::string& label(int a) const {
    check_index(a);
    return labels_[a];
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::optional<int> index_of(std::string_view label) const {
    for (int i = 0; i < order(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  bool operator==(const FiniteGroup& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

 private:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) raise(Err::SizeMismatch, "empty label list");
    if (n > max_order) raise(Err::TooLarge, "group order above " + std::to_string(max_order));
    if (static_cast<int>(table_.size()) != n)
      raise(Err::SizeMismatch, "table has " + std::to_string(table_.size()) +
                                   " rows for " + std::to_string(n) + " labels");
    for (const auto& row : table_)
      if (static_cast<int>(row.size()) != n) raise(Err::SizeMismatch, "table is not square");
    {
      auto sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(Err::NotAGroup, "element labels are not distinct");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (table_[i][j] < 0 || table_[i][j] >= n)
          raise(Err::NotAGroup, "table entry out of range at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    // Latin square: rows and columns are permutations.
    for (int i = 0; i < n; ++i) {
      std::vector<bool> row(n, false), col(n, false);
      for (int j = 0; j < n; ++j) {
        if (row[table_[i][j]])
          raise(Err::NotAGroup, "row " + labels_[i] + " repeats a product (not a Latin square)");
        row[table_[i][j]] = true;
        if (col[table_[j][i]])
          raise(Err::NotAGroup, "column " + labels_[i] + " repeats a product (not a Latin square)");
        col[table_[j][i]] = true;
      }
    }
    identity_ = -1;
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) ok = table_[i][j] == j && table_[j][i] == j;
      if (ok) {
        identity_ = i;
        break;
      }
    }
    if (identity_ < 0) raise(Err::NotAGroup, "no two-sided identity element");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            raise(Err::NotAGroup, "associativity fails at (" + labels_[a] + "," +
                                      labels_[b] + "," + labels_[c] + ")");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      if (inverse_[a] < 0)
        raise(Err::NotAGroup, "element " + labels_[a] + " has no two-sided inverse");
    }
  }

  void check_index(int a) const {
    if (a < 0 || a >= order())
      raise(Err::IndexOutOfRange, "group element index " + std::to_string(a));
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace xindlab
