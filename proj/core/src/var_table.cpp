#include "weave/var_table.hpp"

#include <algorithm>
#include <set>

#include "weave/errors.hpp"

namespace weave {

VarTablePtr VarTable::bihomogeneous(int n) {
  if (n < 1) throw UsageError("ambient dimension must be positive");
  std::vector<std::string> names;
  std::vector<VarGroup> groups;
  for (int i = 0; i <= n; ++i) {
    names.push_back("X" + std::to_string(i));
    groups.push_back(VarGroup::X);
  }
  for (int i = 0; i <= n; ++i) {
    names.push_back("u" + std::to_string(i));
    groups.push_back(VarGroup::U);
  }
  return make(n, std::move(names), std::move(groups));
}

VarTablePtr VarTable::chart(int n) {
  if (n < 1) throw UsageError("ambient dimension must be positive");
  std::vector<std::string> names;
  std::vector<VarGroup> groups;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    groups.push_back(VarGroup::ChartX);
  }
  for (int i = 1; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    groups.push_back(VarGroup::ChartP);
  }
  return make(n, std::move(names), std::move(groups));
}

VarTablePtr VarTable::generic(std::vector<std::string> names) {
  std::vector<VarGroup> groups(names.size(), VarGroup::Generic);
  const int n = static_cast<int>(names.size());
  return make(n, std::move(names), std::move(groups));
}

VarTablePtr VarTable::make(int n, std::vector<std::string> names,
                           std::vector<VarGroup> groups) {
  if (names.size() != groups.size()) throw UsageError("names/groups length mismatch");
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty() || !seen.insert(s).second) {
      throw UsageError("variable names must be unique and nonempty: '" + s + "'");
    }
  }
  // Each group must occupy one contiguous run.
  std::set<VarGroup> closed;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (closed.count(groups[i])) throw UsageError("variable groups must be contiguous");
    if (i + 1 < groups.size() && groups[i + 1] != groups[i]) closed.insert(groups[i]);
  }
  return VarTablePtr(new VarTable(n, std::move(names), std::move(groups)));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UsageError("unknown variable '" + std::string(name) + "'");
  return *i;
}

std::vector<std::size_t> VarTable::members(VarGroup g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i] == g) out.push_back(i);
  }
  return out;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace weave
