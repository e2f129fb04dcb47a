#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weave {

/// Variable groups. X/U are the homogeneous point and hyperplane coordinates;
/// ChartX/ChartP the affine contact coordinates (x_1..x_n, p_1..p_{n-1}).
enum class VarGroup { X, U, ChartX, ChartP, Generic };

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered, named variables partitioned into contiguous groups.
class VarTable {
 public:
  /// X0..Xn, u0..un.
  static VarTablePtr bihomogeneous(int n);
  /// x1..xn, p1..p_{n-1}.
  static VarTablePtr chart(int n);
  /// Free-form names, all in VarGroup::Generic.
  static VarTablePtr generic(std::vector<std::string> names);
  /// Explicit groups; throws UsageError unless groups are contiguous and names unique.
  static VarTablePtr make(int n, std::vector<std::string> names,
                          std::vector<VarGroup> groups);

  int n() const { return n_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarGroup group(std::size_t i) const { return groups_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but throws UsageError for unknown names.
  std::size_t index(std::string_view name) const;
  /// Indices of the variables of one group, in table order.
  std::vector<std::size_t> members(VarGroup g) const;

  bool operator==(const VarTable& other) const {
    return n_ == other.n_ && names_ == other.names_ && groups_ == other.groups_;
  }

 private:
  VarTable(int n, std::vector<std::string> names, std::vector<VarGroup> groups)
      : n_(n), names_(std::move(names)), groups_(std::move(groups)) {}

  int n_;
  std::vector<std::string> names_;
  std::vector<VarGroup> groups_;
};

/// True when both pointers denote structurally equal tables.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace weave
