#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace efpoly {

/// One coordinate: a class label ("x", "w", "z", ...) plus a tuple index.
struct Variable {
  std::string cls;
  std::vector<unsigned> index;

  /// e.g. "z[3,1,2]"; a 1-tuple prints as "x[4]".
  std::string name() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered list of distinct variables. Class labels partition the coordinates
/// into classes of variables; two spaces with no label in common are
/// independent spaces.
class VarSpace {
 public:
  VarSpace() = default;
  explicit VarSpace(std::vector<Variable> vars);

  /// count variables of one class with indices (1), (2), ..., (count).
  static VarSpace of_class(const std::string& cls, std::size_t count);

  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  /// Class labels in order of first appearance.
  std::vector<std::string> classes() const;
  bool has_class(const std::string& cls) const;
  std::size_t class_size(const std::string& cls) const;

  std::optional<std::size_t> position_of(const Variable& v) const;
  /// Positions (ascending) of every variable whose class is listed.
  std::vector<std::size_t> positions_of_classes(const std::vector<std::string>& classes) const;

  /// Concatenation; throws PreconditionViolation on a repeated variable.
  VarSpace concat(const VarSpace& other) const;
  VarSpace subspace(const std::vector<std::size_t>& positions) const;
  /// Every variable of this space appears in other.
  bool is_subset_of(const VarSpace& other) const;

  friend bool operator==(const VarSpace& a, const VarSpace& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::map<Variable, std::size_t> lookup_;
};

/// True iff the two spaces have at least one class label in common.
bool share_class(const VarSpace& a, const VarSpace& b);

/// Variables of a followed by the variables of b that are not in a.
VarSpace union_space(const VarSpace& a, const VarSpace& b);

}  // namespace efpoly
