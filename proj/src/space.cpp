#include "efpoly/space.hpp"

#include <algorithm>
#include <set>

#include "efpoly/errors.hpp"

namespace efpoly {

std::string Variable::name() const {
  std::string out = cls + "[";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(index[i]);
  }
  return out + "]";
}

VarSpace::VarSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].cls.empty()) throw PreconditionViolation("VarSpace: empty class label");
    auto [it, inserted] = lookup_.emplace(vars_[i], i);
    if (!inserted) throw PreconditionViolation("VarSpace: duplicate variable " + vars_[i].name());
  }
}

VarSpace VarSpace::of_class(const std::string& cls, std::size_t count) {
  std::vector<Variable> vars;
  vars.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) vars.push_back({cls, {static_cast<unsigned>(i)}});
  return VarSpace(std::move(vars));
}

std::vector<std::string> VarSpace::classes() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (std::find(out.begin(), out.end(), v.cls) == out.end()) out.push_back(v.cls);
  return out;
}

bool VarSpace::has_class(const std::string& cls) const {
  return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.cls == cls; });
}

std::size_t VarSpace::class_size(const std::string& cls) const {
  return static_cast<std::size_t>(
      std::count_if(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.cls == cls; }));
}

std::optional<std::size_t> VarSpace::position_of(const Variable& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> VarSpace::positions_of_classes(
    const std::vector<std::string>& classes) const {
  std::set<std::string> wanted(classes.begin(), classes.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (wanted.count(vars_[i].cls)) out.push_back(i);
  return out;
}

VarSpace VarSpace::concat(const VarSpace& other) const {
  std::vector<Variable> vars = vars_;
  vars.insert(vars.end(), other.vars_.begin(), other.vars_.end());
  return VarSpace(std::move(vars));
}

VarSpace VarSpace::subspace(const std::vector<std::size_t>& positions) const {
  std::vector<Variable> vars;
  vars.reserve(positions.size());
  for (auto p : positions) vars.push_back(vars_.at(p));
  return VarSpace(std::move(vars));
}

bool VarSpace::is_subset_of(const VarSpace& other) const {
  return std::all_of(vars_.begin(), vars_.end(),
                     [&](const Variable& v) { return other.position_of(v).has_value(); });
}

bool share_class(const VarSpace& a, const VarSpace& b) {
  for (const auto& c : a.classes())
    if (b.has_class(c)) return true;
  return false;
}

VarSpace union_space(const VarSpace& a, const VarSpace& b) {
  std::vector<Variable> vars = a.variables();
  for (const auto& v : b.variables())
    if (!a.position_of(v)) vars.push_back(v);
  return VarSpace(std::move(vars));
}

}  // namespace efpoly
