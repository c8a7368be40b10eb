#include "pmech/vartable.hpp"

#include <set>
#include <stdexcept>

namespace pmech {

std::shared_ptr<const VarTable> VarTable::make(const std::vector<PairDecl>& pairs) {
  auto table = std::shared_ptr<VarTable>(new VarTable());
  std::set<std::string> seen;
  for (const auto& pd : pairs) {
    if (pd.coordinate == pd.momentum || seen.count(pd.coordinate) || seen.count(pd.momentum))
      throw std::invalid_argument("variable names must be unique: " + pd.coordinate + "/" + pd.momentum);
    seen.insert(pd.coordinate);
    seen.insert(pd.momentum);
    int ci = static_cast<int>(table->vars_.size());
    int mi = ci + 1;
    table->vars_.push_back({pd.coordinate, pd.parity, VarRole::Coordinate, mi});
    table->vars_.push_back({pd.momentum, pd.parity, VarRole::Momentum, ci});
    table->pairs_.push_back({ci, mi, pd.parity});
  }
  table->slot_.resize(table->vars_.size());
  for (int i = 0; i < table->size(); ++i) {
    if (table->vars_[i].parity == VarParity::Even) {
      table->slot_[i] = static_cast<int>(table->even_vars_.size());
      table->even_vars_.push_back(i);
    } else {
      table->slot_[i] = static_cast<int>(table->odd_vars_.size());
      table->odd_vars_.push_back(i);
    }
  }
  if (table->odd_count() > 63)
    throw std::invalid_argument("at most 63 odd variables supported");
  return table;
}

int VarTable::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i].name == name) return i;
  return -1;
}

int VarTable::index_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown variable: " + name);
  return i;
}

bool VarTable::same_as(const VarTable& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size()) return false;
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.parity != b.parity || a.role != b.role || a.partner != b.partner)
      return false;
  }
  return true;
}

}  // namespace pmech
