#ifndef PMECH_VARTABLE_HPP
#define PMECH_VARTABLE_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace pmech {

using Complex = std::complex<double>;

enum class VarParity { Even, Odd };
enum class VarRole { Coordinate, Momentum };

/// Parity classification of a phase-space function.
enum class ParityClass { Even, Odd, Mixed };

struct VarInfo {
  std::string name;
  VarParity parity;
  VarRole role;
  int partner;  // index of the conjugate variable
};

/// Declares the phase-space variables: their parity and coordinate/momentum
/// pairing. The declaration order of the odd variables fixes the global
/// ordering used for canonical monomial form.
class VarTable {
public:
  struct PairDecl {
    std::string coordinate;
    std::string momentum;
    VarParity parity;
  };
  struct CanonicalPair {
    int coordinate;
    int momentum;
    VarParity parity;
  };

  static std::shared_ptr<const VarTable> make(const std::vector<PairDecl>& pairs);

  int size() const { return static_cast<int>(vars_.size()); }
  const VarInfo& info(int index) const { return vars_.at(index); }
  const std::string& name(int index) const { return vars_.at(index).name; }

  /// Index of a declared variable, -1 if absent.
  int find(const std::string& name) const;
  /// Index of a declared variable; throws on unknown names.
  int index_of(const std::string& name) const;

  int even_count() const { return static_cast<int>(even_vars_.size()); }
  int odd_count() const { return static_cast<int>(odd_vars_.size()); }

  /// Slot of an even (odd) variable among the even (odd) variables.
  int even_slot(int var_index) const { return slot_.at(var_index); }
  int odd_slot(int var_index) const { return slot_.at(var_index); }
  int even_var(int slot) const { return even_vars_.at(slot); }
  int odd_var(int slot) const { return odd_vars_.at(slot); }

  const std::vector<CanonicalPair>& pairs() const { return pairs_; }

  bool same_as(const VarTable& other) const;

private:
  VarTable() = default;
  std::vector<VarInfo> vars_;
  std::vector<int> even_vars_;
  std::vector<int> odd_vars_;
  std::vector<int> slot_;  // per variable: its slot among same-parity variables
  std::vector<CanonicalPair> pairs_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace pmech

#endif
