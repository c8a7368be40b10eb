#include "pmech/superpoly.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pmech {

int Monomial::even_degree() const {
  int d = 0;
  for (auto e : even_exp) d += e;
  return d;
}

int Monomial::odd_degree() const { return std::popcount(odd_mask); }

int merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int swaps = 0;
  std::uint64_t rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    // each b-factor crosses every a-factor above it
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : +1;
}

SuperPolynomial SuperPolynomial::constant(VarTablePtr table, Complex value) {
  SuperPolynomial p(table);
  Monomial m;
  m.even_exp.assign(table->even_count(), 0);
  p.add_term(m, value);
  p.prune();
  return p;
}

SuperPolynomial SuperPolynomial::variable(VarTablePtr table, int var_index) {
  SuperPolynomial p(table);
  Monomial m;
  m.even_exp.assign(table->even_count(), 0);
  const auto& vi = table->info(var_index);
  if (vi.parity == VarParity::Even)
    m.even_exp[table->even_slot(var_index)] = 1;
  else
    m.odd_mask = std::uint64_t{1} << table->odd_slot(var_index);
  p.add_term(m, Complex{1.0, 0.0});
  return p;
}

SuperPolynomial SuperPolynomial::variable(VarTablePtr table, const std::string& name) {
  int idx = table->index_of(name);
  return variable(std::move(table), idx);
}

void SuperPolynomial::check_same_table(const SuperPolynomial& o) const {
  if (table_.get() == o.table_.get()) return;
  if (!table_->same_as(*o.table_))
    throw std::invalid_argument("variable table mismatch");
}

void SuperPolynomial::add_term(const Monomial& m, Complex c) {
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.emplace(m, c);
  else
    it->second += c;
}

void SuperPolynomial::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (std::abs(it->second) < threshold) ? terms_.erase(it) : std::next(it);
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& o) const {
  SuperPolynomial r = *this;
  r += o;
  return r;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& o) const {
  SuperPolynomial r = *this;
  r -= o;
  return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  prune();
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  prune();
  return *this;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& o) const {
  check_same_table(o);
  SuperPolynomial r(table_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      int sign = merge_sign(ma.odd_mask, mb.odd_mask);
      if (sign == 0) continue;
      Monomial m;
      m.even_exp.resize(ma.even_exp.size());
      for (size_t i = 0; i < ma.even_exp.size(); ++i)
        m.even_exp[i] = static_cast<std::uint8_t>(ma.even_exp[i] + mb.even_exp[i]);
      m.odd_mask = ma.odd_mask | mb.odd_mask;
      r.add_term(m, ca * cb * static_cast<double>(sign));
    }
  }
  r.prune();
  return r;
}

SuperPolynomial SuperPolynomial::operator*(Complex c) const {
  SuperPolynomial r(table_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  r.prune();
  return r;
}

SuperPolynomial SuperPolynomial::derivative(int var_index, bool left) const {
  if (var_index < 0 || var_index >= table_->size())
    throw std::invalid_argument("unknown variable index in derivative");
  const auto& vi = table_->info(var_index);
  SuperPolynomial r(table_);
  if (vi.parity == VarParity::Even) {
    int slot = table_->even_slot(var_index);
    for (const auto& [m, c] : terms_) {
      int e = m.even_exp[slot];
      if (e == 0) continue;
      Monomial d = m;
      d.even_exp[slot] = static_cast<std::uint8_t>(e - 1);
      r.add_term(d, c * static_cast<double>(e));
    }
  } else {
    std::uint64_t bit = std::uint64_t{1} << table_->odd_slot(var_index);
    for (const auto& [m, c] : terms_) {
      if (!(m.odd_mask & bit)) continue;
      // commute the factor to the requested end; each crossing flips the sign
      std::uint64_t crossed = left ? (m.odd_mask & (bit - 1)) : (m.odd_mask & ~((bit << 1) - 1));
      int sign = (std::popcount(crossed) & 1) ? -1 : +1;
      Monomial d = m;
      d.odd_mask = m.odd_mask ^ bit;
      r.add_term(d, c * static_cast<double>(sign));
    }
  }
  r.prune();
  return r;
}

SuperPolynomial SuperPolynomial::derivative_left(int var_index) const {
  return derivative(var_index, true);
}

SuperPolynomial SuperPolynomial::derivative_right(int var_index) const {
  return derivative(var_index, false);
}

ParityClass SuperPolynomial::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [m, c] : terms_) {
    (void)c;
    (m.odd_degree() & 1 ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return ParityClass::Mixed;
  if (has_odd) return ParityClass::Odd;
  return ParityClass::Even;  // zero polynomial counts as even
}

SuperPolynomial SuperPolynomial::even_part() const {
  SuperPolynomial r(table_);
  for (const auto& [m, c] : terms_)
    if ((m.odd_degree() & 1) == 0) r.terms_.emplace(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::odd_part() const {
  SuperPolynomial r(table_);
  for (const auto& [m, c] : terms_)
    if (m.odd_degree() & 1) r.terms_.emplace(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::odd_sector_part() const {
  SuperPolynomial r(table_);
  for (const auto& [m, c] : terms_)
    if (m.odd_mask != 0) r.terms_.emplace(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::even_sector_part() const {
  SuperPolynomial r(table_);
  for (const auto& [m, c] : terms_)
    if (m.odd_mask == 0) r.terms_.emplace(m, c);
  return r;
}

double SuperPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) {
    (void)mono;
    m = std::max(m, std::abs(c));
  }
  return m;
}

Complex SuperPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

int SuperPolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, m.total_degree());
  }
  return d;
}

ParityClass parity_of(const SuperPolynomial& f) { return f.parity(); }

std::vector<SuperPolynomial> monomial_basis(const VarTablePtr& table, int max_degree) {
  std::vector<SuperPolynomial> basis;
  const int ne = table->even_count();
  const int no = table->odd_count();
  std::vector<std::uint8_t> exps(ne, 0);
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == ne) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask) {
        if (std::popcount(mask) > remaining) continue;
        Monomial m;
        m.even_exp = exps;
        m.odd_mask = mask;
        SuperPolynomial p = SuperPolynomial::zero(table);
        p.add_term(m, Complex{1.0, 0.0});
        basis.push_back(std::move(p));
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[slot] = static_cast<std::uint8_t>(e);
      rec(slot + 1, remaining - e);
    }
    exps[slot] = 0;
  };
  rec(0, max_degree);
  return basis;
}

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

std::string format_complex(Complex c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return format_double(re);
  std::string imag = (im == 1.0) ? "i" : (im == -1.0) ? "-i" : format_double(im) + "*i";
  if (re == 0.0) return imag;
  std::string abs_imag = (std::abs(im) == 1.0) ? "i" : format_double(std::abs(im)) + "*i";
  return "(" + format_double(re) + (im < 0 ? "-" : "+") + abs_imag + ")";
}

std::string SuperPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> factors;
    for (size_t slot = 0; slot < m.even_exp.size(); ++slot) {
      if (m.even_exp[slot] == 0) continue;
      std::string f = table_->name(table_->even_var(static_cast<int>(slot)));
      if (m.even_exp[slot] > 1) f += "^" + std::to_string(int(m.even_exp[slot]));
      factors.push_back(f);
    }
    std::uint64_t mask = m.odd_mask;
    while (mask) {
      int slot = std::countr_zero(mask);
      mask &= mask - 1;
      factors.push_back(table_->name(table_->odd_var(slot)));
    }
    Complex coeff = c;
    std::string sep;
    if (!first) {
      const bool negative_real = coeff.imag() == 0.0 && coeff.real() < 0;
      const bool negative_imag = coeff.real() == 0.0 && coeff.imag() < 0;
      if (negative_real || negative_imag) {
        sep = " - ";
        coeff = -coeff;
      } else {
        sep = " + ";
      }
    }
    os << sep;
    std::string cs = format_complex(coeff);
    if (factors.empty()) {
      os << cs;
    } else {
      bool unit = (cs == "1");
      bool neg_unit = (cs == "-1");
      if (neg_unit) os << "-";
      if (!unit && !neg_unit) os << cs << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace pmech
