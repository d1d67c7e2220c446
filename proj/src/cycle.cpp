#include "jacring/cycle.hpp"

#include <stdexcept>

namespace jacring {

void Cycle::add(const BasisKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  if (key.m < 0 || key.m > admissible_top(genus_, key.index)) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational Cycle::coeff(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Cycle& Cycle::operator+=(const Cycle& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
  for (const auto& [key, c] : other.terms_) add(key, Rational(-c));
  return *this;
}

Cycle& Cycle::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

Cycle make_basis(int g, const AdmissibleSet& a, const MultiIndex& index, int m) {
  Cycle out(g);
  if (a.contains(index)) out.add(BasisKey{index, m}, Rational(1));
  return out;
}

Cycle theta_power(int g, int k) {
  Cycle out(g);
  if (k >= 0 && k <= g) out.add(BasisKey{MultiIndex{}, g - k}, Rational(1));
  return out;
}

Cycle fourier(const Cycle& c) {
  Cycle out(c.genus());
  for (const auto& [key, coeff] : c.terms()) {
    const int top = admissible_top(c.genus(), key.index);
    const Rational sign((key.m % 2 == 0) ? 1 : -1);
    out.add(BasisKey{key.index, top - key.m}, sign * coeff);
  }
  return out;
}

namespace {

Cycle scale_by_power(long n, const Cycle& c, bool pullback) {
  Cycle out(c.genus());
  for (const auto& [key, coeff] : c.terms()) {
    const long push = 2L * key.index.d() + 2L * key.m + key.index.s();
    const long e = pullback ? 2L * c.genus() - push : push;
    out.add(key, Rational(ipow(n, e)) * coeff);
  }
  return out;
}

}  // namespace

Cycle mult_pushforward(long n, const Cycle& c) {
  return scale_by_power(n, c, /*pullback=*/false);
}

Cycle mult_pullback(long n, const Cycle& c) {
  return scale_by_power(n, c, /*pullback=*/true);
}

Cycle star_gamma(int k, const Cycle& c) {
  if (k < 0) throw std::invalid_argument("star_gamma requires k >= 0");
  Cycle out(c.genus());
  for (const auto& [key, coeff] : c.terms())
    out.add(BasisKey{key.index, key.m + k}, binomial(key.m + k, key.m) * coeff);
  return out;
}

Cycle dot_theta(int h, const Cycle& c) {
  if (h < 0) throw std::invalid_argument("dot_theta requires h >= 0");
  Cycle out(c.genus());
  for (const auto& [key, coeff] : c.terms()) {
    if (key.m - h < 0) continue;
    const long top = admissible_top(c.genus(), key.index);
    out.add(BasisKey{key.index, key.m - h}, binomial(top - key.m + h, h) * coeff);
  }
  return out;
}

std::vector<std::pair<int, Cycle>> beauville_components(const Cycle& c) {
  std::map<int, Cycle> parts;
  for (const auto& [key, coeff] : c.terms()) {
    auto [it, _] = parts.try_emplace(key.degree(), Cycle(c.genus()));
    it->second.add(key, coeff);
  }
  return {parts.begin(), parts.end()};
}

bool is_bihomogeneous(const Cycle& c) {
  if (c.is_zero()) return true;
  const BasisKey& first = c.terms().begin()->first;
  for (const auto& [key, _] : c.terms())
    if (key.dimension() != first.dimension() || key.degree() != first.degree())
      return false;
  return true;
}

}  // namespace jacring
