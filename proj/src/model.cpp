#include "jacring/model.hpp"

#include <stdexcept>

namespace jacring {

PairKey make_pair_key(const MultiIndex& i, const MultiIndex& j) {
  return i <= j ? PairKey{i, j} : PairKey{j, i};
}

Cycle Model::basis(const MultiIndex& index, int m) const {
  auto sub = substitutions.find(index);
  if (sub != substitutions.end()) return star_gamma(m, sub->second);
  return make_basis(genus(), admissible, index, m);
}

Cycle Model::normalize(const Cycle& c) const {
  if (substitutions.empty()) return c;
  Cycle out(genus());
  for (const auto& [key, coeff] : c.terms()) {
    auto sub = substitutions.find(key.index);
    if (sub == substitutions.end())
      out.add(key, coeff);
    else
      out += coeff * star_gamma(key.m, sub->second);
  }
  return out;
}

Cycle Model::basic_product(const MultiIndex& i, const MultiIndex& j) const {
  if (i.empty()) return basis(j, 0);
  if (j.empty()) return basis(i, 0);
  auto it = basics.find(make_pair_key(i, j));
  return it == basics.end() ? zero() : it->second;
}

std::vector<BasisKey> Model::basis_keys() const {
  std::vector<BasisKey> keys;
  for (const MultiIndex& index : admissible.indexes)
    for (int m = 0; m <= admissible_top(genus(), index); ++m)
      keys.push_back(BasisKey{index, m});
  return keys;
}

Cycle pontryagin(const Model& model, const Cycle& x, const Cycle& y) {
  const Cycle xn = model.normalize(x);
  const Cycle yn = model.normalize(y);
  Cycle out = model.zero();
  for (const auto& [kx, cx] : xn.terms())
    for (const auto& [ky, cy] : yn.terms()) {
      const int m = kx.m, h = ky.m;
      const Cycle base = model.basic_product(kx.index, ky.index);
      out += (cx * cy * binomial(m + h, m)) * star_gamma(m + h, base);
    }
  return out;
}

Cycle intersect(const Model& model, const Cycle& x, const Cycle& y) {
  Cycle out = model.zero();
  for (const auto& [sx, xc] : beauville_components(model.normalize(x)))
    for (const auto& [sy, yc] : beauville_components(model.normalize(y))) {
      const Rational sign(((sx + sy) % 2 == 0) ? 1 : -1);
      out += sign * fourier(pontryagin(model, fourier(xc), fourier(yc)));
    }
  return out;
}

AssociativityReport check_associativity(const Model& model) {
  AssociativityReport report;
  std::vector<MultiIndex> gens;
  for (const MultiIndex& index : model.admissible.indexes)
    if (!index.empty()) gens.push_back(index);
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a; b < gens.size(); ++b)
      for (size_t c = b; c < gens.size(); ++c) {
        // For an unordered triple the distinct bracketings are (xy)z, (xz)y
        // and (yz)x; commutativity of the table makes other orders equal.
        const Cycle bx = model.basis(gens[a], 0);
        const Cycle by = model.basis(gens[b], 0);
        const Cycle bz = model.basis(gens[c], 0);
        const Cycle xy_z = pontryagin(model, pontryagin(model, bx, by), bz);
        const Cycle xz_y = pontryagin(model, pontryagin(model, bx, bz), by);
        const Cycle yz_x = pontryagin(model, pontryagin(model, by, bz), bx);
        ++report.triples_checked;
        if (xy_z != yz_x)
          report.failures.push_back({gens[a], gens[b], gens[c], xy_z, yz_x});
        else if (xy_z != xz_y)
          report.failures.push_back({gens[a], gens[b], gens[c], xy_z, xz_y});
      }
  return report;
}

int dimension(const Model& model) {
  int dim = 0;
  for (const MultiIndex& index : model.admissible.indexes)
    dim += std::max(0, admissible_top(model.genus(), index) + 1);
  return dim;
}

Cycle omega(const Model& model, const Cycle& w, int k, int t) {
  const Cycle wn = model.normalize(w);
  if (!is_bihomogeneous(wn))
    throw std::invalid_argument("omega requires a bihomogeneous cycle");
  Cycle out = model.zero();
  if (wn.is_zero()) return out;
  const int d = wn.terms().begin()->first.dimension();
  const int s = wn.terms().begin()->first.degree();
  const int g = model.genus();
  for (int j = 0; j <= d; ++j) {
    const int e = s + 2 * d - j - t - k;
    if (e < 0) continue;  // Theta^e/e! = 0 for negative exponents
    Cycle term = intersect(model, wn, theta_power(g, j));
    term = pontryagin(model, term, theta_power(g, e));
    term = intersect(model, term, theta_power(g, t));
    const Rational sign(((k + t + j) % 2 + 2) % 2 == 0 ? 1 : -1);
    out += sign * term;
  }
  return out;
}

Cycle rho(const Model& model, int h, const Cycle& c) {
  if (h < 0) throw std::invalid_argument("rho requires h >= 0");
  const Rational scale(factorial(h) * factorial(h));
  Cycle gamma_h = model.zero();
  gamma_h.add(BasisKey{MultiIndex{}, h}, Rational(1));
  return scale * pontryagin(model, intersect(model, c, theta_power(model.genus(), h)),
                            gamma_h);
}

}  // namespace jacring
