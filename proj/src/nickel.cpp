#include "nilrep/nickel.hpp"

#include <algorithm>

namespace nilrep {

std::optional<size_t> ModuleBasis::position_of_lm(const Monomial& m) const {
  auto it = by_lm_.find(m);
  if (it == by_lm_.end()) return std::nullopt;
  return it->second;
}

Polynomial ModuleBasis::reduce(Polynomial f) const {
  // positions run in decreasing leading-monomial order already
  for (size_t pos = 0; pos < polys_.size() && !f.is_zero(); ++pos) {
    const Monomial& lm = lms_[pos];
    Rat c = f.coeff(lm);
    if (c == 0) continue;
    f.add_scaled(polys_[pos], -c / polys_[pos].coeff(lm));
  }
  return f;
}

namespace {

// Clears denominators, divides by the integer content, and makes the
// leading coefficient positive.
Polynomial normalize_primitive(Polynomial f, const MonomialOrder& ord) {
  Int den(1);
  for (auto& [m, c] : f.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Int content(0);
  for (auto& [m, c] : f.terms()) {
    Int num = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rat scale = Rat(den, content);
  scale.canonicalize();
  if (f.leading_coeff(ord) < 0) scale = -scale;
  return f.scaled(scale);
}

}  // namespace

Polynomial ModuleBasis::insert(Polynomial f) {
  f = reduce(std::move(f));
  if (f.is_zero()) return f;
  f = normalize_primitive(std::move(f), order_);
  Monomial lm = f.leading_monomial(order_);
  size_t pos = 0;
  while (pos < polys_.size() && order_.greater(lms_[pos], lm)) ++pos;
  polys_.insert(polys_.begin() + static_cast<long>(pos), f);
  lms_.insert(lms_.begin() + static_cast<long>(pos), lm);
  by_lm_.clear();
  for (size_t t = 0; t < polys_.size(); ++t) by_lm_[lms_[t]] = t;
  return f;
}

std::vector<Rat> ModuleBasis::coordinates(Polynomial f) const {
  std::vector<Rat> row(polys_.size(), Rat(0));
  while (!f.is_zero()) {
    Monomial lm = f.leading_monomial(order_);
    auto pos = position_of_lm(lm);
    if (!pos)
      throw VerificationError("polynomial is not in the span of the basis");
    Rat c = f.coeff(lm) / polys_[*pos].coeff(lm);
    row[*pos] += c;
    f.add_scaled(polys_[*pos], -c);
  }
  return row;
}

std::vector<Polynomial> coordinate_seeds(const PolycyclicPresentation& p) {
  std::vector<Polynomial> seeds;
  seeds.reserve(static_cast<size_t>(p.generators()));
  for (int i = 1; i <= p.generators(); ++i)
    seeds.push_back(Polynomial::variable(i));
  return seeds;
}

namespace {

size_t default_dimension_bound(const PolycyclicPresentation& p) {
  // safety bound 2 k^c on the dimension, with a floor of n + 2
  size_t k = static_cast<size_t>(std::max(p.weight_one_generators(), 1));
  size_t c = static_cast<size_t>(p.nilpotency_class());
  size_t bound = 2;
  for (size_t t = 0; t < c; ++t) {
    if (bound > 2'000'000'000 / std::max<size_t>(k, 1)) return 2'000'000'000;
    bound *= k;
  }
  return std::max(bound, static_cast<size_t>(p.generators()) + 2);
}

std::map<int, Polynomial> action_substitution(const RestrictedMultPolys& rmp, int j) {
  std::map<int, Polynomial> sigma;
  for (int i = 1; i <= rmp.n; ++i) {
    const Polynomial& qi = rmp.poly(i, j);
    if (qi == Polynomial::variable(i)) continue;  // untouched variables
    sigma[i] = qi;
  }
  return sigma;
}

}  // namespace

ModuleBasis closure(const PolycyclicPresentation& p, const RestrictedMultPolys& rmp,
                    std::vector<Polynomial> seeds, ClosureOptions opts) {
  std::vector<int> weights = p.weights();
  ModuleBasis basis{MonomialOrder(weights)};
  size_t max_dim = opts.max_dim ? opts.max_dim : default_dimension_bound(p);

  if (seeds.empty()) seeds = coordinate_seeds(p);
  for (Polynomial& f : seeds) basis.insert(std::move(f));

  std::vector<std::map<int, Polynomial>> sigma;
  std::vector<Polynomial::PowerCache> caches(static_cast<size_t>(rmp.n));
  sigma.reserve(static_cast<size_t>(rmp.n));
  for (int j = 1; j <= rmp.n; ++j) sigma.push_back(action_substitution(rmp, j));

  auto act = [&](const Polynomial& f, int j) {
    return f.substitute(sigma[static_cast<size_t>(j - 1)],
                        &caches[static_cast<size_t>(j - 1)]);
  };

  bool closed = false;
  while (!closed) {
    for (int j = p.generators(); j >= 1; --j) {
      std::vector<Polynomial> snapshot = basis.polys();
      for (const Polynomial& start : snapshot) {
        Polynomial f = start;
        while (true) {
          f = act(f, j);
          Polynomial r = basis.insert(f);
          if (basis.size() > max_dim)
            throw NonTerminatingError("module basis exceeded the dimension bound");
          if (r.is_zero()) break;
        }
      }
    }
    // verification sweep: every image must reduce to zero
    closed = true;
    for (int j = p.generators(); j >= 1 && closed; --j) {
      std::vector<Polynomial> snapshot = basis.polys();
      for (const Polynomial& f : snapshot) {
        if (!basis.insert(act(f, j)).is_zero()) {
          closed = false;
          break;
        }
      }
    }
  }
  return basis;
}

MatrixRepresentation extract_matrices(const PolycyclicPresentation& p,
                                      const ModuleBasis& basis,
                                      const RestrictedMultPolys& rmp) {
  MatrixRepresentation rep;
  rep.method = "nickel";
  rep.dimension = static_cast<int>(basis.size());
  rep.generator_names = p.names();
  const MonomialOrder& ord = basis.order();
  for (const Polynomial& f : basis.polys()) rep.basis.push_back(f.str(&ord));

  for (int j = 1; j <= p.generators(); ++j) {
    std::map<int, Polynomial> sigma = action_substitution(rmp, j);
    Polynomial::PowerCache cache;
    IntMatrix mat(rep.dimension);
    for (size_t row = 0; row < basis.size(); ++row) {
      std::vector<Rat> coords =
          basis.coordinates(basis.poly(row).substitute(sigma, &cache));
      for (size_t col = 0; col < coords.size(); ++col) {
        const Rat& c = coords[col];
        if (c == 0) continue;
        if (col < row)
          throw NonTriangularError("action hit an earlier basis position");
        if (col == row && c != 1)
          throw NonTriangularError("diagonal action coefficient is not one");
        if (!is_integer(c))
          throw NonIntegralEntryError("matrix entry " + c.get_str() +
                                      " is not an integer");
        mat.at(static_cast<int>(row), static_cast<int>(col)) = c.get_num();
      }
    }
    rep.generators.push_back(std::move(mat));
  }
  return rep;
}

size_t nickel_dimension(const PolycyclicPresentation& p) {
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  return closure(p, rmp).size();
}

MatrixRepresentation nickel_matrices(const PolycyclicPresentation& p) {
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  ModuleBasis basis = closure(p, rmp);
  return extract_matrices(p, basis, rmp);
}

}  // namespace nilrep
