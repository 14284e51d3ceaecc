#include "nilrep/jennings.hpp"

#include <algorithm>
#include <functional>

namespace nilrep {

std::string umonomial_str(const UMonomial& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "u" + std::to_string(i + 1);
    if (v[i] != 1) s += "^" + std::to_string(v[i]);
  }
  return s.empty() ? "1" : s;
}

Int jennings_dimension(const PolycyclicPresentation& p) {
  int c = p.nilpotency_class();
  // ways[w] = number of exponent vectors of weight exactly w
  std::vector<Int> ways(static_cast<size_t>(c + 1), Int(0));
  ways[0] = 1;
  for (int i = 1; i <= p.generators(); ++i) {
    int wi = p.weight(i);
    std::vector<Int> next(ways.size(), Int(0));
    for (int w = 0; w <= c; ++w) {
      if (ways[static_cast<size_t>(w)] == 0) continue;
      for (int t = 0; w + t * wi <= c; ++t)
        next[static_cast<size_t>(w + t * wi)] += ways[static_cast<size_t>(w)];
    }
    ways = std::move(next);
  }
  Int total(0);
  for (const Int& v : ways) total += v;
  return total;
}

namespace {

// Truncated expansion of (1 - u_i)^e as coefficients of u_i^t, t = 0..cap.
std::vector<Int> factor_expansion(const Int& e, int cap) {
  std::vector<Int> coeffs(static_cast<size_t>(cap + 1), Int(0));
  if (e >= 0) {
    for (int t = 0; t <= cap && Int(t) <= e; ++t) {
      Int b = binomial(e, static_cast<unsigned long>(t));
      coeffs[static_cast<size_t>(t)] = (t % 2) ? -b : b;
    }
  } else {
    // (1 - u)^{-s} = sum_t C(s + t - 1, t) u^t
    Int s = -e;
    for (int t = 0; t <= cap; ++t)
      coeffs[static_cast<size_t>(t)] =
          binomial(s + t - 1, static_cast<unsigned long>(t));
  }
  return coeffs;
}

}  // namespace

GroupRingElement group_elem_to_ubasis(const PolycyclicPresentation& p,
                                      const NormalWord& g) {
  int n = p.generators();
  int c = p.nilpotency_class();
  GroupRingElement acc;
  acc.terms[UMonomial(static_cast<size_t>(n), 0)] = 1;
  // weight so far per term lets factors truncate early
  for (int i = 1; i <= n; ++i) {
    if (g.exp(i) == 0) continue;
    int wi = p.weight(i);
    std::vector<Int> coeffs = factor_expansion(g.exp(i), c / wi);
    GroupRingElement next;
    for (const auto& [mono, mc] : acc.terms) {
      int w = 0;
      for (int k = 1; k <= n; ++k)
        w += mono[static_cast<size_t>(k - 1)] * p.weight(k);
      for (int t = 0; w + t * wi <= c; ++t) {
        const Int& fc = coeffs[static_cast<size_t>(t)];
        if (fc == 0) continue;
        UMonomial m = mono;
        m[static_cast<size_t>(i - 1)] += t;
        Rat& slot = next.terms[m];
        slot += mc * fc;
        if (slot == 0) next.terms.erase(m);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<UMonomial> jennings_basis(const PolycyclicPresentation& p,
                                      size_t max_dim) {
  int n = p.generators();
  int c = p.nilpotency_class();
  std::vector<UMonomial> basis;
  UMonomial current(static_cast<size_t>(n), 0);
  // depth-first enumeration of weight-bounded exponent vectors
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > n) {
      basis.push_back(current);
      if (basis.size() > max_dim)
        throw BudgetExceededError("group-ring basis exceeds the dimension budget");
      return;
    }
    int wi = p.weight(i);
    for (int t = 0; t * wi <= left; ++t) {
      current[static_cast<size_t>(i - 1)] = t;
      rec(i + 1, left - t * wi);
    }
    current[static_cast<size_t>(i - 1)] = 0;
  };
  rec(1, c);

  auto weight_of = [&](const UMonomial& v) {
    int w = 0;
    for (int k = 1; k <= n; ++k) w += v[static_cast<size_t>(k - 1)] * p.weight(k);
    return w;
  };
  std::sort(basis.begin(), basis.end(), [&](const UMonomial& a, const UMonomial& b) {
    int wa = weight_of(a), wb = weight_of(b);
    if (wa != wb) return wa < wb;
    return a > b;  // ties: descending exponent vectors
  });
  return basis;
}

MatrixRepresentation jennings_matrices(const PolycyclicPresentation& p,
                                       const Collector& coll, size_t max_dim) {
  int n = p.generators();
  std::vector<UMonomial> basis = jennings_basis(p, max_dim);
  std::map<UMonomial, size_t> index;
  for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = t;

  Int counted = jennings_dimension(p);
  if (counted != Int(static_cast<long>(basis.size())))
    throw VerificationError("basis size disagrees with the counted dimension");

  MatrixRepresentation rep;
  rep.method = "jennings";
  rep.dimension = static_cast<int>(basis.size());
  rep.generator_names = p.names();
  for (const UMonomial& v : basis) rep.basis.push_back(umonomial_str(v));

  for (int j = 1; j <= n; ++j) {
    NormalWord aj(n);
    aj.exp(j) = 1;
    IntMatrix mat(rep.dimension);
    for (size_t row = 0; row < basis.size(); ++row) {
      const UMonomial& v = basis[row];
      // expand v = prod (1 - a_i)^{r_i} into group elements, multiply by a_j
      // on the right, and map back to the u-basis
      GroupRingElement image;
      UMonomial t(static_cast<size_t>(n), 0);
      std::function<void(int, Rat)> expand = [&](int i, Rat coeff) {
        if (i > n) {
          NormalWord g(n);
          for (int k = 1; k <= n; ++k) g.exp(k) = t[static_cast<size_t>(k - 1)];
          NormalWord h = coll.multiply(g, aj);
          GroupRingElement back = group_elem_to_ubasis(p, h);
          for (const auto& [mono, mc] : back.terms) {
            Rat& slot = image.terms[mono];
            slot += coeff * mc;
            if (slot == 0) image.terms.erase(mono);
          }
          return;
        }
        int r = v[static_cast<size_t>(i - 1)];
        for (int s = 0; s <= r; ++s) {
          t[static_cast<size_t>(i - 1)] = s;
          Rat piece(binomial(Int(r), static_cast<unsigned long>(s)));
          if (s % 2) piece = -piece;
          expand(i + 1, coeff * piece);
        }
        t[static_cast<size_t>(i - 1)] = 0;
      };
      expand(1, Rat(1));

      for (const auto& [mono, mc] : image.terms) {
        auto it = index.find(mono);
        if (it == index.end())
          throw VerificationError("image leaves the truncated basis");
        size_t col = it->second;
        if (col < row)
          throw NonTriangularError("right multiplication decreased the weight");
        if (col == row && mc != 1)
          throw NonTriangularError("diagonal coefficient is not one");
        if (!is_integer(mc))
          throw NonIntegralEntryError("group-ring matrix entry is not an integer");
        mat.at(static_cast<int>(row), static_cast<int>(col)) = mc.get_num();
      }
      if (mat.at(static_cast<int>(row), static_cast<int>(row)) != 1)
        throw NonTriangularError("missing diagonal coefficient");
    }
    rep.generators.push_back(std::move(mat));
  }

  // the defining relations must hold as matrix identities
  for (const auto& [pair, word] : p.relations()) {
    auto [i, j] = pair;
    const IntMatrix& gi = rep.generators[static_cast<size_t>(i - 1)];
    const IntMatrix& gj = rep.generators[static_cast<size_t>(j - 1)];
    IntMatrix lhs = gi.inverse_unitriangular() * gj.inverse_unitriangular() * gi * gj;
    if (lhs != rep.of(word))
      throw VerificationError("defining relation fails as a matrix identity");
  }
  return rep;
}

Int witt_rank(long k, long d) {
  if (k < 1 || d < 1) throw Error("witt_rank needs k >= 1, d >= 1");
  // mu(d/e) via factorization of the cofactor
  auto mobius = [](long v) -> long {
    long mu = 1;
    for (long f = 2; f * f <= v; ++f) {
      if (v % f) continue;
      v /= f;
      if (v % f == 0) return 0;
      mu = -mu;
    }
    if (v > 1) mu = -mu;
    return mu;
  };
  Int total(0);
  for (long e = 1; e <= d; ++e) {
    if (d % e) continue;
    long mu = mobius(d / e);
    if (mu == 0) continue;
    Int term = int_pow(Int(k), static_cast<unsigned long>(e));
    total += mu * term;
  }
  return total / d;
}

Int hirsch_free_nilpotent(long k, long c) {
  Int total(0);
  for (long d = 1; d <= c; ++d) total += witt_rank(k, d);
  return total;
}

}  // namespace nilrep
