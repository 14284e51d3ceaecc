#include "nilrep/multpoly.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nilrep {

namespace {

// Exponent vectors over the active variables with weighted total at most
// cap, enumerated depth-first in index order.
void enumerate_lower_set(const std::vector<int>& var_weights, int cap,
                         std::vector<int>& current, size_t pos,
                         std::vector<std::vector<int>>& out) {
  if (pos == var_weights.size()) {
    out.push_back(current);
    return;
  }
  int w = var_weights[pos];
  for (int e = 0; e * w <= cap; ++e) {
    current[pos] = e;
    enumerate_lower_set(var_weights, cap - e * w, current, pos + 1, out);
  }
  current[pos] = 0;
}

long small_binomial(int top, int k) {
  if (k < 0 || k > top) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (top - k + t) / t;
  return r;
}

}  // namespace

std::vector<Polynomial> restricted_mult_polys_for(const PolycyclicPresentation& p,
                                                  const Collector& coll, int j,
                                                  const MultPolyOptions& opts) {
  int n = p.generators();
  if (!p.has_weights()) throw WeightError("restricted polynomials need weights");
  if (j < 1 || j > n) throw IndexError("generator index out of range");

  std::vector<Polynomial> q(static_cast<size_t>(n));
  for (int i = 1; i < j; ++i) q[static_cast<size_t>(i - 1)] = Polynomial::variable(i);
  q[static_cast<size_t>(j - 1)] =
      Polynomial::variable(j) - Polynomial::constant(Rat(1));

  // active variables x_{j+1}, ..., x_n
  std::vector<int> vars, var_w;
  for (int k = j + 1; k <= n; ++k) {
    vars.push_back(k);
    var_w.push_back(p.weight(k));
  }

  if (!vars.empty()) {
    int cap = 0;
    for (int k = j + 1; k <= n; ++k) cap = std::max(cap, p.weight(k));

    std::vector<std::vector<int>> grid;
    std::vector<int> current(vars.size(), 0);
    enumerate_lower_set(var_w, cap, current, 0, grid);

    std::map<std::vector<int>, size_t> index;
    for (size_t t = 0; t < grid.size(); ++t) index[grid[t]] = t;

    // one collection per grid point yields the value of every q_i at once
    std::vector<NormalWord> values;
    values.reserve(grid.size());
    for (const auto& pt : grid) {
      RunWord runs;
      for (size_t v = 0; v < vars.size(); ++v)
        if (pt[v] != 0) runs.push_back({vars[v], Int(pt[v])});
      runs.push_back({j, Int(-1)});
      values.push_back(coll.normal_form_runs(std::move(runs)));
    }

    std::map<std::pair<int, int>, Polynomial> binomials;
    auto binomial_poly = [&](int v, int e) -> const Polynomial& {
      auto key = std::make_pair(v, e);
      auto it = binomials.find(key);
      if (it == binomials.end())
        it = binomials.emplace(key, Polynomial::binomial_in_var(v, e)).first;
      return it->second;
    };

    for (int i = j + 1; i <= n; ++i) {
      int wi = p.weight(i);
      Polynomial r;  // q_i - x_i, interpolated in the binomial basis
      for (const auto& alpha : grid) {
        int wa = 0;
        for (size_t v = 0; v < vars.size(); ++v) wa += alpha[v] * var_w[v];
        if (wa > wi) continue;

        // finite difference: a_alpha = sum_{gamma <= alpha} (-1)^{|alpha - gamma|}
        //                     prod C(alpha_v, gamma_v) * r(gamma)
        Int a(0);
        std::vector<int> gamma(vars.size(), 0);
        while (true) {
          long coeff = 1;
          int drop = 0;
          for (size_t v = 0; v < vars.size(); ++v) {
            coeff *= small_binomial(alpha[v], gamma[v]);
            drop += alpha[v] - gamma[v];
          }
          const NormalWord& nf = values[index.at(gamma)];
          size_t vi = static_cast<size_t>(
              std::find(vars.begin(), vars.end(), i) - vars.begin());
          Int rv = nf.exp(i) - gamma[vi];
          if (drop % 2) coeff = -coeff;
          a += coeff * rv;
          // odometer over gamma <= alpha
          size_t v = 0;
          while (v < vars.size() && gamma[v] == alpha[v]) gamma[v++] = 0;
          if (v == vars.size()) break;
          ++gamma[v];
        }
        if (a == 0) continue;
        Polynomial basis_poly = Polynomial::constant(Rat(a));
        for (size_t v = 0; v < vars.size(); ++v)
          if (alpha[v] != 0) basis_poly = basis_poly * binomial_poly(vars[v], alpha[v]);
        r += basis_poly;
      }
      if (r.constant_term() != 0)
        throw VerificationError("interpolated q has a constant term");
      if (r.coeff(Monomial::var(i)) != 0)
        throw VerificationError("interpolated q has a stray linear term");
      q[static_cast<size_t>(i - 1)] = Polynomial::variable(i) + r;
    }
  }

  // off-grid verification at pseudorandom integer points, signed entries
  std::mt19937_64 rng(opts.verify_seed + static_cast<std::uint64_t>(j) * 7919u);
  int span = 2 * opts.verify_range + 1;
  for (int t = 0; t < opts.verify_points; ++t) {
    std::vector<Int> point(static_cast<size_t>(n));
    RunWord runs;
    for (int k = 1; k <= n; ++k) {
      long v = static_cast<long>(rng() % static_cast<unsigned>(span)) -
               opts.verify_range;
      point[static_cast<size_t>(k - 1)] = v;
      if (v != 0) runs.push_back({k, Int(v)});
    }
    runs.push_back({j, Int(-1)});
    NormalWord nf = coll.normal_form_runs(std::move(runs));
    for (int i = 1; i <= n; ++i) {
      Rat predicted = q[static_cast<size_t>(i - 1)].evaluate([&](int v) {
        if (is_y_var(v) || v < 1 || v > n)
          throw VerificationError("restricted polynomial uses a foreign variable");
        return Rat(point[static_cast<size_t>(v - 1)]);
      });
      if (predicted != Rat(nf.exp(i)))
        throw VerificationError("restricted polynomial residual at off-grid point");
    }
  }
  return q;
}

RestrictedMultPolys restricted_mult_polys(const PolycyclicPresentation& p,
                                          const Collector& coll,
                                          const MultPolyOptions& opts) {
  RestrictedMultPolys rmp;
  rmp.n = p.generators();
  rmp.q.reserve(static_cast<size_t>(rmp.n));
  for (int j = 1; j <= rmp.n; ++j)
    rmp.q.push_back(restricted_mult_polys_for(p, coll, j, opts));
  return rmp;
}

int UTSymbolicProduct::position(int i, int j) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == std::make_pair(i, j)) return static_cast<int>(k + 1);
  throw IndexError("no such cell");
}

UTSymbolicProduct ut_symbolic_product(int m, UtOrder order, long long max_steps) {
  UTSymbolicProduct prod;
  prod.m = m;
  prod.order = order;
  prod.labels = ut_generator_labels(m, order);
  prod.n = static_cast<int>(prod.labels.size());

  std::map<std::pair<int, int>, int> position;
  for (int k = 1; k <= prod.n; ++k)
    position[prod.labels[static_cast<size_t>(k - 1)]] = k;

  struct PolyRun {
    int pos;
    Polynomial exp;
  };
  std::vector<PolyRun> w;
  w.reserve(static_cast<size_t>(2 * prod.n));
  for (int k = 1; k <= prod.n; ++k) w.push_back({k, Polynomial::variable(k)});
  for (int k = 1; k <= prod.n; ++k) w.push_back({k, Polynomial::variable(y_var(k))});

  long long steps = 0;
  size_t cur = 0;
  while (cur + 1 < w.size()) {
    if (w[cur].exp.is_zero()) {
      w.erase(w.begin() + static_cast<long>(cur));
      if (cur > 0) --cur;
      continue;
    }
    if (w[cur + 1].exp.is_zero()) {
      w.erase(w.begin() + static_cast<long>(cur + 1));
      continue;
    }
    if (w[cur].pos == w[cur + 1].pos) {
      w[cur].exp += w[cur + 1].exp;
      w.erase(w.begin() + static_cast<long>(cur + 1));
      if (cur > 0) --cur;
      continue;
    }
    if (w[cur].pos < w[cur + 1].pos) {
      ++cur;
      continue;
    }
    if (++steps > max_steps)
      throw NonTerminatingError("generalized collection budget exceeded");
    // s_{i,j}^x s_{k,l}^y -> s_{k,l}^y s_{i,j}^x [s_{i,l}^{xy} | s_{k,j}^{-xy}]
    auto [i, j] = prod.labels[static_cast<size_t>(w[cur].pos - 1)];
    auto [k, l] = prod.labels[static_cast<size_t>(w[cur + 1].pos - 1)];
    std::swap(w[cur], w[cur + 1]);
    if (j == k) {
      Polynomial cross = w[cur + 1].exp * w[cur].exp;  // x * y
      w.insert(w.begin() + static_cast<long>(cur + 2),
               {position.at({i, l}), std::move(cross)});
    } else if (i == l) {
      Polynomial cross = -(w[cur + 1].exp * w[cur].exp);
      w.insert(w.begin() + static_cast<long>(cur + 2),
               {position.at({k, j}), std::move(cross)});
    }
    cur = cur >= 1 ? cur - 1 : 0;
  }

  prod.q.assign(static_cast<size_t>(prod.n), Polynomial());
  int last = 0;
  for (auto& run : w) {
    if (run.exp.is_zero()) continue;
    if (run.pos <= last)
      throw Error("generalized collection ended on an unsorted word");
    last = run.pos;
    prod.q[static_cast<size_t>(run.pos - 1)] = std::move(run.exp);
  }
  for (int k = 1; k <= prod.n; ++k)
    if (prod.q[static_cast<size_t>(k - 1)].is_zero())
      throw Error("generalized collection lost a basis position");
  return prod;
}

std::optional<ChainViolation> chain_shape_violation(const UTSymbolicProduct& prod) {
  for (int pos = 1; pos <= prod.n; ++pos) {
    auto [k, l] = prod.labels[static_cast<size_t>(pos - 1)];
    for (const auto& [mono, coeff] : prod.q[static_cast<size_t>(pos - 1)].terms()) {
      // collect the cells used by the monomial; chains are edge-squarefree
      std::vector<std::pair<int, int>> edges;
      bool bad = false;
      for (auto& [v, e] : mono.factors()) {
        if (e != 1) {
          bad = true;
          break;
        }
        edges.push_back(prod.labels[static_cast<size_t>(var_index(v) - 1)]);
      }
      if (!bad) {
        std::sort(edges.begin(), edges.end());
        int at = k;
        for (auto& [a, b] : edges) {
          if (a != at) {
            bad = true;
            break;
          }
          at = b;
        }
        if (at != l) bad = true;
      }
      if (bad) return ChainViolation{k, l, mono};
    }
  }
  return std::nullopt;
}

CensusTable monomial_census_ut(int m) {
  UTSymbolicProduct prod = ut_symbolic_product(m, UtOrder::standard);
  CensusTable table;
  table.m = m;
  table.grand_bound = int_pow(Int(3), static_cast<unsigned long>(m));
  for (int pos = 1; pos <= prod.n; ++pos) {
    auto [k, l] = prod.labels[static_cast<size_t>(pos - 1)];
    CensusRow row;
    row.k = k;
    row.l = l;
    row.actual = static_cast<long>(prod.q[static_cast<size_t>(pos - 1)].term_count());
    row.bound = 2;
    for (int t = 0; t < l - 1 - k; ++t) row.bound *= 3;
    if (row.actual > row.bound) table.within_bounds = false;
    table.total_actual += row.actual;
    table.total_bound += row.bound;
    table.rows.push_back(row);
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return std::make_pair(a.k, a.l) < std::make_pair(b.k, b.l);
  });
  if (Int(table.total_bound) > table.grand_bound) table.within_bounds = false;
  return table;
}

std::optional<WeightViolation> weight_bound_violation(const PolycyclicPresentation& p,
                                                      const RestrictedMultPolys& rmp) {
  MonomialOrder ord(p.weights());
  for (int j = 1; j <= rmp.n; ++j)
    for (int i = 1; i <= rmp.n; ++i)
      for (const auto& [mono, coeff] : rmp.poly(i, j).terms())
        if (ord.weight(mono) > p.weight(i)) return WeightViolation{i, j, mono};
  return std::nullopt;
}

std::optional<WeightViolation> degree_bound_violation(const PolycyclicPresentation& p,
                                                      const RestrictedMultPolys& rmp) {
  int c = p.nilpotency_class();
  for (int j = 1; j <= rmp.n; ++j)
    for (int i = 1; i <= rmp.n; ++i)
      for (const auto& [mono, coeff] : rmp.poly(i, j).terms())
        if (mono.degree() > c) return WeightViolation{i, j, mono};
  return std::nullopt;
}

}  // namespace nilrep
