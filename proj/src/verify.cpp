#include "nilrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "nilrep/multpoly.hpp"

namespace nilrep {

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "relations: " << (relations_ok ? "ok" : "FAIL")
      << ", homomorphism: " << (homomorphism_ok ? "ok" : "FAIL")
      << ", injectivity: " << (injectivity_ok ? "ok" : "FAIL")
      << ", shape: " << (shape_ok ? "ok" : "FAIL") << " (samples " << samples
      << ", seed " << seed << ")";
  for (const std::string& f : failures) out << "\n  " << f;
  return out.str();
}

Word random_word(const PolycyclicPresentation& p, std::mt19937_64& rng) {
  int c = p.has_weights() ? p.nilpotency_class() : 2;
  int max_len = 4 * std::max(c, 1);
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  Word w;
  for (int t = 0; t < len; ++t) {
    int gen = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.generators()));
    w.push(gen, (rng() & 1u) ? Int(1) : Int(-1));
  }
  return w;
}

NormalWord random_normal_word(const PolycyclicPresentation& p,
                              std::mt19937_64& rng, int range) {
  NormalWord g(p.generators());
  int span = 2 * range + 1;
  for (int i = 1; i <= p.generators(); ++i)
    g.exp(i) = static_cast<long>(rng() % static_cast<unsigned>(span)) - range;
  return g;
}

VerifyReport verify_representation(const PolycyclicPresentation& p,
                                   const MatrixRepresentation& rep,
                                   const Collector& coll,
                                   const VerifyOptions& opts) {
  VerifyReport report;
  report.samples = opts.samples;
  report.seed = opts.seed;
  int n = p.generators();

  // (d) unitriangular integral shape
  for (int i = 1; i <= n; ++i) {
    const IntMatrix& m = rep.generators[static_cast<size_t>(i - 1)];
    if (m.size() != rep.dimension || !m.is_unitriangular()) {
      report.shape_ok = false;
      report.failures.push_back("generator " + std::to_string(i) +
                                " is not unitriangular");
    }
  }

  // (a) defining relations as matrix identities
  for (int i = 1; i <= n && report.shape_ok; ++i) {
    const IntMatrix& gi = rep.generators[static_cast<size_t>(i - 1)];
    IntMatrix gi_inv = gi.inverse_unitriangular();
    for (int j = i + 1; j <= n; ++j) {
      const IntMatrix& gj = rep.generators[static_cast<size_t>(j - 1)];
      IntMatrix lhs = gi_inv * gj.inverse_unitriangular() * gi * gj;
      const NormalWord* word = p.relation(i, j);
      IntMatrix rhs = word ? rep.of(*word) : IntMatrix::identity(rep.dimension);
      if (!(lhs == rhs)) {
        report.relations_ok = false;
        report.failures.push_back("relation check failed for pair (" +
                                  std::to_string(i) + ", " + std::to_string(j) +
                                  ")");
      }
    }
  }

  std::mt19937_64 rng(opts.seed);

  // (b) homomorphism law on random word pairs
  for (int t = 0; t < opts.samples && report.shape_ok; ++t) {
    Word u = random_word(p, rng);
    Word v = random_word(p, rng);
    NormalWord gu = coll.normal_form(u);
    NormalWord gv = coll.normal_form(v);
    NormalWord guv = coll.multiply(gu, gv);
    if (!(rep.of(gu) * rep.of(gv) == rep.of(guv))) {
      report.homomorphism_ok = false;
      report.failures.push_back("homomorphism law failed at sample " +
                                std::to_string(t));
      break;
    }
  }

  // (c) random distinct normal forms map to distinct matrices
  if (report.shape_ok) {
    std::set<std::vector<Int>> elems;
    while (static_cast<int>(elems.size()) < opts.samples)
      elems.insert(random_normal_word(p, rng).exponents());
    std::set<IntMatrix> images;
    for (const auto& exps : elems) images.insert(rep.of(NormalWord(exps)));
    if (images.size() != elems.size()) {
      report.injectivity_ok = false;
      report.failures.push_back("distinct normal forms collided in the image");
    }
  }
  return report;
}

namespace {

std::string order_name(UtOrder order) {
  return order == UtOrder::standard ? "standard" : "column";
}

Int thm_dimension_bound(const PolycyclicPresentation& p) {
  // sum_{i=0}^{c-1} k^i plus the number of weight-c generators
  int k = p.weight_one_generators();
  int c = p.nilpotency_class();
  Int bound(0);
  for (int i = 0; i < c; ++i) bound += int_pow(Int(k), static_cast<unsigned long>(i));
  for (int i = 1; i <= p.generators(); ++i)
    if (p.weight(i) == c) bound += 1;
  return bound;
}

}  // namespace

// Reference normal form for unitriangular builtins: multiply literal m x m
// elementary matrices, then peel exponents off in basis order. Independent of
// the collection machinery.
NormalWord ut_matrix_normal_form(int m, UtOrder order, const Word& w) {
  auto labels = ut_generator_labels(m, order);
  int n = static_cast<int>(labels.size());
  IntMatrix mat = IntMatrix::identity(m);
  for (const auto& [gen, exp] : w.syllables()) {
    if (gen < 1 || gen > n) throw IndexError("word index out of range");
    auto [i, j] = labels[static_cast<size_t>(gen - 1)];
    // right-multiply by s_{i,j}(exp): column j gains exp * column i
    for (int r = 0; r < m; ++r)
      mat.at(r, j - 1) += exp * mat.at(r, i - 1);
  }
  NormalWord nf(n);
  for (int k = 1; k <= n; ++k) {
    auto [i, j] = labels[static_cast<size_t>(k - 1)];
    Int e = mat.at(i - 1, j - 1);
    nf.exp(k) = e;
    // left-divide by s_{i,j}(e): row i loses e * row j
    for (int col = 0; col < m; ++col) mat.at(i - 1, col) -= e * mat.at(j - 1, col);
  }
  if (!(mat == IntMatrix::identity(m)))
    throw VerificationError("matrix peeling did not reach the identity");
  return nf;
}

bool DimensionReport::all_pass() const {
  for (const DimRow& row : rows) {
    if (row.skipped) continue;
    for (const auto& [name, ok] : row.bounds)
      if (!ok) return false;
  }
  return true;
}

std::string DimensionReport::table() const {
  std::ostringstream out;
  out << "group                          n   c   nickel  jennings  checks\n";
  for (const DimRow& row : rows) {
    std::string g = row.group;
    g.resize(30, ' ');
    out << g << " " << row.n << "   " << row.c << "   ";
    out << (row.nickel < 0 ? std::string("-") : std::to_string(row.nickel));
    out << "  " << (row.jennings < 0 ? std::string("-") : row.jennings.get_str());
    for (const auto& [name, ok] : row.bounds)
      out << "  [" << name << ": " << (ok ? "pass" : "FAIL") << "]";
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
  }
  return out.str();
}

DimensionReport dims_report(const std::string& family, int lo, int hi,
                            UtOrder order, size_t max_dim) {
  DimensionReport report;
  for (int param = lo; param <= hi; ++param) {
    DimRow row;
    PolycyclicPresentation p = [&]() {
      if (family == "heisenberg") {
        row.group = "heisenberg(" + std::to_string(param) + ")";
        return builtin_heisenberg(param);
      }
      if (family == "ut") {
        row.group = "ut(" + std::to_string(param) + ", " + order_name(order) + ")";
        return builtin_ut(param, order);
      }
      if (family == "free_abelian") {
        row.group = "free_abelian(" + std::to_string(param) + ")";
        return builtin_free_abelian(param);
      }
      if (family == "free_nilpotent_c2") {
        row.group = "free_nilpotent_c2(" + std::to_string(param) + ")";
        return builtin_free_nilpotent_c2(param);
      }
      if (family == "filiform") {
        row.group = "filiform(" + std::to_string(param) + ")";
        return builtin_filiform(param);
      }
      throw Error("unknown family '" + family + "'");
    }();
    row.n = p.generators();
    row.c = p.nilpotency_class();
    try {
      Collector coll(p);
      RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
      ClosureOptions copts;
      copts.max_dim = max_dim;
      row.nickel = static_cast<long>(closure(p, rmp, {}, copts).size());
      row.jennings = jennings_dimension(p);
    } catch (const Error& e) {
      row.skipped = true;
      row.note = e.what();
      report.rows.push_back(row);
      continue;
    }

    row.bounds.emplace_back("nickel<=jennings", Int(row.nickel) <= row.jennings);
    row.bounds.emplace_back("nickel<=sum k^i + rk",
                            Int(row.nickel) <= thm_dimension_bound(p));
    if (family == "heisenberg") {
      long m = param;
      row.bounds.emplace_back("nickel==2m+2", row.nickel == 2 * m + 2);
      row.bounds.emplace_back("jennings==2m^2+3m+2",
                              row.jennings == Int(2 * m * m + 3 * m + 2));
    } else if (family == "ut" && order == UtOrder::column) {
      row.bounds.emplace_back("nickel==n+1", row.nickel == row.n + 1);
    } else if (family == "ut" && order == UtOrder::standard) {
      Int lower = int_pow(Int(2), static_cast<unsigned long>(std::max(param / 2 - 1, 0)));
      Int upper = int_pow(Int(3), static_cast<unsigned long>(param));
      row.bounds.emplace_back("2^(m/2-1)<=nickel", lower <= Int(row.nickel));
      row.bounds.emplace_back("nickel<=3^m", Int(row.nickel) <= upper);
    } else if (family == "free_abelian") {
      row.bounds.emplace_back("nickel==k+1", row.nickel == param + 1);
      row.bounds.emplace_back("jennings==k+1", row.jennings == Int(param + 1));
    } else if (family == "free_nilpotent_c2") {
      long k = param;
      if (k >= 2)
        row.bounds.emplace_back("jennings==1+k+k^2",
                                row.jennings == Int(1 + k + k * k));
      row.bounds.emplace_back(
          "hirsch==witt", Int(row.n) == hirsch_free_nilpotent(k, k == 1 ? 1 : 2));
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string ProductReport::summary() const {
  std::ostringstream out;
  out << "dim A = " << dim_a << ", dim B = " << dim_b
      << ", dim A x B = " << dim_direct << " ["
      << (direct_ok ? "pass" : "FAIL") << "]";
  if (central_defined)
    out << ", dim A x_C B = " << dim_central << " ["
        << (central_ok ? "pass" : "FAIL") << "]";
  else
    out << ", central product undefined";
  return out.str();
}

ProductReport product_report(const PolycyclicPresentation& a,
                             const PolycyclicPresentation& b) {
  ProductReport report;
  report.dim_a = static_cast<long>(nickel_dimension(a));
  report.dim_b = static_cast<long>(nickel_dimension(b));
  report.dim_direct = static_cast<long>(nickel_dimension(direct_product(a, b)));
  report.direct_ok = report.dim_direct == report.dim_a + report.dim_b - 1;
  try {
    report.dim_central = static_cast<long>(nickel_dimension(central_product(a, b)));
    report.central_defined = true;
    report.central_ok = report.dim_central == report.dim_a + report.dim_b - 2;
  } catch (const CentralityError&) {
    report.central_defined = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Reproduction suite
// ---------------------------------------------------------------------------

namespace {

// Observed module dimensions for the standard ordering, frozen after a first
// run and cross-checked below against the monomial-span and growth bounds.
const std::map<int, long> kUtStandardDims = {{3, 4}, {4, 8}, {5, 16}, {6, 28}};

struct Instance {
  std::string name;
  PolycyclicPresentation p;
};

std::vector<Instance> desk_instances() {
  std::vector<Instance> out;
  for (int m = 1; m <= 5; ++m)
    out.push_back({"heisenberg(" + std::to_string(m) + ")", builtin_heisenberg(m)});
  for (int m = 3; m <= 5; ++m) {
    out.push_back({"ut(" + std::to_string(m) + ", standard)",
                   builtin_ut(m, UtOrder::standard)});
    out.push_back({"ut(" + std::to_string(m) + ", column)",
                   builtin_ut(m, UtOrder::column)});
  }
  for (int k = 1; k <= 4; ++k)
    out.push_back({"free_abelian(" + std::to_string(k) + ")", builtin_free_abelian(k)});
  for (int k = 2; k <= 4; ++k)
    out.push_back({"free_nilpotent_c2(" + std::to_string(k) + ")",
                   builtin_free_nilpotent_c2(k)});
  for (int c = 1; c <= 5; ++c)
    out.push_back({"filiform(" + std::to_string(c) + ")", builtin_filiform(c)});
  PolycyclicPresentation heis = builtin_heisenberg(1);
  PolycyclicPresentation z2 = builtin_free_abelian(2);
  out.push_back({"heis(1) x heis(1)", direct_product(heis, heis)});
  out.push_back({"heis(1) x_C heis(1)", central_product(heis, heis)});
  out.push_back({"Z^2 x heis(1)", direct_product(z2, heis)});
  out.push_back({"Z^2 x_C Z^2", central_product(z2, z2)});
  return out;
}

long ut_monomial_span_bound(const UTSymbolicProduct& prod) {
  std::set<Monomial> xparts;
  for (const Polynomial& q : prod.q)
    for (const auto& [mono, coeff] : q.terms()) {
      Monomial xp;
      for (const auto& [v, e] : mono.factors())
        if (!is_y_var(v)) xp = xp * Monomial::var(v, e);
      xparts.insert(xp);
    }
  return static_cast<long>(xparts.size());
}

CriterionResult run_criterion(int id, const std::string& title,
                              const std::function<std::string()>& body) {
  CriterionResult result;
  result.id = id;
  result.title = title;
  try {
    result.detail = body();
    result.pass = true;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  return result;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw VerificationError(msg);
}

}  // namespace

std::vector<CriterionResult> paper_report(std::ostream* progress) {
  std::vector<CriterionResult> results;
  auto note = [&](const std::string& msg) {
    if (progress) *progress << msg << std::endl;
  };

  note("criterion 1: Heisenberg module matrices");
  results.push_back(run_criterion(1, "Heisenberg embedding is the displayed UT_4 image", [&] {
    PolycyclicPresentation p = builtin_heisenberg(1);
    MatrixRepresentation rep = nickel_matrices(p);
    require(rep.dimension == 4, "dimension is not 4");
    // reorder our basis to (t_1, t_3, t_2, 1), the order that makes the
    // displayed matrices unitriangular
    std::vector<std::string> target = {"x1", "x3", "x2", "1"};
    std::vector<int> pi;
    for (const std::string& label : target) {
      auto it = std::find(rep.basis.begin(), rep.basis.end(), label);
      require(it != rep.basis.end(), "basis misses " + label);
      pi.push_back(static_cast<int>(it - rep.basis.begin()));
    }
    const long expected[3][4][4] = {
        {{1, 0, 0, -1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}},
        {{1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    for (int g = 0; g < 3; ++g)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          require(rep.generators[static_cast<size_t>(g)].at(pi[static_cast<size_t>(r)],
                                                            pi[static_cast<size_t>(s)]) ==
                      expected[g][r][s],
                  "matrix entry mismatch for generator " + std::to_string(g + 1));
    return std::string("dimension 4; all three matrices match");
  }));

  note("criterion 2: Heisenberg family dimensions");
  results.push_back(run_criterion(2, "Heisenberg dims are 2m+2 and 2m^2+3m+2 (m=1..5)", [&] {
    std::string detail;
    for (long m = 1; m <= 5; ++m) {
      PolycyclicPresentation p = builtin_heisenberg(static_cast<int>(m));
      long nick = static_cast<long>(nickel_dimension(p));
      Int jen = jennings_dimension(p);
      require(nick == 2 * m + 2, "Heisenberg(" + std::to_string(m) + ") module dim " +
                                     std::to_string(nick));
      require(jen == Int(2 * m * m + 3 * m + 2),
              "Heisenberg(" + std::to_string(m) + ") group-ring dim " + jen.get_str());
      detail += (m > 1 ? ", " : "") + std::to_string(nick) + "/" + jen.get_str();
    }
    return "nickel/jennings: " + detail;
  }));

  note("criterion 3: reordered unitriangular dimensions");
  results.push_back(run_criterion(3, "Column-ordered UT_m has dimension n+1 (m=3..6)", [&] {
    std::string detail;
    for (int m = 3; m <= 6; ++m) {
      long n = static_cast<long>(m) * (m - 1) / 2;
      long dim = static_cast<long>(nickel_dimension(builtin_ut(m, UtOrder::column)));
      require(dim == n + 1, "ut(" + std::to_string(m) + ", column) has dim " +
                                std::to_string(dim));
      detail += (m > 3 ? ", " : "") + std::to_string(dim);
    }
    return "dimensions: " + detail;
  }));

  note("criterion 4: standard-order unitriangular dimensions");
  results.push_back(run_criterion(4, "Standard UT_m dims within bounds and goldens (m=3..6)", [&] {
    std::string detail;
    long prev = 0;
    for (int m = 3; m <= 6; ++m) {
      long dim = static_cast<long>(nickel_dimension(builtin_ut(m, UtOrder::standard)));
      Int lower = int_pow(Int(2), static_cast<unsigned long>(std::max(m / 2 - 1, 0)));
      Int upper = int_pow(Int(3), static_cast<unsigned long>(m));
      require(lower <= Int(dim) && Int(dim) <= upper,
              "dimension " + std::to_string(dim) + " outside [" + lower.get_str() +
                  ", " + upper.get_str() + "] for m=" + std::to_string(m));
      long span = ut_monomial_span_bound(ut_symbolic_product(m, UtOrder::standard));
      require(dim <= span, "dimension exceeds the monomial-span bound " +
                               std::to_string(span));
      require(dim > prev, "dimension is not increasing in m");
      prev = dim;
      long golden = kUtStandardDims.at(m);
      require(dim == golden, "observed dim " + std::to_string(dim) +
                                 " differs from recorded " + std::to_string(golden) +
                                 " for m=" + std::to_string(m));
      detail += (m > 3 ? ", " : "") + std::to_string(dim) + "<=" + std::to_string(span);
    }
    return "dim<=span: " + detail;
  }));

  note("criterion 5: symbolic census and chain shapes");
  results.push_back(run_criterion(5, "UT census within 2*3^(l-1-k) and chain-shaped (m=2..5)", [&] {
    std::string detail;
    for (int m = 2; m <= 5; ++m) {
      UTSymbolicProduct prod = ut_symbolic_product(m, UtOrder::standard);
      if (auto violation = chain_shape_violation(prod))
        throw VerificationError("chain violation in q_{" + std::to_string(violation->k) +
                                "," + std::to_string(violation->l) + "}: " +
                                violation->monomial.str());
      CensusTable table = monomial_census_ut(m);
      require(table.within_bounds, "census bound violated for m=" + std::to_string(m));
      detail += (m > 2 ? ", " : "") + std::to_string(table.total_actual) + "/" +
                std::to_string(table.total_bound);
    }
    return "monomials/bounds: " + detail;
  }));

  note("criterion 6: weight and degree bounds");
  results.push_back(run_criterion(6, "Restricted polynomials respect weight and degree bounds", [&] {
    int count = 0;
    for (const Instance& inst : desk_instances()) {
      if (inst.p.generators() > 12) continue;
      Collector coll(inst.p);
      RestrictedMultPolys rmp = restricted_mult_polys(inst.p, coll);
      if (auto wv = weight_bound_violation(inst.p, rmp))
        throw VerificationError(inst.name + ": weight bound fails at q_" +
                                std::to_string(wv->i) + "^(" + std::to_string(wv->j) +
                                ") monomial " + wv->monomial.str());
      if (auto dv = degree_bound_violation(inst.p, rmp))
        throw VerificationError(inst.name + ": degree bound fails at q_" +
                                std::to_string(dv->i) + "^(" + std::to_string(dv->j) + ")");
      ++count;
    }
    return std::to_string(count) + " presentations checked";
  }));

  note("criterion 7: dimension dominance");
  results.push_back(run_criterion(7, "Module dim <= group-ring dim and the k^i bound", [&] {
    int count = 0;
    for (const Instance& inst : desk_instances()) {
      long nick = static_cast<long>(nickel_dimension(inst.p));
      Int jen = jennings_dimension(inst.p);
      require(Int(nick) <= jen, inst.name + ": " + std::to_string(nick) + " > " +
                                    jen.get_str());
      require(Int(nick) <= thm_dimension_bound(inst.p),
              inst.name + ": k^i bound violated");
      ++count;
    }
    return std::to_string(count) + " instances dominated";
  }));

  note("criterion 8: product dimensions");
  results.push_back(run_criterion(8, "Products: dim M+N-1 (direct) and M+N-2 (central)", [&] {
    PolycyclicPresentation heis = builtin_heisenberg(1);
    PolycyclicPresentation z2 = builtin_free_abelian(2);
    ProductReport hh = product_report(heis, heis);
    require(hh.direct_ok && hh.central_defined && hh.central_ok,
            "heis x heis: " + hh.summary());
    ProductReport zh = product_report(z2, heis);
    require(zh.direct_ok && zh.central_defined && zh.central_ok,
            "Z^2 x heis: " + zh.summary());
    return hh.summary() + "; " + zh.summary();
  }));

  note("criterion 9: free nilpotent class two");
  results.push_back(run_criterion(9, "F(k,2): group-ring dim 1+k+k^2 and Witt ranks (k=2..4)", [&] {
    std::string detail;
    for (long k = 2; k <= 4; ++k) {
      PolycyclicPresentation p = builtin_free_nilpotent_c2(static_cast<int>(k));
      Int jen = jennings_dimension(p);
      require(jen == Int(1 + k + k * k), "F(" + std::to_string(k) + ",2) has dim " +
                                             jen.get_str());
      Int hirsch = hirsch_free_nilpotent(k, 2);
      require(hirsch == Int(p.generators()),
              "Witt Hirsch length mismatch for k=" + std::to_string(k));
      detail += (k > 2 ? ", " : "") + jen.get_str();
    }
    return "dimensions: " + detail;
  }));

  note("criterion 10: property suites");
  results.push_back(run_criterion(10, "Oracle equality, spot checks, off-grid residuals", [&] {
    // collection vs literal matrix arithmetic, 1000 words per builtin
    for (int m = 3; m <= 6; ++m)
      for (UtOrder order : {UtOrder::standard, UtOrder::column}) {
        PolycyclicPresentation p = builtin_ut(m, order);
        Collector coll(p);
        std::mt19937_64 rng(424242u + static_cast<unsigned>(m) * 10u +
                            (order == UtOrder::column ? 1u : 0u));
        for (int t = 0; t < 1000; ++t) {
          Word w = random_word(p, rng);
          require(coll.normal_form(w) == ut_matrix_normal_form(m, order, w),
                  "collection disagrees with the matrix product for ut(" +
                      std::to_string(m) + ", " + order_name(order) + ")");
        }
      }

    // homomorphism and injectivity spot checks, both embeddings
    int checked = 0, skipped = 0;
    for (const Instance& inst : desk_instances()) {
      Collector coll(inst.p);
      RestrictedMultPolys rmp = restricted_mult_polys(inst.p, coll);
      ModuleBasis basis = closure(inst.p, rmp);
      std::vector<MatrixRepresentation> reps;
      if (basis.size() <= 80) reps.push_back(extract_matrices(inst.p, basis, rmp));
      Int jen = jennings_dimension(inst.p);
      if (jen <= 80) reps.push_back(jennings_matrices(inst.p, coll));
      if (reps.empty()) ++skipped;
      for (const MatrixRepresentation& rep : reps) {
        VerifyOptions vopts;
        vopts.samples = 200;
        vopts.seed = 7u;
        VerifyReport vr = verify_representation(inst.p, rep, coll, vopts);
        require(vr.ok(), inst.name + " [" + rep.method + "]: " + vr.summary());
        ++checked;
      }
    }
    // off-grid interpolation residuals were already enforced while building
    // every restricted system above (they throw on any nonzero residual)
    return std::to_string(checked) + " representations spot-checked, " +
           std::to_string(skipped) + " skipped by the dimension budget";
  }));

  return results;
}

bool print_report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.title;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "RESULT: all criteria passed" : "RESULT: criteria failed") << "\n";
  return all;
}

}  // namespace nilrep
