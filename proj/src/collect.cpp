#include "nilrep/collect.hpp"

#include <algorithm>
#include <cassert>

namespace nilrep {

RuleSet::RuleSet(int n) : n_(n) {
  size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
  state_.assign(pairs, 0);
  words_.resize(pairs);
}

size_t RuleSet::pair_index(int i, int j) const {
  assert(1 <= i && i < j && j <= n_);
  // pairs (i, j) with i < j, grouped by j
  return static_cast<size_t>(j - 2) * (j - 1) / 2 + static_cast<size_t>(i - 1);
}

size_t RuleSet::sign_slot(int sign_i, int sign_j) {
  return (sign_i < 0 ? 1u : 0u) + (sign_j < 0 ? 2u : 0u);
}

bool RuleSet::known(int i, int j) const { return state_[pair_index(i, j)] != 0; }

bool RuleSet::commutes(int i, int j) const {
  char s = state_[pair_index(i, j)];
  if (s == 0) throw Error("rule for pair not derived yet");
  return s == 1;
}

const NormalWord& RuleSet::rule(int i, int j, int sign_i, int sign_j) const {
  size_t p = pair_index(i, j);
  if (state_[p] != 2) throw Error("no rule words stored for pair");
  return words_[p][sign_slot(sign_i, sign_j)];
}

void RuleSet::mark_commuting(int i, int j) { state_[pair_index(i, j)] = 1; }

void RuleSet::set(int i, int j, int sign_i, int sign_j, NormalWord w) {
  size_t p = pair_index(i, j);
  state_[p] = 2;
  words_[p][sign_slot(sign_i, sign_j)] = std::move(w);
}

namespace {

// Drops zero runs and merges equal-index neighbours in a window around
// [lo, hi); leftovers at the edges are caught by the main scan.
void normalize_window(RunWord& w, size_t lo, size_t hi, bool merge = true) {
  size_t t = lo > 0 ? lo - 1 : 0;
  size_t stop = hi + 1;
  while (t < w.size() && t < stop) {
    if (w[t].exp == 0) {
      w.erase(w.begin() + static_cast<long>(t));
      if (t > 0) --t;
      continue;
    }
    if (merge && t + 1 < w.size() && w[t].gen == w[t + 1].gen) {
      w[t].exp += w[t + 1].exp;
      w.erase(w.begin() + static_cast<long>(t + 1));
      if (w[t].exp == 0) {
        w.erase(w.begin() + static_cast<long>(t));
        if (t > 0) --t;
      }
      continue;
    }
    ++t;
  }
}

void append_word_runs(RunWord& out, const NormalWord& word) {
  for (int k = 1; k <= word.size(); ++k)
    if (word.exp(k) != 0) out.push_back({k, word.exp(k)});
}

}  // namespace

NormalWord collect_word(const RuleSet& rules, int n, RunWord w,
                        const CollectOptions& opts) {
  const bool merge = opts.merge_adjacent;
  normalize_window(w, 0, w.size(), merge);
  long long steps = 0;

  auto step_at = [&](size_t p) {
    // w[p] = (j, u), w[p+1] = (i, v) with j > i
    int j = w[p].gen, i = w[p + 1].gen;
    if (rules.commutes(i, j)) {
      std::swap(w[p], w[p + 1]);
      normalize_window(w, p, p + 2, merge);
      return;
    }
    int sj = sign_of(w[p].exp), si = sign_of(w[p + 1].exp);
    const NormalWord& tail = rules.rule(i, j, si, sj);
    w[p].exp -= sj;
    w[p + 1].exp -= si;
    RunWord ins;
    ins.push_back({i, Int(si)});
    ins.push_back({j, Int(sj)});
    append_word_runs(ins, tail);
    w.insert(w.begin() + static_cast<long>(p + 1), ins.begin(), ins.end());
    normalize_window(w, p, p + ins.size() + 2, merge);
  };

  if (opts.strategy == RewriteStrategy::leftmost) {
    size_t cur = 0;
    while (cur + 1 < w.size()) {
      if (w[cur].exp == 0) {
        w.erase(w.begin() + static_cast<long>(cur));
        if (cur > 0) --cur;
        continue;
      }
      if (w[cur + 1].exp == 0) {
        w.erase(w.begin() + static_cast<long>(cur + 1));
        continue;
      }
      if (w[cur].gen == w[cur + 1].gen) {
        if (!merge) {
          ++cur;
          continue;
        }
        w[cur].exp += w[cur + 1].exp;
        w.erase(w.begin() + static_cast<long>(cur + 1));
        if (cur > 0) --cur;
        continue;
      }
      if (w[cur].gen < w[cur + 1].gen) {
        ++cur;
        continue;
      }
      if (++steps > opts.max_steps)
        throw NonTerminatingError("rewrite step budget exceeded");
      step_at(cur);
      // edits may reach one position left of the site
      cur = cur >= 2 ? cur - 2 : 0;
    }
  } else {
    if (!opts.rng) throw Error("random_site strategy needs an rng");
    while (true) {
      normalize_window(w, 0, w.size(), merge);
      std::vector<size_t> sites;
      for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p].gen > w[p + 1].gen) sites.push_back(p);
      if (sites.empty()) break;
      if (++steps > opts.max_steps)
        throw NonTerminatingError("rewrite step budget exceeded");
      size_t pick = sites[(*opts.rng)() % sites.size()];
      step_at(pick);
    }
  }

  if (opts.final_letter_counts) {
    opts.final_letter_counts->assign(static_cast<size_t>(n), Int(0));
    for (const Run& r : w)
      (*opts.final_letter_counts)[static_cast<size_t>(r.gen - 1)] += abs(r.exp);
  }

  NormalWord result(n);
  int last = 0;
  for (const Run& r : w) {
    if (r.exp == 0) continue;
    if (r.gen < last || (merge && r.gen == last))
      throw Error("collection ended on an unsorted word");
    result.exp(r.gen) += r.exp;
    last = r.gen;
  }
  return result;
}

namespace {

RunWord reversed_negated(const RunWord& runs) {
  RunWord out;
  out.reserve(runs.size());
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

// Collects inside the tail subgroup during rule derivation and checks the
// result stays there.
NormalWord tail_collect(const RuleSet& rules, int n, RunWord runs, int j,
                        long long max_steps) {
  CollectOptions opts;
  opts.max_steps = max_steps;
  NormalWord nf = collect_word(rules, n, std::move(runs), opts);
  for (int k = 1; k <= j; ++k)
    if (nf.exp(k) != 0)
      throw Error("derived rule word leaves the tail subgroup");
  return nf;
}

}  // namespace

RuleSet derive_signed_rules(const PolycyclicPresentation& p, long long max_steps) {
  int n = p.generators();
  RuleSet rules(n);
  for (int j = n; j >= 2; --j) {
    for (int i = j - 1; i >= 1; --i) {
      const NormalWord* rel = p.relation(i, j);
      if (!rel) {
        rules.mark_commuting(i, j);
        continue;
      }
      RunWord r = Collector::runs_of(*rel);

      // [a_j, a_i] = [a_i, a_j]^{-1}
      NormalWord w_pp = tail_collect(rules, n, reversed_negated(r), j, max_steps);
      // [a_j, a_i^{-1}] = a_i [a_i, a_j] a_i^{-1}
      RunWord conj_i;
      conj_i.push_back({i, Int(1)});
      conj_i.insert(conj_i.end(), r.begin(), r.end());
      conj_i.push_back({i, Int(-1)});
      NormalWord w_mp = tail_collect(rules, n, std::move(conj_i), j, max_steps);
      // [a_j^{-1}, a_i] = a_j [a_i, a_j] a_j^{-1}
      RunWord conj_j;
      conj_j.push_back({j, Int(1)});
      conj_j.insert(conj_j.end(), r.begin(), r.end());
      conj_j.push_back({j, Int(-1)});
      NormalWord w_pm = tail_collect(rules, n, std::move(conj_j), j, max_steps);
      // [a_j^{-1}, a_i^{-1}] = a_j [a_j, a_i^{-1}]^{-1} a_j^{-1}
      RunWord conj_jm;
      conj_jm.push_back({j, Int(1)});
      RunWord w_mp_inv = reversed_negated(Collector::runs_of(w_mp));
      conj_jm.insert(conj_jm.end(), w_mp_inv.begin(), w_mp_inv.end());
      conj_jm.push_back({j, Int(-1)});
      NormalWord w_mm = tail_collect(rules, n, std::move(conj_jm), j, max_steps);

      rules.set(i, j, +1, +1, std::move(w_pp));
      rules.set(i, j, -1, +1, std::move(w_mp));
      rules.set(i, j, +1, -1, std::move(w_pm));
      rules.set(i, j, -1, -1, std::move(w_mm));
    }
  }
  return rules;
}

Collector::Collector(PolycyclicPresentation p, long long max_steps)
    : pres_(std::move(p)),
      rules_(derive_signed_rules(pres_, max_steps)),
      max_steps_(max_steps) {}

RunWord Collector::runs_of(const NormalWord& g) {
  RunWord runs;
  for (int k = 1; k <= g.size(); ++k)
    if (g.exp(k) != 0) runs.push_back({k, g.exp(k)});
  return runs;
}

NormalWord Collector::normal_form(const Word& w) const {
  CollectOptions opts;
  opts.max_steps = max_steps_;
  return normal_form(w, opts);
}

NormalWord Collector::normal_form(const Word& w, const CollectOptions& opts) const {
  RunWord runs;
  runs.reserve(w.syllables().size());
  for (const auto& [gen, exp] : w.syllables()) {
    if (gen < 1 || gen > pres_.generators())
      throw IndexError("word uses generator index out of range");
    runs.push_back({gen, exp});
  }
  return collect_word(rules_, pres_.generators(), std::move(runs), opts);
}

NormalWord Collector::normal_form_runs(RunWord runs) const {
  CollectOptions opts;
  opts.max_steps = max_steps_;
  return collect_word(rules_, pres_.generators(), std::move(runs), opts);
}

NormalWord Collector::multiply(const NormalWord& g, const NormalWord& h) const {
  RunWord runs = runs_of(g);
  RunWord hr = runs_of(h);
  runs.insert(runs.end(), hr.begin(), hr.end());
  return normal_form_runs(std::move(runs));
}

NormalWord Collector::invert(const NormalWord& g) const {
  RunWord runs = runs_of(g);
  std::reverse(runs.begin(), runs.end());
  for (Run& r : runs) r.exp = -r.exp;
  return normal_form_runs(std::move(runs));
}

NormalWord Collector::power(const NormalWord& g, const Int& e) const {
  NormalWord base = e < 0 ? invert(g) : g;
  Int todo = abs(e);
  NormalWord acc = NormalWord::identity(pres_.generators());
  while (todo > 0) {
    if (mpz_odd_p(todo.get_mpz_t())) acc = multiply(acc, base);
    todo >>= 1;
    if (todo > 0) base = multiply(base, base);
  }
  return acc;
}

}  // namespace nilrep
