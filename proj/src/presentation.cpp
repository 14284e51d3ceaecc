#include "nilrep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace nilrep {

bool NormalWord::is_identity() const {
  for (const Int& e : exps_)
    if (e != 0) return false;
  return true;
}

std::string NormalWord::str() const {
  std::string s = "(";
  for (size_t k = 0; k < exps_.size(); ++k) {
    if (k) s += ", ";
    s += exps_[k].get_str();
  }
  s += ")";
  return s;
}

Word::Word(std::initializer_list<std::pair<int, long>> sylls) {
  for (auto& [g, e] : sylls) push(g, Int(e));
}

void Word::push(int gen, Int exp) {
  if (exp != 0) sylls_.emplace_back(gen, std::move(exp));
}

Word Word::parse(const std::string& text, int n) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'g')
      throw SyntaxError("bad word token '" + tok + "'");
    size_t caret = tok.find('^');
    std::string idx_part = tok.substr(1, caret == std::string::npos
                                             ? std::string::npos
                                             : caret - 1);
    int gen = 0;
    try {
      size_t used = 0;
      gen = std::stoi(idx_part, &used);
      if (used != idx_part.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SyntaxError("bad generator index in '" + tok + "'");
    }
    if (gen < 1 || gen > n)
      throw IndexError("generator index out of range in '" + tok + "'");
    Int exp(1);
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || e == "-" ||
          e.find_first_not_of("-0123456789") != std::string::npos ||
          e.find('-', 1) != std::string::npos)
        throw SyntaxError("bad exponent in '" + tok + "'");
      exp = Int(e);
    }
    w.push(gen, exp);
  }
  return w;
}

PolycyclicPresentation PolycyclicPresentation::create(
    int n, std::vector<std::string> names, std::vector<int> weights,
    RelationMap relations) {
  if (n < 1) throw IndexError("generator count must be positive");
  if (names.empty()) {
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != n)
    throw SyntaxError("name list length does not match generator count");
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != n)
      throw WeightError("weight list length does not match generator count");
    for (int w : weights)
      if (w < 1) throw WeightError("weights must be positive");
  }

  RelationMap kept;
  for (auto& [pair, word] : relations) {
    auto [i, j] = pair;
    if (i < 1 || j > n || i >= j)
      throw IndexError("relation pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") violates 1 <= i < j <= n");
    if (word.size() != n)
      throw IndexError("relation word length does not match generator count");
    bool trivial = true;
    for (int k = 1; k <= n; ++k) {
      if (word.exp(k) == 0) continue;
      trivial = false;
      if (k <= j)
        throw IndexError("relation [a_" + std::to_string(i) + ", a_" +
                         std::to_string(j) + "] uses index " +
                         std::to_string(k) + " <= j");
      if (!weights.empty() &&
          weights[static_cast<size_t>(k - 1)] <
              weights[static_cast<size_t>(i - 1)] + weights[static_cast<size_t>(j - 1)])
        throw WeightError("commutator weight inequality fails at (" +
                          std::to_string(i) + ", " + std::to_string(j) +
                          ") -> " + std::to_string(k));
    }
    if (!trivial) kept.emplace(pair, std::move(word));
  }

  PolycyclicPresentation p;
  p.n_ = n;
  p.names_ = std::move(names);
  p.weights_ = std::move(weights);
  p.relations_ = std::move(kept);
  return p;
}

int PolycyclicPresentation::weight(int i) const {
  if (weights_.empty()) throw WeightError("presentation has no weights");
  return weights_[static_cast<size_t>(i - 1)];
}

int PolycyclicPresentation::nilpotency_class() const {
  if (weights_.empty()) throw WeightError("presentation has no weights");
  return *std::max_element(weights_.begin(), weights_.end());
}

int PolycyclicPresentation::weight_one_generators() const {
  if (weights_.empty()) throw WeightError("presentation has no weights");
  return static_cast<int>(std::count(weights_.begin(), weights_.end(), 1));
}

const NormalWord* PolycyclicPresentation::relation(int i, int j) const {
  auto it = relations_.find({i, j});
  return it == relations_.end() ? nullptr : &it->second;
}

std::string PolycyclicPresentation::serialize() const {
  std::ostringstream out;
  out << "pcgroup\n";
  out << "n " << n_ << "\n";
  out << "names";
  for (const auto& nm : names_) out << " " << nm;
  out << "\n";
  if (!weights_.empty()) {
    out << "weights";
    for (int w : weights_) out << " " << w;
    out << "\n";
  }
  for (const auto& [pair, word] : relations_) {
    out << "rel " << pair.first << " " << pair.second << " =";
    for (int k = 1; k <= n_; ++k)
      if (word.exp(k) != 0) out << " " << k << ":" << word.exp(k).get_str();
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

namespace {

// Strips '#' comments and surrounding blanks; empty result means skip.
std::string clean_line(std::string line) {
  size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

PolycyclicPresentation PolycyclicPresentation::parse_stream(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    std::string c = clean_line(line);
    if (!c.empty()) lines.push_back(c);
  }
  size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= lines.size()) throw SyntaxError("unexpected end of presentation");
    return lines[pos++];
  };

  if (next() != "pcgroup") throw SyntaxError("file must start with 'pcgroup'");

  int n = -1;
  std::vector<std::string> names;
  std::vector<int> weights;
  RelationMap relations;
  bool ended = false;

  while (!ended) {
    std::istringstream ls(next());
    std::string key;
    ls >> key;
    if (key == "end") {
      std::string extra;
      if (ls >> extra) throw SyntaxError("tokens after 'end'");
      ended = true;
    } else if (key == "n") {
      if (n >= 0) throw SyntaxError("duplicate 'n' line");
      std::string tok;
      if (!(ls >> tok)) throw SyntaxError("missing generator count");
      n = parse_int(tok, "generator count");
      if (n < 1) throw SyntaxError("generator count must be positive");
    } else if (key == "names") {
      if (n < 0) throw SyntaxError("'names' before 'n'");
      if (!names.empty()) throw SyntaxError("duplicate 'names' line");
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      if (static_cast<int>(names.size()) != n)
        throw SyntaxError("'names' must list exactly n identifiers");
    } else if (key == "weights") {
      if (n < 0) throw SyntaxError("'weights' before 'n'");
      if (!weights.empty()) throw SyntaxError("duplicate 'weights' line");
      std::string tok;
      while (ls >> tok) weights.push_back(parse_int(tok, "weight"));
      if (static_cast<int>(weights.size()) != n)
        throw SyntaxError("'weights' must list exactly n integers");
    } else if (key == "rel") {
      if (n < 0) throw SyntaxError("'rel' before 'n'");
      std::string ti, tj, eq;
      if (!(ls >> ti >> tj >> eq) || eq != "=")
        throw SyntaxError("relation line must read 'rel i j = k:c ...'");
      int i = parse_int(ti, "relation index");
      int j = parse_int(tj, "relation index");
      if (i < 1 || j > n || i >= j)
        throw IndexError("relation pair must satisfy 1 <= i < j <= n");
      if (relations.count({i, j}))
        throw SyntaxError("duplicate relation for pair (" + ti + ", " + tj + ")");
      NormalWord word(n);
      int last_k = j;
      std::string term;
      bool any = false;
      while (ls >> term) {
        size_t colon = term.find(':');
        if (colon == std::string::npos)
          throw SyntaxError("relation term must be 'k:c'");
        int k = parse_int(term.substr(0, colon), "relation target index");
        std::string cs = term.substr(colon + 1);
        if (cs.empty() || cs == "-" ||
            cs.find_first_not_of("-0123456789") != std::string::npos ||
            cs.find('-', 1) != std::string::npos)
          throw SyntaxError("bad relation coefficient '" + cs + "'");
        Int c(cs);
        if (c == 0) throw SyntaxError("relation coefficient must be nonzero");
        if (k <= j || k > n)
          throw IndexError("relation target index must satisfy j < k <= n");
        if (k <= last_k && any)
          throw SyntaxError("relation target indices must be strictly increasing");
        if (k <= j) throw IndexError("relation target index must exceed j");
        word.exp(k) = c;
        last_k = k;
        any = true;
      }
      if (!any) throw SyntaxError("relation line lists no terms");
      relations.emplace(std::make_pair(i, j), std::move(word));
    } else {
      throw SyntaxError("unknown line '" + key + "'");
    }
  }
  if (pos != lines.size()) throw SyntaxError("content after 'end'");
  if (n < 0) throw SyntaxError("missing 'n' line");
  return create(n, std::move(names), std::move(weights), std::move(relations));
}

PolycyclicPresentation PolycyclicPresentation::parse(const std::string& text) {
  std::istringstream in(text);
  return parse_stream(in);
}

std::vector<std::pair<int, int>> ut_generator_labels(int m, UtOrder order) {
  if (m < 2) throw Error("ut requires m >= 2");
  std::vector<std::pair<int, int>> labels;
  labels.reserve(static_cast<size_t>(m * (m - 1) / 2));
  if (order == UtOrder::standard) {
    // Diagonal-major: s_{1,2}, s_{2,3}, ..., then s_{1,3}, s_{2,4}, ...
    for (int d = 1; d < m; ++d)
      for (int i = 1; i + d <= m; ++i) labels.emplace_back(i, i + d);
  } else {
    // Column-major, rows bottom-up: s_{1,2}; s_{2,3}, s_{1,3}; s_{3,4}, ...
    for (int j = 2; j <= m; ++j)
      for (int i = j - 1; i >= 1; --i) labels.emplace_back(i, j);
  }
  return labels;
}

PolycyclicPresentation builtin_ut(int m, UtOrder order) {
  auto labels = ut_generator_labels(m, order);
  int n = static_cast<int>(labels.size());
  std::map<std::pair<int, int>, int> position;
  for (int k = 1; k <= n; ++k) position[labels[static_cast<size_t>(k - 1)]] = k;

  std::vector<std::string> names;
  std::vector<int> weights;
  for (auto& [i, j] : labels) {
    names.push_back("s_" + std::to_string(i) + "_" + std::to_string(j));
    weights.push_back(j - i);
  }

  // [s_{i,j}, s_{j,l}] = s_{i,l} and [s_{i,j}, s_{k,i}] = s_{k,j}^{-1}.
  PolycyclicPresentation::RelationMap rels;
  for (int p = 1; p <= n; ++p) {
    auto [i, j] = labels[static_cast<size_t>(p - 1)];
    for (int q = p + 1; q <= n; ++q) {
      auto [k, l] = labels[static_cast<size_t>(q - 1)];
      NormalWord word(n);
      if (j == k)
        word.exp(position.at({i, l})) = 1;
      else if (l == i)
        word.exp(position.at({k, j})) = -1;
      else
        continue;
      rels.emplace(std::make_pair(p, q), std::move(word));
    }
  }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

PolycyclicPresentation builtin_heisenberg(int m) {
  if (m < 1) throw Error("heisenberg requires m >= 1");
  int n = 2 * m + 1;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<int> weights(static_cast<size_t>(n), 1);
  weights.back() = 2;
  PolycyclicPresentation::RelationMap rels;
  for (int i = 1; i <= m; ++i) {
    NormalWord word(n);
    word.exp(n) = 1;
    rels.emplace(std::make_pair(i, m + i), std::move(word));
  }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

PolycyclicPresentation builtin_free_abelian(int k) {
  if (k < 1) throw Error("free_abelian requires k >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  return PolycyclicPresentation::create(k, std::move(names),
                                        std::vector<int>(static_cast<size_t>(k), 1),
                                        {});
}

PolycyclicPresentation builtin_free_nilpotent_c2(int k) {
  if (k < 1) throw Error("free_nilpotent_c2 requires k >= 1");
  if (k == 1) return builtin_free_abelian(1);
  int n = k + k * (k - 1) / 2;
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= k; ++i) {
    names.push_back("e" + std::to_string(i));
    weights.push_back(1);
  }
  PolycyclicPresentation::RelationMap rels;
  int pos = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      ++pos;
      names.push_back("c_" + std::to_string(i) + "_" + std::to_string(j));
      weights.push_back(2);
      NormalWord word(n);
      word.exp(pos) = 1;
      rels.emplace(std::make_pair(i, j), std::move(word));
    }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

PolycyclicPresentation builtin_filiform(int c) {
  if (c < 1) throw Error("filiform requires c >= 1");
  int n = c + 1;
  std::vector<std::string> names;
  names.push_back("a");
  for (int i = 1; i <= c; ++i) names.push_back("f" + std::to_string(i));
  std::vector<int> weights;
  weights.push_back(1);
  for (int i = 1; i <= c; ++i) weights.push_back(i == 1 ? 1 : i);
  // [a, f_i] = f_{i+1}^{-1}, so conjugation gives f_i^a = f_i f_{i+1}.
  PolycyclicPresentation::RelationMap rels;
  for (int i = 1; i < c; ++i) {
    NormalWord word(n);
    word.exp(i + 2) = -1;
    rels.emplace(std::make_pair(1, i + 1), std::move(word));
  }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

namespace {

std::vector<std::string> suffixed(const std::vector<std::string>& names,
                                  const char* suffix) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& nm : names) out.push_back(nm + suffix);
  return out;
}

bool last_generator_central(const PolycyclicPresentation& p) {
  int n = p.generators();
  for (int i = 1; i < n; ++i)
    if (!p.commutes(i, n)) return false;
  return true;
}

}  // namespace

PolycyclicPresentation direct_product(const PolycyclicPresentation& a,
                                      const PolycyclicPresentation& b) {
  int na = a.generators(), nb = b.generators();
  int n = na + nb;
  std::vector<std::string> names = suffixed(a.names(), "_1");
  for (auto& nm : suffixed(b.names(), "_2")) names.push_back(nm);
  std::vector<int> weights;
  if (a.has_weights() && b.has_weights()) {
    weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  }
  PolycyclicPresentation::RelationMap rels;
  for (const auto& [pair, word] : a.relations()) {
    NormalWord w(n);
    for (int k = 1; k <= na; ++k) w.exp(k) = word.exp(k);
    rels.emplace(pair, std::move(w));
  }
  for (const auto& [pair, word] : b.relations()) {
    NormalWord w(n);
    for (int k = 1; k <= nb; ++k) w.exp(na + k) = word.exp(k);
    rels.emplace(std::make_pair(pair.first + na, pair.second + na), std::move(w));
  }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

PolycyclicPresentation central_product(const PolycyclicPresentation& a,
                                       const PolycyclicPresentation& b) {
  if (!last_generator_central(a))
    throw CentralityError("last generator of the left factor is not central");
  if (!last_generator_central(b))
    throw CentralityError("last generator of the right factor is not central");
  int na = a.generators(), nb = b.generators();
  int n = na - 1 + nb;  // a's last generator is identified with b's last
  int last = n;

  std::vector<std::string> names = suffixed(a.names(), "_1");
  names.pop_back();
  for (auto& nm : suffixed(b.names(), "_2")) names.push_back(nm);

  std::vector<int> weights;
  if (a.has_weights() && b.has_weights()) {
    weights.assign(a.weights().begin(), a.weights().end() - 1);
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    weights[static_cast<size_t>(last - 1)] =
        std::max(a.weight(na), b.weight(nb));
  }

  PolycyclicPresentation::RelationMap rels;
  for (const auto& [pair, word] : a.relations()) {
    // Pairs (i, na) are trivial by centrality, so indices stay below na.
    NormalWord w(n);
    for (int k = 1; k < na; ++k) w.exp(k) = word.exp(k);
    w.exp(last) = word.exp(na);
    rels.emplace(pair, std::move(w));
  }
  for (const auto& [pair, word] : b.relations()) {
    NormalWord w(n);
    for (int k = 1; k <= nb; ++k) w.exp(na - 1 + k) = word.exp(k);
    rels.emplace(std::make_pair(pair.first + na - 1, pair.second + na - 1),
                 std::move(w));
  }
  return PolycyclicPresentation::create(n, std::move(names), std::move(weights),
                                        std::move(rels));
}

}  // namespace nilrep
