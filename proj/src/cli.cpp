#include "nilrep/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilrep/collect.hpp"
#include "nilrep/jennings.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/nickel.hpp"
#include "nilrep/presentation.hpp"
#include "nilrep/verify.hpp"

namespace nilrep {

namespace {

using nlohmann::json;

PolycyclicPresentation load_presentation_file(const std::string& path) {
  if (path == "-") return PolycyclicPresentation::parse_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return PolycyclicPresentation::parse_stream(in);
}

UtOrder parse_order(const std::string& name) {
  if (name == "standard") return UtOrder::standard;
  if (name == "column") return UtOrder::column;
  throw Error("order must be 'standard' or 'column'");
}

// "heisenberg:2", "ut:4:standard", "free_abelian:3", "free_nilpotent_c2:2",
// "filiform:4", or a file path.
PolycyclicPresentation load_group(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string family = spec.substr(0, colon);
    std::vector<std::string> args;
    std::stringstream rest(spec.substr(colon + 1));
    std::string piece;
    while (std::getline(rest, piece, ':')) args.push_back(piece);
    auto arg_int = [&](size_t t) {
      try {
        return std::stoi(args.at(t));
      } catch (const std::exception&) {
        throw Error("bad builtin spec '" + spec + "'");
      }
    };
    if (family == "heisenberg") return builtin_heisenberg(arg_int(0));
    if (family == "ut")
      return builtin_ut(arg_int(0), args.size() > 1 ? parse_order(args[1])
                                                    : UtOrder::standard);
    if (family == "free_abelian") return builtin_free_abelian(arg_int(0));
    if (family == "free_nilpotent_c2") return builtin_free_nilpotent_c2(arg_int(0));
    if (family == "filiform") return builtin_filiform(arg_int(0));
    throw Error("unknown builtin family '" + family + "'");
  }
  return load_presentation_file(spec);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open '" + out_path + "' for writing");
  out << content;
}

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json representation_json(const MatrixRepresentation& rep, const std::string& group) {
  json j;
  j["group"] = group;
  j["method"] = rep.method;
  j["convention"] = rep.convention;
  j["dimension"] = rep.dimension;
  j["basis"] = rep.basis;
  json gens = json::array();
  for (size_t g = 0; g < rep.generators.size(); ++g) {
    json entry;
    entry["name"] = rep.generator_names[g];
    json rows = json::array();
    const IntMatrix& m = rep.generators[g];
    for (int r = 0; r < m.size(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.size(); ++c) row.push_back(int_json(m.at(r, c)));
      rows.push_back(row);
    }
    entry["matrix"] = rows;
    gens.push_back(entry);
  }
  j["generators"] = gens;
  return j;
}

std::vector<Polynomial> parse_seed_list(const std::string& text, int n) {
  std::vector<Polynomial> seeds;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.size() < 2 || piece[0] != 't')
      throw Error("seed tokens look like t1,t2,...");
    int k = 0;
    try {
      k = std::stoi(piece.substr(1));
    } catch (const std::exception&) {
      throw Error("bad seed token '" + piece + "'");
    }
    if (k < 1 || k > n) throw Error("seed index out of range");
    seeds.push_back(Polynomial::variable(k));
  }
  if (seeds.empty()) throw Error("empty seed list");
  return seeds;
}

struct CommonOpts {
  std::string format = "text";
  std::string out;
  long long max_steps = 10'000'000;
  long max_dim = 5000;
  int samples = 200;
  std::uint64_t seed = 1;
};

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"unitriangular integer matrix embeddings of torsion-free nilpotent groups"};
  app.require_subcommand(1);
  CommonOpts opt;

  // builtin
  auto* cmd_builtin = app.add_subcommand("builtin", "print a built-in presentation");
  std::string b_family, b_order = "standard";
  int b_param = 0;
  cmd_builtin->add_option("family", b_family,
                          "heisenberg|ut|free_abelian|free_nilpotent_c2|filiform")
      ->required();
  cmd_builtin->add_option("param", b_param, "family parameter")->required();
  cmd_builtin->add_option("--order", b_order, "standard|column");
  cmd_builtin->add_option("--out", opt.out, "output path ('-' = stdout)");
  cmd_builtin->allow_extras();

  // normalform
  auto* cmd_nf = app.add_subcommand("normalform", "collect a word to its normal form");
  std::string nf_file, nf_word;
  cmd_nf->add_option("file", nf_file, "presentation file or '-'")->required();
  cmd_nf->add_option("word", nf_word, "word, e.g. \"g2 g1^-3\"")->required();
  cmd_nf->add_option("--format", opt.format, "text|json");
  cmd_nf->add_option("--max-steps", opt.max_steps, "rewrite budget");

  // multpolys
  auto* cmd_mp = app.add_subcommand("multpolys", "restricted multiplication polynomials");
  std::string mp_file;
  int mp_gen = 0;
  cmd_mp->add_option("file", mp_file, "presentation file or '-'")->required();
  cmd_mp->add_option("--generator", mp_gen, "only this right-hand generator");
  cmd_mp->add_option("--format", opt.format, "text|json");
  cmd_mp->add_option("--out", opt.out, "output path");

  // census
  auto* cmd_census = app.add_subcommand("census", "monomial census of the symbolic product");
  std::string census_family;
  int census_m = 0;
  cmd_census->add_option("family", census_family, "only 'ut'")->required();
  cmd_census->add_option("m", census_m, "matrix size")->required();
  cmd_census->add_option("--format", opt.format, "text|json");
  cmd_census->add_option("--out", opt.out, "output path");

  // embed
  auto* cmd_embed = app.add_subcommand("embed", "compute a matrix embedding");
  std::string e_method, e_file, e_seeds;
  bool e_count_only = false;
  cmd_embed->add_option("method", e_method, "nickel|jennings")->required();
  cmd_embed->add_option("file", e_file, "presentation file or '-'")->required();
  cmd_embed->add_option("--seeds", e_seeds, "module seeds, e.g. t1,t2");
  cmd_embed->add_flag("--count-only", e_count_only, "print the dimension only");
  cmd_embed->add_option("--out", opt.out, "output path");
  cmd_embed->add_option("--format", opt.format, "text|json");
  cmd_embed->add_option("--max-dim", opt.max_dim, "dimension budget");
  cmd_embed->add_option("--max-steps", opt.max_steps, "rewrite budget");

  // dims
  auto* cmd_dims = app.add_subcommand("dims", "dimension table for a family");
  std::string d_family, d_range, d_order = "standard";
  cmd_dims->add_option("family", d_family,
                       "heisenberg|ut|free_abelian|free_nilpotent_c2|filiform")
      ->required();
  cmd_dims->add_option("range", d_range, "e.g. 3..6 or 4")->required();
  cmd_dims->add_option("--order", d_order, "standard|column");
  cmd_dims->add_option("--max-dim", opt.max_dim, "dimension budget");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "audit a computed embedding");
  std::string v_file, v_method = "nickel";
  cmd_verify->add_option("file", v_file, "presentation file or '-'")->required();
  cmd_verify->add_option("--embedding", v_method, "nickel|jennings");
  cmd_verify->add_option("--samples", opt.samples, "random samples");
  cmd_verify->add_option("--seed", opt.seed, "random seed");
  cmd_verify->add_option("--max-dim", opt.max_dim, "dimension budget");

  // product
  auto* cmd_product = app.add_subcommand("product", "direct/central product dimensions");
  std::string p_a, p_b;
  cmd_product->add_option("a", p_a, "group spec or file")->required();
  cmd_product->add_option("b", p_b, "group spec or file")->required();
  cmd_product->add_option("--format", opt.format, "text|json");

  // report
  auto* cmd_report = app.add_subcommand("report", "run the reproduction suite");
  std::string r_what;
  cmd_report->add_option("what", r_what, "only 'paper'")->required();

  std::vector<const char*> argv;
  argv.push_back("nilrep");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "nilrep: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (*cmd_builtin) {
      PolycyclicPresentation p = [&]() {
        if (b_family == "heisenberg") return builtin_heisenberg(b_param);
        if (b_family == "ut") return builtin_ut(b_param, parse_order(b_order));
        if (b_family == "free_abelian") return builtin_free_abelian(b_param);
        if (b_family == "free_nilpotent_c2") return builtin_free_nilpotent_c2(b_param);
        if (b_family == "filiform") return builtin_filiform(b_param);
        throw Error("unknown builtin family '" + b_family + "'");
      }();
      write_output(opt.out, p.serialize());
      return 0;
    }

    if (*cmd_nf) {
      PolycyclicPresentation p = load_presentation_file(nf_file);
      Collector coll(p, opt.max_steps);
      NormalWord nf = coll.normal_form(Word::parse(nf_word, p.generators()));
      if (opt.format == "json") {
        json j;
        json exps = json::array();
        for (const Int& e : nf.exponents()) exps.push_back(int_json(e));
        j["exponents"] = exps;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << nf.str() << "\n";
      }
      return 0;
    }

    if (*cmd_mp) {
      PolycyclicPresentation p = load_presentation_file(mp_file);
      Collector coll(p);
      MonomialOrder ord(p.weights());
      std::vector<int> gens;
      if (mp_gen > 0)
        gens.push_back(mp_gen);
      else
        for (int j = 1; j <= p.generators(); ++j) gens.push_back(j);
      if (opt.format == "json") {
        json out = json::array();
        for (int j : gens) {
          auto polys = restricted_mult_polys_for(p, coll, j);
          json entry;
          entry["generator"] = j;
          json list = json::array();
          for (const Polynomial& q : polys) list.push_back(q.str(&ord));
          entry["polys"] = list;
          out.push_back(entry);
        }
        write_output(opt.out, out.dump(2));
      } else {
        std::ostringstream text;
        for (int j : gens) {
          auto polys = restricted_mult_polys_for(p, coll, j);
          for (size_t i = 0; i < polys.size(); ++i)
            text << "q" << (i + 1) << "^(" << j << ") = " << polys[i].str(&ord)
                 << "\n";
        }
        write_output(opt.out, text.str());
      }
      return 0;
    }

    if (*cmd_census) {
      if (census_family != "ut") throw Error("census supports only the 'ut' family");
      CensusTable table = monomial_census_ut(census_m);
      if (opt.format == "json") {
        json j;
        j["m"] = table.m;
        j["total_actual"] = table.total_actual;
        j["total_bound"] = table.total_bound;
        j["grand_bound"] = int_json(table.grand_bound);
        j["within_bounds"] = table.within_bounds;
        json rows = json::array();
        for (const CensusRow& row : table.rows) {
          json r;
          r["k"] = row.k;
          r["l"] = row.l;
          r["actual"] = row.actual;
          r["bound"] = row.bound;
          rows.push_back(r);
        }
        j["rows"] = rows;
        write_output(opt.out, j.dump(2));
      } else {
        std::ostringstream text;
        text << "pair (k,l)   monomials   bound 2*3^(l-1-k)\n";
        for (const CensusRow& row : table.rows)
          text << "(" << row.k << "," << row.l << ")"
               << std::string(row.l >= 10 ? 6 : 8, ' ') << row.actual << "   "
               << row.bound << "\n";
        text << "total " << table.total_actual << " <= " << table.total_bound
             << " <= 3^" << table.m << " = " << table.grand_bound.get_str() << " ["
             << (table.within_bounds ? "pass" : "FAIL") << "]\n";
        write_output(opt.out, text.str());
      }
      return 0;
    }

    if (*cmd_embed) {
      PolycyclicPresentation p = load_presentation_file(e_file);
      Collector coll(p, opt.max_steps);
      MatrixRepresentation rep;
      if (e_method == "nickel") {
        RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
        ClosureOptions copts;
        copts.max_dim = static_cast<size_t>(opt.max_dim);
        std::vector<Polynomial> seeds;
        if (!e_seeds.empty()) seeds = parse_seed_list(e_seeds, p.generators());
        ModuleBasis basis = closure(p, rmp, seeds, copts);
        if (e_count_only) {
          std::cout << basis.size() << "\n";
          return 0;
        }
        rep = extract_matrices(p, basis, rmp);
      } else if (e_method == "jennings") {
        if (e_count_only) {
          std::cout << jennings_dimension(p).get_str() << "\n";
          return 0;
        }
        rep = jennings_matrices(p, coll, static_cast<size_t>(opt.max_dim));
      } else {
        throw Error("embedding method must be 'nickel' or 'jennings'");
      }
      std::string group_desc = e_file == "-" ? "stdin" : e_file;
      if (opt.format == "text") {
        std::ostringstream text;
        text << "method " << rep.method << ", dimension " << rep.dimension << "\n";
        for (size_t g = 0; g < rep.generators.size(); ++g)
          text << rep.generator_names[g] << " ->\n"
               << rep.generators[g].str() << "\n";
        write_output(opt.out, text.str());
      } else {
        write_output(opt.out, representation_json(rep, group_desc).dump(2));
      }
      return 0;
    }

    if (*cmd_dims) {
      int lo = 0, hi = 0;
      size_t dots = d_range.find("..");
      try {
        if (dots == std::string::npos) {
          lo = hi = std::stoi(d_range);
        } else {
          lo = std::stoi(d_range.substr(0, dots));
          hi = std::stoi(d_range.substr(dots + 2));
        }
      } catch (const std::exception&) {
        throw Error("bad range '" + d_range + "'");
      }
      DimensionReport report = dims_report(d_family, lo, hi, parse_order(d_order),
                                           static_cast<size_t>(opt.max_dim));
      std::cout << report.table();
      return report.all_pass() ? 0 : 1;
    }

    if (*cmd_verify) {
      PolycyclicPresentation p = load_presentation_file(v_file);
      Collector coll(p, opt.max_steps);
      MatrixRepresentation rep;
      if (v_method == "nickel") {
        RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
        ClosureOptions copts;
        copts.max_dim = static_cast<size_t>(opt.max_dim);
        ModuleBasis basis = closure(p, rmp, {}, copts);
        rep = extract_matrices(p, basis, rmp);
      } else if (v_method == "jennings") {
        rep = jennings_matrices(p, coll, static_cast<size_t>(opt.max_dim));
      } else {
        throw Error("embedding method must be 'nickel' or 'jennings'");
      }
      VerifyOptions vopts;
      vopts.samples = opt.samples;
      vopts.seed = opt.seed;
      VerifyReport vr = verify_representation(p, rep, coll, vopts);
      std::cout << vr.summary() << "\n";
      return vr.ok() ? 0 : 1;
    }

    if (*cmd_product) {
      ProductReport report = product_report(load_group(p_a), load_group(p_b));
      if (opt.format == "json") {
        json j;
        j["dim_a"] = report.dim_a;
        j["dim_b"] = report.dim_b;
        j["dim_direct"] = report.dim_direct;
        j["direct_ok"] = report.direct_ok;
        j["central_defined"] = report.central_defined;
        if (report.central_defined) {
          j["dim_central"] = report.dim_central;
          j["central_ok"] = report.central_ok;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << report.summary() << "\n";
      }
      bool ok = report.direct_ok && (!report.central_defined || report.central_ok);
      return ok ? 0 : 1;
    }

    if (*cmd_report) {
      if (r_what != "paper") throw Error("only 'report paper' is available");
      std::vector<CriterionResult> results = paper_report(&std::cerr);
      bool all = print_report(results, std::cout);
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "nilrep: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "nilrep: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}

}  // namespace nilrep
