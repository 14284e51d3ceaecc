#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "nilrep/collect.hpp"
#include "nilrep/jennings.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/nickel.hpp"

namespace nilrep {

struct VerifyOptions {
  int samples = 200;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  bool relations_ok = true;
  bool homomorphism_ok = true;
  bool injectivity_ok = true;
  bool shape_ok = true;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return relations_ok && homomorphism_ok && injectivity_ok && shape_ok;
  }
  std::string summary() const;
};

// Audits one matrix representation: defining relations, the homomorphism
// law on random word pairs, injectivity on random normal forms, and the
// unitriangular shape. Deterministic for a fixed seed; failing checks are
// reported, never thrown.
VerifyReport verify_representation(const PolycyclicPresentation& p,
                                   const MatrixRepresentation& rep,
                                   const Collector& coll,
                                   const VerifyOptions& opts = {});

// Random words: letters uniform over generators and signs, length uniform
// in [1, 4c].
Word random_word(const PolycyclicPresentation& p, std::mt19937_64& rng);
NormalWord random_normal_word(const PolycyclicPresentation& p,
                              std::mt19937_64& rng, int range = 4);

// Reference normal form for unitriangular builtins via literal m x m
// elementary-matrix products and peeling; independent of collection.
NormalWord ut_matrix_normal_form(int m, UtOrder order, const Word& w);

struct DimRow {
  std::string group;
  int n = 0;
  int c = 0;
  long nickel = -1;    // -1 when skipped
  Int jennings;        // negative when skipped
  std::vector<std::pair<std::string, bool>> bounds;
  bool skipped = false;
  std::string note;
};

struct DimensionReport {
  std::vector<DimRow> rows;
  bool all_pass() const;
  std::string table() const;
};

// family: heisenberg | ut | free_abelian | free_nilpotent_c2 | filiform
DimensionReport dims_report(const std::string& family, int lo, int hi,
                            UtOrder order = UtOrder::standard,
                            size_t max_dim = 5000);

struct ProductReport {
  long dim_a = 0, dim_b = 0, dim_direct = 0, dim_central = -1;
  bool direct_ok = false;
  bool central_ok = false;
  bool central_defined = false;
  std::string summary() const;
};
ProductReport product_report(const PolycyclicPresentation& a,
                             const PolycyclicPresentation& b);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

// Runs the full reproduction suite; one result per criterion.
std::vector<CriterionResult> paper_report(std::ostream* progress = nullptr);
// Prints one pass/fail line per criterion; returns true when all pass.
bool print_report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace nilrep
