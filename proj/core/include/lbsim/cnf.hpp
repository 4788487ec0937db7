#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lbsim/errors.hpp"

namespace lbsim {

/// One literal: variable index (0-based) plus sign.  DIMACS text is 1-based;
/// the offset is applied at parse/serialize time only.
struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals.  Never empty; duplicates are removed on parse but
/// complementary pairs (x, ~x) are kept, so tautological clauses survive.
struct Clause {
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Total truth assignment, bit i = value of variable i.
struct Assignment {
  std::vector<bool> bits;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Validated CNF formula over variables 0..var_count-1 with at least one
/// clause.  Keeps per-clause sign masks for bit-parallel evaluation when
/// var_count <= 64.
class CnfFormula {
 public:
  CnfFormula(int var_count, std::vector<Clause> clauses);

  int var_count() const { return var_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Total number of literal occurrences.
  std::uint64_t literal_count() const;

  bool evaluate(const Assignment& a) const;

  /// Variable i = bit i of `bits`; requires var_count <= 64.
  bool evaluate_bits(std::uint64_t bits) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int var_count_;
  std::vector<Clause> clauses_;
  // clause satisfied by `bits`  <=>  (bits & pos) != 0 || (~bits & neg) != 0
  std::vector<std::uint64_t> pos_mask_, neg_mask_;
};

/// Strict DIMACS cnf reader: one "p cnf <vars> <clauses>" header, clauses
/// terminated by 0, comment lines starting with 'c'.  Declared counts must
/// match, variables must be in range, empty clauses are rejected.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

std::string to_dimacs(const CnfFormula& f);

/// Exact model count by exhaustive enumeration, partitioned across hardware
/// threads.  Refuses var_count > max_vars (default 30) with CapacityError.
std::uint64_t count_models(const CnfFormula& f, int max_vars = 30);

}  // namespace lbsim
