#include "lbsim/cnf.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <sstream>
#include <thread>

namespace lbsim {

CnfFormula::CnfFormula(int var_count, std::vector<Clause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  if (var_count_ < 0) throw Error("formula: negative variable count");
  if (clauses_.empty()) throw Error("formula: must have at least one clause");
  for (const Clause& c : clauses_) {
    if (c.literals.empty()) throw Error("formula: empty clause");
    for (const Literal& l : c.literals)
      if (l.var < 0 || l.var >= var_count_) throw Error("formula: literal variable out of range");
  }
  if (var_count_ <= 64) {
    pos_mask_.reserve(clauses_.size());
    neg_mask_.reserve(clauses_.size());
    for (const Clause& c : clauses_) {
      std::uint64_t pos = 0, neg = 0;
      for (const Literal& l : c.literals) (l.negated ? neg : pos) |= std::uint64_t(1) << l.var;
      pos_mask_.push_back(pos);
      neg_mask_.push_back(neg);
    }
  }
}

std::uint64_t CnfFormula::literal_count() const {
  std::uint64_t n = 0;
  for (const Clause& c : clauses_) n += c.literals.size();
  return n;
}

bool CnfFormula::evaluate_bits(std::uint64_t bits) const {
  for (std::size_t j = 0; j < pos_mask_.size(); ++j)
    if ((bits & pos_mask_[j]) == 0 && (~bits & neg_mask_[j]) == 0) return false;
  return true;
}

bool CnfFormula::evaluate(const Assignment& a) const {
  if (static_cast<int>(a.bits.size()) != var_count_)
    throw Error("evaluate: assignment length does not match variable count");
  if (!pos_mask_.empty()) {
    std::uint64_t bits = 0;
    for (int i = 0; i < var_count_; ++i)
      if (a.bits[i]) bits |= std::uint64_t(1) << i;
    return evaluate_bits(bits);
  }
  for (const Clause& c : clauses_) {
    bool sat = false;
    for (const Literal& l : c.literals)
      if (a.bits[l.var] != l.negated) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize_dimacs(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, lineno});
  }
  return out;
}

int parse_int(const Token& t, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("dimacs line " + std::to_string(t.line) + ": bad " + what + " '" + t.text + "'");
  }
  if (pos != t.text.size())
    throw ParseError("dimacs line " + std::to_string(t.line) + ": bad " + what + " '" + t.text + "'");
  return v;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  auto toks = tokenize_dimacs(in);
  std::size_t i = 0;
  if (toks.size() < 4 || toks[0].text != "p" || toks[1].text != "cnf")
    throw ParseError("dimacs: missing 'p cnf <vars> <clauses>' header");
  int vars = parse_int(toks[2], "variable count");
  int declared = parse_int(toks[3], "clause count");
  if (vars < 0 || declared < 0) throw ParseError("dimacs: negative header counts");
  i = 4;

  std::vector<Clause> clauses;
  Clause cur;
  for (; i < toks.size(); ++i) {
    if (toks[i].text == "p")
      throw ParseError("dimacs line " + std::to_string(toks[i].line) + ": duplicate header");
    int lit = parse_int(toks[i], "literal");
    if (lit == 0) {
      if (cur.literals.empty())
        throw ParseError("dimacs line " + std::to_string(toks[i].line) + ": empty clause");
      clauses.push_back(std::move(cur));
      cur = {};
      continue;
    }
    int var = std::abs(lit) - 1;  // DIMACS is 1-based
    if (var >= vars)
      throw ParseError("dimacs line " + std::to_string(toks[i].line) + ": literal " +
                       std::to_string(lit) + " out of range for " + std::to_string(vars) + " variables");
    Literal l{var, lit < 0};
    if (std::find(cur.literals.begin(), cur.literals.end(), l) == cur.literals.end())
      cur.literals.push_back(l);  // drop duplicate literals, keep x with ~x
  }
  if (!cur.literals.empty()) throw ParseError("dimacs: unterminated final clause (missing 0)");
  if (static_cast<int>(clauses.size()) != declared)
    throw ParseError("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(clauses.size()));
  return CnfFormula(vars, std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.literals) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

std::uint64_t count_models(const CnfFormula& f, int max_vars) {
  int n = f.var_count();
  if (n > max_vars || n > 62)
    throw CapacityError("count_models: " + std::to_string(n) + " variables exceeds enumeration cap of " +
                        std::to_string(std::min(max_vars, 62)));
  const std::uint64_t total = std::uint64_t(1) << n;
  auto count_range = [&f](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t c = 0;
    for (std::uint64_t b = lo; b < hi; ++b) c += f.evaluate_bits(b);
    return c;
  };
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (n < 18 || workers == 1) return count_range(0, total);

  std::uint64_t chunk = total / workers;
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
    parts.push_back(std::async(std::launch::async, count_range, lo, hi));
  }
  std::uint64_t sum = 0;
  for (auto& p : parts) sum += p.get();
  return sum;
}

}  // namespace lbsim
