#include "aomdd/uai.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace aomdd {
namespace {

// Whitespace tokenizer that remembers the current line for error messages.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    token.clear();
    int c;
    while ((c = in_.get()) != EOF && std::isspace(static_cast<unsigned char>(c))) {
      if (c == '\n') ++line_;
    }
    if (c == EOF) return false;
    token_line_ = line_;
    token.push_back(static_cast<char>(c));
    while ((c = in_.get()) != EOF && !std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(static_cast<char>(c));
    }
    if (c == '\n') ++line_;
    return true;
  }

  std::string require(const char* what) {
    std::string token;
    if (!next(token)) {
      fail(std::string("unexpected end of input, expected ") + what);
    }
    return token;
  }

  long require_int(const char* what) {
    const std::string token = require(what);
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) {
      fail(std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
  }

  double require_real(const char* what) {
    const std::string token = require(what);
    std::size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) {
      fail(std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    os << "line " << token_line_ << ": " << message;
    throw Error(os.str());
  }

 private:
  std::istream& in_;
  int line_ = 1;
  int token_line_ = 1;
};

}  // namespace

GraphicalModel parse_uai(std::istream& in) {
  Tokenizer tok(in);
  const std::string preamble = tok.require("MARKOV or BAYES preamble");
  if (preamble != "MARKOV" && preamble != "BAYES") {
    tok.fail("malformed header '" + preamble + "', expected MARKOV or BAYES");
  }
  const long n = tok.require_int("variable count");
  if (n < 0) tok.fail("negative variable count");
  std::vector<int> domains(static_cast<std::size_t>(n));
  for (long v = 0; v < n; ++v) {
    const long k = tok.require_int("domain size");
    if (k < 1) tok.fail("domain size must be at least 1");
    domains[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  const long r = tok.require_int("factor count");
  if (r < 0) tok.fail("negative factor count");
  std::vector<Factor> factors(static_cast<std::size_t>(r));
  for (long f = 0; f < r; ++f) {
    const long arity = tok.require_int("factor arity");
    if (arity < 0) tok.fail("negative factor arity");
    Factor& factor = factors[static_cast<std::size_t>(f)];
    factor.scope.resize(static_cast<std::size_t>(arity));
    for (long i = 0; i < arity; ++i) {
      const long v = tok.require_int("scope variable index");
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "factor " << f << ": variable index " << v << " out of range";
        tok.fail(os.str());
      }
      factor.scope[static_cast<std::size_t>(i)] = static_cast<VariableId>(v);
    }
  }
  for (long f = 0; f < r; ++f) {
    Factor& factor = factors[static_cast<std::size_t>(f)];
    std::size_t expected = 1;
    for (VariableId v : factor.scope) {
      expected *= static_cast<std::size_t>(domains[static_cast<std::size_t>(v)]);
    }
    const long count = tok.require_int("table entry count");
    if (count < 0 || static_cast<std::size_t>(count) != expected) {
      std::ostringstream os;
      os << "factor " << f << ": table has " << count << " entries, scope requires "
         << expected;
      tok.fail(os.str());
    }
    factor.table.resize(expected);
    for (std::size_t i = 0; i < expected; ++i) {
      const double x = tok.require_real("table entry");
      if (x < 0.0) {
        std::ostringstream os;
        os << "factor " << f << ": negative table entry " << x;
        tok.fail(os.str());
      }
      factor.table[i] = x;
    }
  }
  return GraphicalModel(std::move(domains), std::move(factors));
}

GraphicalModel parse_uai_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_uai(in);
}

void write_uai(const GraphicalModel& model, std::ostream& out) {
  out << "MARKOV\n" << model.num_variables() << "\n";
  for (int v = 0; v < model.num_variables(); ++v) {
    out << (v ? " " : "") << model.domain_size(v);
  }
  out << "\n" << model.factors().size() << "\n";
  for (const Factor& f : model.factors()) {
    out << f.scope.size();
    for (VariableId v : f.scope) out << " " << v;
    out << "\n";
  }
  out.precision(17);
  for (const Factor& f : model.factors()) {
    out << "\n" << f.table.size() << "\n";
    for (std::size_t i = 0; i < f.table.size(); ++i) {
      out << (i ? " " : "") << f.table[i];
    }
    out << "\n";
  }
}

std::vector<std::pair<VariableId, int>> parse_evidence(std::istream& in) {
  Tokenizer tok(in);
  const long count = tok.require_int("evidence count");
  if (count < 0) tok.fail("negative evidence count");
  std::vector<std::pair<VariableId, int>> evidence;
  evidence.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const long var = tok.require_int("evidence variable index");
    const long value = tok.require_int("evidence value index");
    evidence.emplace_back(static_cast<VariableId>(var), static_cast<int>(value));
  }
  return evidence;
}

std::vector<std::pair<VariableId, int>> parse_evidence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_evidence(in);
}

Assignment parse_assignment(std::istream& in, const GraphicalModel& model) {
  Tokenizer tok(in);
  Assignment a(static_cast<std::size_t>(model.num_variables()), -1);
  std::string token;
  while (tok.next(token)) {
    long var = 0;
    std::size_t pos = 0;
    try {
      var = std::stol(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) tok.fail("expected variable index, got '" + token + "'");
    if (var < 0 || var >= model.num_variables()) tok.fail("variable index out of range");
    const long value = tok.require_int("value index");
    if (value < 0 || value >= model.domain_size(static_cast<VariableId>(var))) {
      tok.fail("value index out of domain range");
    }
    a[static_cast<std::size_t>(var)] = static_cast<int>(value);
  }
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < 0) {
      std::ostringstream os;
      os << "assignment is partial: variable " << v << " has no value";
      throw Error(os.str());
    }
  }
  return a;
}

}  // namespace aomdd
