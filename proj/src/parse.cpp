#include "stanley/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, col);
  }
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string read_word(Cursor& cur) {
  cur.skip_spaces();
  std::string word;
  while (!cur.done() && ident_char(cur.peek())) word += cur.take();
  if (word.empty()) cur.fail("expected a word");
  return word;
}

int read_int(Cursor& cur, const char* what) {
  cur.skip_spaces();
  std::string digits;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
    digits += cur.take();
  if (digits.empty()) cur.fail(std::string("expected ") + what);
  long long value = 0;
  for (char c : digits) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000) cur.fail(std::string(what) + " is too large");
  }
  return static_cast<int>(value);
}

int read_variable(Cursor& cur, const Ring& ring) {
  cur.skip_spaces();
  int line = cur.line, col = cur.col;
  std::string name;
  while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
                         cur.peek() == '_'))
    name += cur.take();
  if (name.empty()) cur.fail("expected a variable name");
  int j = ring.var_index(name);
  if (j < 0)
    throw ParseError("undeclared variable '" + name + "'", line, col);
  return j;
}

int read_exponent(Cursor& cur) {
  cur.skip_spaces();
  if (cur.peek() != '^') return 1;
  cur.take();
  int line = cur.line, col = cur.col;
  int e = read_int(cur, "an exponent");
  if (e < 1) throw ParseError("exponent must be positive", line, col);
  return e;
}

Monomial read_monomial(Cursor& cur, const Ring& ring) {
  std::vector<int> exps(ring.var_count(), 0);
  for (;;) {
    int j = read_variable(cur, ring);
    exps[j] += read_exponent(cur);
    cur.skip_spaces();
    if (cur.peek() != '*') break;
    cur.take();
  }
  return Monomial(ring, std::move(exps));
}

IrreducibleComponent read_component(Cursor& cur, const Ring& ring) {
  cur.skip_spaces();
  if (cur.peek() != '(') cur.fail("expected '(' starting a component");
  cur.take();
  std::vector<std::pair<int, int>> powers;
  for (;;) {
    int j = read_variable(cur, ring);
    int e = read_exponent(cur);
    powers.emplace_back(j, e);
    cur.skip_spaces();
    if (cur.peek() == ',') {
      cur.take();
      continue;
    }
    if (cur.peek() == ')') {
      cur.take();
      break;
    }
    cur.fail("expected ',' or ')' in a component");
  }
  return IrreducibleComponent::from_pairs(ring, powers);
}

}  // namespace

IdealDocument parse_document(const std::string& text) {
  Cursor cur(text);

  // Statements are ';'- or newline-separated; 'ring N' must come first.
  auto at_separator = [&]() {
    return cur.done() || cur.peek() == ';' || cur.peek() == '\n';
  };
  auto skip_separators = [&]() {
    cur.skip_spaces();
    while (!cur.done() && (cur.peek() == ';' || cur.peek() == '\n')) {
      cur.take();
      cur.skip_spaces();
    }
  };
  auto expect_end_of_statement = [&]() {
    cur.skip_spaces();
    if (!at_separator()) cur.fail("unexpected trailing input in statement");
  };

  skip_separators();
  if (read_word(cur) != "ring") cur.fail("document must start with 'ring N'");
  int n = read_int(cur, "a variable count");
  if (n < 1) cur.fail("ring needs at least one variable");
  if (n > kMaxVars)
    throw BoundError("ring exceeds the supported variable bound of " +
                     std::to_string(kMaxVars));
  Ring ring(n);
  expect_end_of_statement();

  std::optional<MonomialIdeal> ideal;
  std::optional<Decomposition> components;
  std::string label;
  std::optional<VarSet> zvars;

  for (;;) {
    skip_separators();
    if (cur.done()) break;
    int line = cur.line, col = cur.col;
    std::string key = read_word(cur);
    cur.skip_spaces();
    if (cur.peek() != '=') cur.fail("expected '=' after '" + key + "'");
    cur.take();

    if (key == "ideal") {
      if (ideal || components)
        throw ParseError("document already has an ideal or component list",
                         line, col);
      std::vector<Monomial> gens;
      for (;;) {
        gens.push_back(read_monomial(cur, ring));
        cur.skip_spaces();
        if (cur.peek() != ',') break;
        cur.take();
      }
      ideal = MonomialIdeal::from_generators(ring, std::move(gens));
    } else if (key == "components") {
      if (ideal || components)
        throw ParseError("document already has an ideal or component list",
                         line, col);
      std::vector<IrreducibleComponent> comps;
      for (;;) {
        comps.push_back(read_component(cur, ring));
        cur.skip_spaces();
        if (cur.peek() != ',') break;
        cur.take();
      }
      components = Decomposition(ring, std::move(comps));
    } else if (key == "label") {
      label = read_word(cur);
    } else if (key == "zvars") {
      VarSet z;
      for (;;) {
        z |= VarSet::single(read_variable(cur, ring));
        cur.skip_spaces();
        if (cur.peek() != ',') break;
        cur.take();
      }
      zvars = z;
    } else {
      throw ParseError("unknown statement '" + key + "'", line, col);
    }
    expect_end_of_statement();
  }

  if (!ideal && !components)
    throw ParseError("document needs an 'ideal =' or 'components =' statement",
                     cur.line, cur.col);
  return IdealDocument{ring, std::move(ideal), std::move(components),
                       std::move(label), zvars};
}

std::string print_document(const IdealDocument& doc) {
  std::string out = "ring " + std::to_string(doc.ring.var_count());
  if (doc.ideal) {
    out += "; ideal = ";
    const auto& gens = doc.ideal->generators();
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ", ";
      out += gens[i].str();
    }
  } else if (doc.components) {
    out += "; components = " + doc.components->str();
  }
  if (!doc.label.empty()) out += "; label = " + doc.label;
  if (doc.zvars) {
    out += "; zvars = ";
    bool first = true;
    for (int j : doc.zvars->members()) {
      if (!first) out += ",";
      out += doc.ring.var_name(j);
      first = false;
    }
  }
  return out;
}

MonomialIdeal document_ideal(const IdealDocument& doc) {
  if (doc.ideal) return *doc.ideal;
  return doc.components->intersection();
}

Decomposition document_decomposition(const IdealDocument& doc) {
  if (doc.components) return irredundantize(*doc.components);
  return irreducible_decomposition(*doc.ideal);
}

}  // namespace stanley
