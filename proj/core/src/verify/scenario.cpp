#include "reflex/verify/scenario.hpp"

#include <cctype>
#include <set>

#include "reflex/errors.hpp"

namespace reflex::verify {

namespace {

struct Char {
  char c;
  int line;
  int column;
};

struct LogicalLine {
  std::vector<Char> chars;
  std::string comment;
  Location start;
};

// Splits the text into logical lines: a physical line continues while a
// bracket is open. Comments run from '#' to the end of the physical line.
std::vector<LogicalLine> splitLines(const std::string& text) {
  std::vector<LogicalLine> out;
  LogicalLine cur;
  int depth = 0;
  bool inString = false;
  int line = 1, col = 1;
  bool inComment = false;
  auto flush = [&]() {
    bool blank = true;
    for (const auto& ch : cur.chars)
      if (!std::isspace(static_cast<unsigned char>(ch.c))) blank = false;
    if (!blank) out.push_back(std::move(cur));
    cur = LogicalLine{};
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : '\n';
    if (c == '\r') continue;
    if (c == '\n') {
      inComment = false;
      if (inString) throw ParseError("unterminated string", line, col);
      if (depth <= 0) {
        flush();
        depth = 0;
      } else {
        cur.chars.push_back({' ', line, col});
      }
      ++line;
      col = 1;
      continue;
    }
    if (inComment) {
      if (depth <= 0) cur.comment += c;
      ++col;
      continue;
    }
    if (c == '#' && !inString) {
      inComment = true;
      ++col;
      continue;
    }
    if (c == '"') inString = !inString;
    if (!inString) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
    }
    if (cur.chars.empty()) cur.start = {line, col};
    cur.chars.push_back({c, line, col});
    ++col;
  }
  if (depth > 0) throw ParseError("unclosed bracket at end of input", line, 1);
  return out;
}

class Cursor {
public:
  explicit Cursor(const LogicalLine& l) : chars_(l.chars), end_(l.start) {
    if (!chars_.empty()) end_ = {chars_.back().line, chars_.back().column + 1};
  }

  bool atEnd() {
    skipSpace();
    return pos_ >= chars_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < chars_.size() ? chars_[pos_].c : '\0';
  }
  char peekRaw(std::size_t ahead = 0) const {
    return pos_ + ahead < chars_.size() ? chars_[pos_ + ahead].c : '\0';
  }
  Location here() {
    skipSpace();
    if (pos_ >= chars_.size()) return end_;
    return {chars_[pos_].line, chars_[pos_].column};
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) {
    Location l = here();
    throw ParseError(msg, l.line, l.column);
  }

  void skipSpace() {
    while (pos_ < chars_.size() && std::isspace(static_cast<unsigned char>(chars_[pos_].c))) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(const std::string& s) {
    skipSpace();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (peekRaw(i) != s[i]) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool atIdentifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string identifier() {
    if (!atIdentifier()) fail("expected a name");
    std::string out;
    while (pos_ < chars_.size() &&
           (std::isalnum(static_cast<unsigned char>(chars_[pos_].c)) || chars_[pos_].c == '_'))
      out += chars_[pos_++].c;
    return out;
  }
  // Identifier without consuming it.
  std::string lookIdentifier() {
    std::size_t save = pos_;
    std::string out = atIdentifier() ? identifier() : "";
    pos_ = save;
    return out;
  }

  long long integer() {
    skipSpace();
    Location l = here();
    std::string digits;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_].c)))
      digits += chars_[pos_++].c;
    if (digits.empty()) fail("expected an integer");
    if (digits.size() > 15) throw ParseError("integer too large", l.line, l.column);
    return std::stoll(digits);
  }

  std::string stringLiteral() {
    if (peek() != '"') fail("expected a quoted string");
    ++pos_;
    std::string out;
    while (pos_ < chars_.size() && chars_[pos_].c != '"') out += chars_[pos_++].c;
    if (pos_ >= chars_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  // Raw text up to a top-level ',' or the closing delimiter, which is not
  // consumed.
  RawText raw(char close) {
    skipSpace();
    RawText out{"", here()};
    int depth = 0;
    while (pos_ < chars_.size()) {
      char c = chars_[pos_].c;
      if (depth == 0 && (c == ',' || c == close)) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) fail("unbalanced bracket");
        --depth;
      }
      out.text += c;
      ++pos_;
    }
    if (pos_ >= chars_.size()) fail(std::string("expected '") + close + "'");
    while (!out.text.empty() && std::isspace(static_cast<unsigned char>(out.text.back()))) out.text.pop_back();
    if (out.text.empty()) fail("empty entry");
    return out;
  }

  std::string slice(std::size_t from, std::size_t to) const {
    std::string out;
    bool space = false;
    for (std::size_t i = from; i < to && i < chars_.size(); ++i) {
      char c = chars_[i].c;
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = true;
        continue;
      }
      if (space && !out.empty()) out += ' ';
      space = false;
      out += c;
    }
    return out;
  }

private:
  const std::vector<Char>& chars_;
  std::size_t pos_ = 0;
  Location end_;
};

const std::set<std::string> kReserved = {"true", "false", "inf", "none", "matrix", "over",
                                         "field", "ring", "ideal", "module", "let",
                                         "assert", "require", "note"};

Expr parseExpr(Cursor& cur);

std::vector<RawText> rawList(Cursor& cur, char close) {
  std::vector<RawText> out;
  if (cur.accept(close)) return out;
  while (true) {
    out.push_back(cur.raw(close));
    if (cur.accept(close)) return out;
    cur.expect(',');
  }
}

Expr parsePrimary(Cursor& cur) {
  Location at = cur.here();
  std::size_t from = cur.pos();
  Expr e;
  e.where = at;
  char c = cur.peek();
  if (c == '\0') cur.fail("expected an expression");
  if (std::isdigit(static_cast<unsigned char>(c))) {
    e.kind = Expr::Kind::Int;
    e.intValue = cur.integer();
  } else if (c == '(') {
    cur.expect('(');
    e.kind = Expr::Kind::Ideal;
    e.entries = rawList(cur, ')');
  } else if (c == '[') {
    cur.expect('[');
    e.kind = Expr::Kind::List;
    if (!cur.accept(']')) {
      while (true) {
        e.args.push_back(parseExpr(cur));
        if (cur.accept(']')) break;
        cur.expect(',');
      }
    }
  } else if (cur.atIdentifier()) {
    std::string name = cur.identifier();
    if (name == "matrix") {
      e.kind = Expr::Kind::Matrix;
      cur.expect('[');
      while (true) {
        cur.expect('[');
        e.rows.push_back(rawList(cur, ']'));
        if (cur.accept(']')) break;
        cur.expect(',');
      }
      for (const auto& row : e.rows)
        if (row.size() != e.rows.front().size()) throw ParseError("matrix rows differ in length", at.line, at.column);
    } else if (cur.peek() == '(') {
      cur.expect('(');
      e.kind = Expr::Kind::Call;
      e.name = name;
      if (!cur.accept(')')) {
        while (true) {
          e.args.push_back(parseExpr(cur));
          if (cur.accept(')')) break;
          cur.expect(',');
        }
      }
    } else {
      e.kind = Expr::Kind::Name;
      e.name = name;
    }
  } else {
    cur.fail(std::string("unexpected character '") + c + "'");
  }
  e.source = cur.slice(from, cur.pos());
  return e;
}

Expr parseUnary(Cursor& cur) {
  Location at = cur.here();
  std::size_t from = cur.pos();
  if (cur.peek() == '-') {
    cur.expect('-');
    Expr e;
    e.kind = Expr::Kind::Negate;
    e.where = at;
    e.args.push_back(parseUnary(cur));
    e.source = cur.slice(from, cur.pos());
    return e;
  }
  return parsePrimary(cur);
}

Expr parseExpr(Cursor& cur) {
  std::size_t from = cur.pos();
  Expr lhs = parseUnary(cur);
  while (true) {
    char c = cur.peek();
    if (c != '+' && c != '-') return lhs;
    Location at = cur.here();
    cur.expect(c);
    Expr e;
    e.kind = Expr::Kind::Binary;
    e.name = std::string(1, c);
    e.where = at;
    e.args.push_back(std::move(lhs));
    e.args.push_back(parseUnary(cur));
    e.source = cur.slice(from, cur.pos());
    lhs = std::move(e);
  }
}

std::string comparison(Cursor& cur) {
  for (const char* op : {"==", "!=", ">=", "<="})
    if (cur.accept(std::string(op))) return op;
  if (cur.accept('>')) return ">";
  if (cur.accept('<')) return "<";
  cur.fail("expected a comparison (==, !=, >=, <=, >, <)");
}

std::string provenanceOf(const std::string& comment) {
  std::string word;
  for (char c : comment) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!word.empty() || !std::isspace(static_cast<unsigned char>(c))) {
      break;
    }
  }
  if (word == "paper" || word == "trivial" || word == "derived") return word;
  return "none";
}

bool parseBool(Cursor& cur) {
  std::string v = cur.identifier();
  if (v == "true") return true;
  if (v == "false") return false;
  cur.fail("expected true or false");
}

void parseFlags(Cursor& cur, DeclaredFlags& flags) {
  cur.expect('{');
  if (cur.accept('}')) return;
  while (true) {
    Location at = cur.here();
    std::string name = cur.identifier();
    bool value = true;
    if (cur.accept('=')) value = parseBool(cur);
    if (name == "complete_intersection") flags.completeIntersection = value;
    else if (name == "gorenstein") flags.gorenstein = value;
    else if (name == "cohen_macaulay") flags.cohenMacaulay = value;
    else if (name == "equidimensional") flags.equidimensional = value;
    else throw ParseError("unknown ring flag '" + name + "'", at.line, at.column);
    if (cur.accept('}')) return;
    cur.expect(',');
  }
}

Statement parseRing(Cursor& cur) {
  Statement s;
  s.kind = Statement::Kind::Ring;
  s.name = cur.identifier();
  cur.expect('=');
  Location at = cur.here();
  std::string ctor = cur.identifier();
  if (ctor != "quotient" && ctor != "poly")
    throw ParseError("expected quotient(...) or poly(...)", at.line, at.column);
  cur.expect('(');
  while (true) {
    s.variables.push_back(cur.identifier());
    if (cur.peek() != ',') break;
    cur.expect(',');
  }
  if (cur.accept(';')) {
    Location ol = cur.here();
    std::string order = cur.identifier();
    if (order == "grevlex") s.order = OrderKind::Grevlex;
    else if (order == "lex") s.order = OrderKind::Lex;
    else throw ParseError("unknown monomial order '" + order + "'", ol.line, ol.column);
    if (ctor == "quotient") {
      cur.expect(';');
      Location il = cur.here();
      if (cur.identifier() != "ideal") throw ParseError("expected ideal(...)", il.line, il.column);
      cur.expect('(');
      s.idealTexts = rawList(cur, ')');
    }
  } else if (ctor == "quotient") {
    cur.fail("expected ';' followed by the monomial order");
  }
  cur.expect(')');
  if (cur.peek() == '{') parseFlags(cur, s.flags);
  return s;
}

void checkNames(const Expr& e, const std::set<std::string>& defined) {
  if (e.kind == Expr::Kind::Name && !isReservedName(e.name) && !defined.count(e.name))
    throw ParseError("undefined name '" + e.name + "'", e.where.line, e.where.column);
  for (const auto& a : e.args) checkNames(a, defined);
}

}  // namespace

bool isReservedName(const std::string& name) { return kReserved.count(name) > 0; }

Scenario parseScenario(const std::string& text, const std::string& id) {
  Scenario sc;
  sc.id = id;
  std::set<std::string> defined;
  std::set<std::string> rings;
  for (const auto& line : splitLines(text)) {
    Cursor cur(line);
    Location at = cur.here();
    std::string keyword = cur.identifier();
    Statement s;
    if (keyword == "field") {
      s.kind = Statement::Kind::Field;
      Location fl = cur.here();
      s.name = cur.identifier();
      if (s.name != "gf32003" && s.name != "qq")
        throw ParseError("unknown field '" + s.name + "' (expected gf32003 or qq)", fl.line, fl.column);
      sc.field = s.name;
    } else if (keyword == "ring") {
      s = parseRing(cur);
      rings.insert(s.name);
    } else if (keyword == "ideal" || keyword == "module" || keyword == "let") {
      s.kind = Statement::Kind::Define;
      s.defineKind = keyword;
      s.name = cur.identifier();
      cur.expect('=');
      s.expr = parseExpr(cur);
      if (cur.lookIdentifier() == "over") {
        cur.identifier();
        Location ol = cur.here();
        s.over = cur.identifier();
        if (!rings.count(*s.over)) throw ParseError("'" + *s.over + "' is not a ring", ol.line, ol.column);
      }
      checkNames(s.expr, defined);
    } else if (keyword == "assert" || keyword == "require") {
      s.kind = keyword == "assert" ? Statement::Kind::Assert : Statement::Kind::Require;
      if (cur.peek() == '"') {
        s.label = cur.stringLiteral();
        cur.expect(':');
      }
      s.expr = parseExpr(cur);
      s.op = comparison(cur);
      s.expected = parseExpr(cur);
      s.provenance = provenanceOf(line.comment);
      checkNames(s.expr, defined);
      checkNames(s.expected, defined);
    } else if (keyword == "note") {
      s.kind = Statement::Kind::Note;
      s.text = cur.stringLiteral();
      s.provenance = provenanceOf(line.comment);
    } else {
      throw ParseError("unknown statement '" + keyword + "'", at.line, at.column);
    }
    if (!cur.atEnd()) cur.fail("unexpected trailing input");
    s.where = at;
    if (s.kind == Statement::Kind::Ring || s.kind == Statement::Kind::Define) {
      if (isReservedName(s.name)) throw ParseError("'" + s.name + "' is reserved", at.line, at.column);
      if (defined.count(s.name)) throw ParseError("'" + s.name + "' is already defined", at.line, at.column);
      defined.insert(s.name);
    }
    sc.statements.push_back(std::move(s));
  }
  return sc;
}

}  // namespace reflex::verify
