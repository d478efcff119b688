#ifndef REFLEX_VERIFY_SCENARIO_HPP
#define REFLEX_VERIFY_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "reflex/ring.hpp"

namespace reflex::verify {

/// Position of a token in the scenario text, 1-based.
struct Location {
  int line = 0;
  int column = 0;
};

/// Raw polynomial text kept for evaluation against a ring.
struct RawText {
  std::string text;
  Location where;
};

struct Expr {
  enum class Kind {
    Int,      // intValue
    Name,     // name; also true/false/inf/none
    Call,     // name(args)
    Ideal,    // (f, g, ...) with raw entries
    Matrix,   // matrix[[..], [..]] with raw entries
    List,     // [e, e, ...]
    Negate,   // -args[0]
    Binary,   // args[0] op args[1], op in {+, -}
  };

  Kind kind = Kind::Int;
  long long intValue = 0;
  std::string name;
  std::vector<Expr> args;
  std::vector<RawText> entries;
  std::vector<std::vector<RawText>> rows;
  Location where;
  /// Source text of the expression, whitespace-normalized.
  std::string source;
};

struct Statement {
  enum class Kind { Field, Ring, Define, Assert, Require, Note };

  Kind kind = Kind::Note;
  Location where;
  /// Field name, ring name, or defined name.
  std::string name;

  // Ring declarations.
  std::vector<std::string> variables;
  OrderKind order = OrderKind::Grevlex;
  std::vector<RawText> idealTexts;
  DeclaredFlags flags;

  // Definitions: "ideal", "module" or "let".
  std::string defineKind;
  std::optional<std::string> over;
  Expr expr;

  // Assertions.
  std::string label;
  std::string op;
  Expr expected;
  /// paper, trivial, derived, or "none" when no tag was given.
  std::string provenance = "none";
  /// Free text of a note.
  std::string text;
};

struct Scenario {
  std::string id;
  std::optional<std::string> field;
  std::vector<Statement> statements;
};

/// Parses scenario text. Throws ParseError with line and column on malformed
/// input or on a name used before its definition.
Scenario parseScenario(const std::string& text, const std::string& id);

/// Reserved words that cannot be defined as names.
bool isReservedName(const std::string& name);

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_SCENARIO_HPP
