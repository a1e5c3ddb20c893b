#ifndef CLW_FORMULA_HPP
#define CLW_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "clw/types.hpp"

namespace clw {

/// Immutable formula AST. The core connectives are top, atoms, negation,
/// conjunction and the coalition modality; everything else is parser sugar
/// that desugars into these. Coalitions are stored as sorted agent-name
/// lists so a formula is not tied to one model.
class Formula {
 public:
  enum class Kind { Top, Atom, Not, And, Box };

  static Formula top();
  static Formula atom(const std::string& name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula box(std::vector<std::string> coalition, Formula f);

  // derived connectives
  static Formula bottom() { return negation(top()); }
  static Formula disjunction(Formula lhs, Formula rhs);  // ~(~a & ~b)
  static Formula implies(Formula lhs, Formula rhs);      // ~(a & ~b)
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;
  Formula child(int i = 0) const;
  const std::vector<std::string>& coalition_agents() const;

  int modal_depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static bool node_eq(const Node* a, const Node* b);
  std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax against a declared agent universe.
///
///   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" or)* ;
///   or := and ("|" and)* ; and := unary ("&" unary)* ;
///   unary := "~" unary | "[" coalition "]" unary | atom | "T" | "F"
///          | "(" formula ")" ;
///   coalition := "{" (agent ("," agent)*)? "}" | "AG"
///
/// Precedence ~ > & > | > -> > <->; the modality binds like ~; "->" is
/// right-associative, the other binary connectives left-associative.
/// F, |, -> and <-> desugar into the core connectives; "AG" expands to the
/// grand coalition of `agents`. Throws SyntaxError (with position) on
/// malformed input and UnknownAgent when a coalition leaves the universe.
Formula parse(const std::string& text, const AgentUniverse& agents);

/// Canonical text of a formula; parse(render(f)) == f, and render is the
/// identity on its own output.
std::string render(const Formula& f);

int modal_depth(const Formula& f);

/// The closed schema enumeration; propositional tautologies are not a
/// schema here, tautology checking is done by evaluation.
enum class AxiomSchema { NAAA, MG, MC, Ser, IA, Det };

const char* schema_name(AxiomSchema s);

/// Builds one instance of a schema:
///   NAAA ~[C]F            (1 coalition)
///   MG   [{}](p->q) -> ([C]p -> [C]q)       (1 coalition, 2 fillers)
///   MC   [C]p -> [D]p     (2 coalitions, C subset of D, 1 filler)
///   Ser  [C]T             (1 coalition)
///   IA   ([C]p & [D]q) -> [C u D](p & q)    (2 disjoint coalitions, 2 fillers)
///   Det  [C](p|q) -> ([C]p | [AG]q)         (1 coalition, 2 fillers)
/// Throws SideConditionViolated when the MC/IA side condition fails and
/// Error on arity mismatch.
Formula instantiate_axiom(AxiomSchema schema, const std::vector<Coalition>& coalitions,
                          const std::vector<Formula>& fillers,
                          const AgentUniverse& agents);

}  // namespace clw

#endif
