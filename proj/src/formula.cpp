#include "clw/formula.hpp"

#include <algorithm>
#include <set>

namespace clw {

struct Formula::Node {
  Kind kind;
  std::string atom;                    // Kind::Atom
  std::vector<std::string> coalition;  // Kind::Box, sorted agent names
  std::shared_ptr<const Node> left, right;
  int depth = 0;  // modal depth
};

Formula Formula::top() {
  static const auto t =
      std::make_shared<Node>(Node{Kind::Top, "", {}, nullptr, nullptr, 0});
  return Formula(t);
}

Formula Formula::atom(const std::string& name) {
  if (!is_token(name)) throw Error("bad atom name: '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = name;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->depth = f.node_->depth;
  n->left = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->depth = std::max(lhs.node_->depth, rhs.node_->depth);
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::box(std::vector<std::string> coalition, Formula f) {
  std::sort(coalition.begin(), coalition.end());
  coalition.erase(std::unique(coalition.begin(), coalition.end()), coalition.end());
  for (const auto& a : coalition)
    if (!is_token(a)) throw Error("bad agent name: '" + a + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->coalition = std::move(coalition);
  n->depth = 1 + f.node_->depth;
  n->left = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conjunction(implies(lhs, rhs), implies(rhs, lhs));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->atom; }

Formula Formula::child(int i) const {
  return Formula(i == 0 ? node_->left : node_->right);
}

const std::vector<std::string>& Formula::coalition_agents() const {
  return node_->coalition;
}

int Formula::modal_depth() const { return node_->depth; }

int modal_depth(const Formula& f) { return f.modal_depth(); }

bool Formula::node_eq(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->depth != b->depth) return false;
  switch (a->kind) {
    case Kind::Top:
      return true;
    case Kind::Atom:
      return a->atom == b->atom;
    case Kind::Not:
      return node_eq(a->left.get(), b->left.get());
    case Kind::And:
      return node_eq(a->left.get(), b->left.get()) &&
             node_eq(a->right.get(), b->right.get());
    case Kind::Box:
      return a->coalition == b->coalition && node_eq(a->left.get(), b->left.get());
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  return Formula::node_eq(a.node_.get(), b.node_.get());
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, const AgentUniverse& agents)
      : text_(text), agents_(agents) {}

  Formula run() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t n = 0;
    while (tok[n]) ++n;
    if (text_.compare(pos_, n, tok) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string lex_token() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z')
      fail("expected a lowercase identifier");
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (eat("<->")) f = Formula::iff(std::move(f), parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    skip_ws();
    // right-associative: collect then fold from the right
    std::vector<Formula> parts{std::move(f)};
    while (peek() == '-' && text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      parts.push_back(parse_or());
    }
    Formula r = std::move(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      r = Formula::implies(std::move(parts[i]), std::move(r));
    return r;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|' && eat("|")) f = Formula::disjunction(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek() == '&' && eat("&")) f = Formula::conjunction(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (eat("~")) return Formula::negation(parse_unary());
    if (peek() == '[') {
      ++pos_;
      std::vector<std::string> coalition = parse_coalition();
      if (!eat("]")) fail("expected ']'");
      return Formula::box(std::move(coalition), parse_unary());
    }
    if (peek() == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (peek() == 'T') {
      ++pos_;
      return Formula::top();
    }
    if (peek() == 'F') {
      ++pos_;
      return Formula::bottom();
    }
    if (peek() >= 'a' && peek() <= 'z') return Formula::atom(lex_token());
    fail("expected a formula");
  }

  std::vector<std::string> parse_coalition() {
    skip_ws();
    if (eat("AG")) return agents_.names();
    if (!eat("{")) fail("expected '{' or 'AG'");
    std::vector<std::string> names;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return names;
    }
    while (true) {
      std::string a = lex_token();
      if (!agents_.has(a)) throw UnknownAgent(a);
      names.push_back(std::move(a));
      if (eat("}")) return names;
      if (!eat(",")) fail("expected ',' or '}'");
    }
  }

  const std::string& text_;
  const AgentUniverse& agents_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text, const AgentUniverse& agents) {
  return Parser(text, agents).run();
}

namespace {
void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      out += 'T';
      return;
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Not:
      out += '~';
      render_into(f.child(), out);
      return;
    case Formula::Kind::And:
      out += '(';
      render_into(f.child(0), out);
      out += " & ";
      render_into(f.child(1), out);
      out += ')';
      return;
    case Formula::Kind::Box: {
      out += "[{";
      const auto& c = f.coalition_agents();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += c[i];
      }
      out += "}]";
      render_into(f.child(), out);
      return;
    }
  }
}
}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

const char* schema_name(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::NAAA:
      return "A-NAAA";
    case AxiomSchema::MG:
      return "A-MG";
    case AxiomSchema::MC:
      return "A-MC";
    case AxiomSchema::Ser:
      return "A-Ser";
    case AxiomSchema::IA:
      return "A-IA";
    case AxiomSchema::Det:
      return "A-Det";
  }
  return "?";
}

namespace {
void need(bool cond, const char* what) {
  if (!cond) throw Error(std::string("axiom instantiation: ") + what);
}
std::vector<std::string> names_of(Coalition c, const AgentUniverse& agents) {
  if ((c.mask & ~agents.grand().mask) != 0)
    throw UnknownAgent("coalition outside the declared universe");
  return agents.coalition_names(c);
}
}  // namespace

Formula instantiate_axiom(AxiomSchema schema, const std::vector<Coalition>& coalitions,
                          const std::vector<Formula>& fillers,
                          const AgentUniverse& agents) {
  auto box = [&](Coalition c, Formula f) {
    return Formula::box(names_of(c, agents), std::move(f));
  };
  switch (schema) {
    case AxiomSchema::NAAA:
      need(coalitions.size() == 1 && fillers.empty(), "A-NAAA takes one coalition");
      return Formula::negation(box(coalitions[0], Formula::bottom()));
    case AxiomSchema::Ser:
      need(coalitions.size() == 1 && fillers.empty(), "A-Ser takes one coalition");
      return box(coalitions[0], Formula::top());
    case AxiomSchema::MG: {
      need(coalitions.size() == 1 && fillers.size() == 2,
           "A-MG takes one coalition and two fillers");
      Coalition c = coalitions[0];
      return Formula::implies(
          box(Coalition{}, Formula::implies(fillers[0], fillers[1])),
          Formula::implies(box(c, fillers[0]), box(c, fillers[1])));
    }
    case AxiomSchema::MC: {
      need(coalitions.size() == 2 && fillers.size() == 1,
           "A-MC takes two coalitions and one filler");
      if (!coalitions[0].subset_of(coalitions[1]))
        throw SideConditionViolated("A-MC requires C to be a subset of D");
      return Formula::implies(box(coalitions[0], fillers[0]),
                              box(coalitions[1], fillers[0]));
    }
    case AxiomSchema::IA: {
      need(coalitions.size() == 2 && fillers.size() == 2,
           "A-IA takes two coalitions and two fillers");
      if (!coalitions[0].disjoint(coalitions[1]))
        throw SideConditionViolated("A-IA requires disjoint coalitions");
      return Formula::implies(
          Formula::conjunction(box(coalitions[0], fillers[0]),
                               box(coalitions[1], fillers[1])),
          box(coalitions[0].united(coalitions[1]),
              Formula::conjunction(fillers[0], fillers[1])));
    }
    case AxiomSchema::Det: {
      need(coalitions.size() == 1 && fillers.size() == 2,
           "A-Det takes one coalition and two fillers");
      return Formula::implies(
          box(coalitions[0], Formula::disjunction(fillers[0], fillers[1])),
          Formula::disjunction(box(coalitions[0], fillers[0]),
                               box(agents.grand(), fillers[1])));
    }
  }
  throw Error("unknown axiom schema");
}

}  // namespace clw
