#include "taxmine/formula.hpp"

#include <stdexcept>
#include <utility>

namespace taxmine {

struct Formula::Node {
  Kind kind;
  Descriptor desc;            // Atom only
  std::vector<Formula> kids;  // Not: one, And/Or: many
};

Formula::Formula() : node_(constant(true).node_) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool truth) {
  static const auto true_node = std::make_shared<const Node>(Node{Kind::True, {}, {}});
  static const auto false_node = std::make_shared<const Node>(Node{Kind::False, {}, {}});
  return Formula(truth ? true_node : false_node);
}

Formula Formula::atom(Descriptor descriptor) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(descriptor), {}}));
}

Formula Formula::atom(std::string attribute, std::string value) {
  return atom(Descriptor{std::move(attribute), std::move(value)});
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return constant(true);
  if (parts.size() == 1) return std::move(parts.front());
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(parts)}));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return constant(false);
  if (parts.size() == 1) return std::move(parts.front());
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(parts)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_constant() const {
  return node_->kind == Kind::True || node_->kind == Kind::False;
}

const Descriptor& Formula::descriptor() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("formula is not an atom");
  return node_->desc;
}

const Formula& Formula::operand() const {
  if (node_->kind != Kind::Not) throw std::logic_error("formula is not a negation");
  return node_->kids.front();
}

std::span<const Formula> Formula::operands() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or) {
    throw std::logic_error("formula is not a conjunction or disjunction");
  }
  return node_->kids;
}

namespace {

void render(const Formula& f, std::string& out, bool parenthesize) {
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      return;
    case Formula::Kind::False:
      out += "false";
      return;
    case Formula::Kind::Atom:
      out += "[" + f.descriptor().attribute + " = " + f.descriptor().value + "]";
      return;
    case Formula::Kind::Not:
      out += "!";
      render(f.operand(), out, true);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      if (parenthesize) out += "(";
      bool first = true;
      for (const Formula& part : f.operands()) {
        if (!first) out += sep;
        first = false;
        render(part, out, true);
      }
      if (parenthesize) out += ")";
      return;
    }
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  render(*this, out, false);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return node_->desc == other.node_->desc;
    case Kind::Not:
    case Kind::And:
    case Kind::Or: {
      if (node_->kids.size() != other.node_->kids.size()) return false;
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (!(node_->kids[i] == other.node_->kids[i])) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace taxmine
