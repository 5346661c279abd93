#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace taxmine {

/// An attribute = value atom.
struct Descriptor {
  std::string attribute;
  std::string value;

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
  friend auto operator<=>(const Descriptor&, const Descriptor&) = default;
};

/// Immutable boolean formula over descriptors. Copies share structure,
/// so formulas can be passed around and stored by value.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  /// Default-constructed formula is TRUE (the empty conjunction).
  Formula();

  static Formula constant(bool truth);
  static Formula atom(std::string attribute, std::string value);
  static Formula atom(Descriptor descriptor);
  static Formula negation(Formula f);
  /// Empty conjunction is TRUE; a single part collapses to itself.
  static Formula conjunction(std::vector<Formula> parts);
  /// Empty disjunction is FALSE; a single part collapses to itself.
  static Formula disjunction(std::vector<Formula> parts);

  Kind kind() const;
  bool is_constant() const;
  const Descriptor& descriptor() const;       // Atom only
  const Formula& operand() const;             // Not only
  std::span<const Formula> operands() const;  // And / Or only

  std::string to_string() const;

  /// Structural equality, not extensional equivalence.
  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace taxmine
