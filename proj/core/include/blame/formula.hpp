// ============================================================================
// blame/formula.hpp — formula language for blame reasoning in security games
// ============================================================================
//
// The core language has propositional variables, negation, implication and
// three modalities:
//
//   N φ   "φ holds under every action profile of the game"
//   A φ   "φ holds and the attacker could have prevented it"
//   D φ   "φ holds and the defender could have prevented it"
//
// The surface syntax additionally offers &, |, <-> and the modality R
// ("φ holds and the attacker cannot be blamed for it").  Those are pure
// sugar: the AST after parsing contains only the core connectives.
//
//   φ & ψ    ==>  !(φ -> !ψ)
//   φ | ψ    ==>  !φ -> ψ
//   φ <-> ψ  ==>  (φ -> ψ) & (ψ -> φ)
//   R φ      ==>  !(φ -> A φ)
//
// Formulas are immutable values sharing structure through shared_ptr; they
// can be copied, hashed, compared and evaluated from any thread.
//
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blame {

enum class Connective : std::uint8_t {
  Var,
  Not,
  Implies,
  Necessary,      // N
  AttackerBlame,  // A
  DefenderBlame,  // D
};

const char* connective_name(Connective c) noexcept;

class Formula {
 public:
  // ── Core constructors ───────────────────────────────────────────────
  // var() rejects names outside [a-z][a-z0-9_]* (the uppercase modality
  // letters N, A, D, R are reserved by the grammar and can never be
  // variables).
  static Formula var(std::string name);
  static Formula negation(Formula child);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula necessity(Formula child);       // N
  static Formula attacker_blame(Formula child);  // A
  static Formula defender_blame(Formula child);  // D

  // ── Surface connectives (desugared on construction) ─────────────────
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula unavoidability(Formula child);  // R

  // ── Accessors ────────────────────────────────────────────────────────
  Connective connective() const noexcept;
  bool is(Connective c) const noexcept { return connective() == c; }
  const std::string& var_name() const;  // Var only
  const Formula& child() const;         // unary nodes only
  const Formula& antecedent() const;    // Implies only
  const Formula& consequent() const;    // Implies only

  /// True when some subformula is D-rooted (the proof system rejects those).
  bool uses_defender_blame() const noexcept;

  std::size_t hash() const noexcept;
  /// Longest root-to-leaf path; a bare variable has depth 0.
  int depth() const noexcept;

  bool operator==(const Formula& other) const noexcept;
  bool operator!=(const Formula& other) const noexcept { return !(*this == other); }
  /// Structural total order, usable as a map key.
  bool operator<(const Formula& other) const noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // byte offset into the input
};

/// Parses the surface grammar (ASCII tokens; the usual Unicode logic symbols
/// are accepted as aliases) and returns the desugared AST.
Formula parse(std::string_view text);

/// Minimal-parentheses rendering.  render() never resugars, and
/// parse(render(f)) == f for every formula.
std::string render(const Formula& f);

/// All distinct subformulas, children before parents (the formula itself is
/// last).  Linear in the size of the shared DAG.
std::vector<Formula> subformulas(const Formula& f);

/// Distinct variable names, sorted.
std::vector<std::string> variables(const Formula& f);

/// Rewrites every D node as  φ ∧ ¬N(¬φ → A¬φ)  (innermost first).  The
/// result contains no D node and is equivalent at every profile of every
/// game; each D adds a constant number of distinct subformulas.
Formula translate_defender_blame(const Formula& f);

}  // namespace blame
