#pragma once

#include <memory>
#include <string>

#include "stori/predicate.hpp"
#include "stori/time_interval.hpp"
#include "stori/variables.hpp"

namespace stori {

/// Immutable STL formula over linear predicates.
///
///   phi := T | mu | !phi | phi & phi | phi U<a,b> phi
///
/// Eventually and globally are provided as derived constructors and desugar
/// on construction: F_I phi == T U_I phi and G_I phi == !F_I !phi.  Double
/// negation collapses on construction, so !!phi is phi.
///
/// A Formula is a value type sharing an immutable node tree; all accessors
/// are safe for concurrent use.
class Formula {
public:
    enum class Kind { True, Predicate, Not, And, Until };

    /// Default-constructs the Boolean truth formula.
    Formula();

    static Formula truth();
    static Formula predicate(LinearPredicate p);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula until(TimeInterval window, Formula lhs, Formula rhs);
    static Formula eventually(TimeInterval window, Formula f);
    static Formula globally(TimeInterval window, Formula f);

    Kind kind() const noexcept;

    /// Only valid for the kind that carries the field; throws otherwise.
    const LinearPredicate& pred() const;
    const TimeInterval& window() const;
    Formula lhs() const;  // Not: the negated formula; And/Until: left child
    Formula rhs() const;

    /// Maximum lookahead in seconds needed to decide the formula:
    /// 0 for T and predicates, b + max of children for U<a,b>.
    double horizon() const noexcept;

    /// Number of nodes in the tree.
    int size() const noexcept;

    bool structurally_equal(const Formula& o) const;
    bool operator==(const Formula& o) const { return structurally_equal(o); }

    /// Canonical concrete syntax (re-parseable when every predicate came
    /// from the single-variable atom grammar).  T-until re-sugars to F and
    /// its negated form to G.
    std::string to_string(const VariableMap& vars = {}) const;

    struct Node;
    const Node* node() const noexcept { return node_.get(); }

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    LinearPredicate pred;                 // Kind::Predicate
    std::shared_ptr<const TimeInterval> window;  // Kind::Until
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    double horizon = 0.0;
    int size = 1;
};

}  // namespace stori
