#include "stori/formula.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace stori {

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string TimeInterval::to_string() const {
    std::string s;
    s += lower_open_ ? '(' : '[';
    s += format_double(lower_);
    s += ',';
    s += format_double(upper_);
    s += upper_open_ ? ')' : ']';
    return s;
}

namespace {

std::shared_ptr<const Formula::Node> make_node(Formula::Node n) {
    return std::make_shared<const Formula::Node>(std::move(n));
}

const std::shared_ptr<const Formula::Node>& true_node() {
    static const std::shared_ptr<const Formula::Node> n =
        make_node({Formula::Kind::True, {}, nullptr, nullptr, nullptr, 0.0, 1});
    return n;
}

}  // namespace

Formula::Formula() : node_(true_node()) {}

Formula Formula::truth() { return Formula(true_node()); }

Formula Formula::predicate(LinearPredicate p) {
    if (p.coefficients.size() == 0) throw Error("predicate needs a nonempty coefficient vector");
    Node n{Kind::Predicate, std::move(p), nullptr, nullptr, nullptr, 0.0, 1};
    return Formula(make_node(std::move(n)));
}

Formula Formula::negation(Formula f) {
    if (f.kind() == Kind::Not) return Formula(f.node_->lhs);  // !!phi == phi
    Node n{Kind::Not, {}, nullptr, f.node_, nullptr, f.horizon(), 1 + f.size()};
    return Formula(make_node(std::move(n)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    Node n{Kind::And,
           {},
           nullptr,
           lhs.node_,
           rhs.node_,
           std::max(lhs.horizon(), rhs.horizon()),
           1 + lhs.size() + rhs.size()};
    return Formula(make_node(std::move(n)));
}

Formula Formula::until(TimeInterval window, Formula lhs, Formula rhs) {
    double h = window.upper() + std::max(lhs.horizon(), rhs.horizon());
    Node n{Kind::Until,
           {},
           std::make_shared<const TimeInterval>(window),
           lhs.node_,
           rhs.node_,
           h,
           1 + lhs.size() + rhs.size()};
    return Formula(make_node(std::move(n)));
}

Formula Formula::eventually(TimeInterval window, Formula f) {
    return until(window, truth(), std::move(f));
}

Formula Formula::globally(TimeInterval window, Formula f) {
    return negation(eventually(window, negation(std::move(f))));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const LinearPredicate& Formula::pred() const {
    if (kind() != Kind::Predicate) throw Error("formula node is not a predicate");
    return node_->pred;
}

const TimeInterval& Formula::window() const {
    if (kind() != Kind::Until) throw Error("formula node has no time window");
    return *node_->window;
}

Formula Formula::lhs() const {
    if (!node_->lhs) throw Error("formula node has no child");
    return Formula(node_->lhs);
}

Formula Formula::rhs() const {
    if (!node_->rhs) throw Error("formula node has no right child");
    return Formula(node_->rhs);
}

double Formula::horizon() const noexcept { return node_->horizon; }

int Formula::size() const noexcept { return node_->size; }

namespace {

bool nodes_equal(const Formula::Node* a, const Formula::Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::True:
            return true;
        case Formula::Kind::Predicate:
            return a->pred == b->pred;
        case Formula::Kind::Not:
            return nodes_equal(a->lhs.get(), b->lhs.get());
        case Formula::Kind::And:
            return nodes_equal(a->lhs.get(), b->lhs.get()) &&
                   nodes_equal(a->rhs.get(), b->rhs.get());
        case Formula::Kind::Until:
            return *a->window == *b->window && nodes_equal(a->lhs.get(), b->lhs.get()) &&
                   nodes_equal(a->rhs.get(), b->rhs.get());
    }
    return false;
}

void print_predicate(std::ostream& os, const LinearPredicate& p, const VariableMap& vars) {
    int nonzero = -1;
    for (Eigen::Index i = 0; i < p.coefficients.size(); ++i) {
        if (p.coefficients[i] != 0.0) {
            if (nonzero >= 0) {
                nonzero = -2;
                break;
            }
            nonzero = static_cast<int>(i);
        }
    }
    if (nonzero >= 0 && std::abs(p.coefficients[nonzero]) == 1.0) {
        // Atom form "var >= c" / "var <= c" as produced by the parser.
        double c = p.coefficients[nonzero];
        os << vars.name_of(nonzero) << (c > 0 ? ">=" : "<=") << format_double(-p.offset / c);
        return;
    }
    // General linear predicate; diagnostic rendering, not re-parseable.
    os << "[";
    for (Eigen::Index i = 0; i < p.coefficients.size(); ++i) {
        if (p.coefficients[i] == 0.0) continue;
        os << format_double(p.coefficients[i]) << "*" << vars.name_of(static_cast<int>(i)) << "+";
    }
    os << format_double(p.offset) << ">=0]";
}

void print_node(std::ostream& os, const Formula::Node* n, const VariableMap& vars) {
    using Kind = Formula::Kind;
    switch (n->kind) {
        case Kind::True:
            os << "T";
            return;
        case Kind::Predicate:
            print_predicate(os, n->pred, vars);
            return;
        case Kind::Not:
            // !(T U_I !phi) re-sugars to G_I phi.
            if (n->lhs->kind == Kind::Until && n->lhs->lhs->kind == Kind::True) {
                os << "G" << n->lhs->window->to_string() << " ";
                const Formula::Node* body = n->lhs->rhs.get();
                if (body->kind == Kind::Not) {
                    print_node(os, body->lhs.get(), vars);
                } else {
                    os << "!";
                    print_node(os, body, vars);
                }
                return;
            }
            os << "!";
            print_node(os, n->lhs.get(), vars);
            return;
        case Kind::And:
            os << "(";
            print_node(os, n->lhs.get(), vars);
            os << " & ";
            print_node(os, n->rhs.get(), vars);
            os << ")";
            return;
        case Kind::Until:
            if (n->lhs->kind == Kind::True) {
                os << "F" << n->window->to_string() << " ";
                print_node(os, n->rhs.get(), vars);
                return;
            }
            os << "(";
            print_node(os, n->lhs.get(), vars);
            os << " U" << n->window->to_string() << " ";
            print_node(os, n->rhs.get(), vars);
            os << ")";
            return;
    }
}

}  // namespace

bool Formula::structurally_equal(const Formula& o) const {
    return nodes_equal(node_.get(), o.node_.get());
}

std::string Formula::to_string(const VariableMap& vars) const {
    std::ostringstream os;
    print_node(os, node_.get(), vars);
    return os.str();
}

VariableMap::VariableMap(std::map<std::string, int> bindings, int state_dim)
    : by_name_(std::move(bindings)), state_dim_(state_dim) {
    by_index_.assign(static_cast<size_t>(state_dim), "");
    for (const auto& [name, idx] : by_name_) {
        if (idx < 0 || idx >= state_dim)
            throw Error("variable '" + name + "' bound to index " + std::to_string(idx) +
                        " outside state dimension " + std::to_string(state_dim));
        by_index_[static_cast<size_t>(idx)] = name;
    }
}

VariableMap VariableMap::sequential(const std::vector<std::string>& names) {
    std::map<std::string, int> m;
    for (size_t i = 0; i < names.size(); ++i) m[names[i]] = static_cast<int>(i);
    if (m.size() != names.size()) throw Error("duplicate variable name in binding list");
    return VariableMap(std::move(m), static_cast<int>(names.size()));
}

std::optional<int> VariableMap::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::string VariableMap::name_of(int index) const {
    if (index >= 0 && index < static_cast<int>(by_index_.size()) && !by_index_[index].empty())
        return by_index_[index];
    return "x" + std::to_string(index);
}

}  // namespace stori
