#include "stori/state_trajectory.hpp"

#include <cmath>
#include <unordered_map>

namespace stori {

StateTrajectory::StateTrajectory(std::vector<double> t, std::vector<Eigen::VectorXd> x)
    : times(std::move(t)), states(std::move(x)) {
    if (times.empty() || times.size() != states.size())
        throw Error("state trajectory needs matching, nonempty times and states");
    if (std::abs(times.front()) > 1e-12) throw Error("state trajectory must start at t = 0");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw Error("state trajectory times must strictly increase");
}

namespace {

// Three-valued memo per (formula node, sample index): -1 unknown, 0, 1.
class BooleanEval {
public:
    explicit BooleanEval(const StateTrajectory& x) : x_(x) {}

    bool eval(const Formula::Node* n, size_t i) {
        auto& memo = memo_[n];
        if (memo.empty()) memo.assign(x_.size(), -1);
        if (memo[i] >= 0) return memo[i] != 0;
        bool v = compute(n, i);
        memo[i] = v ? 1 : 0;
        return v;
    }

private:
    bool compute(const Formula::Node* n, size_t i) {
        switch (n->kind) {
            case Formula::Kind::True:
                return true;
            case Formula::Kind::Predicate:
                return n->pred.evaluate(x_.states[i]) >= 0.0;
            case Formula::Kind::Not:
                return !eval(n->lhs.get(), i);
            case Formula::Kind::And:
                return eval(n->lhs.get(), i) && eval(n->rhs.get(), i);
            case Formula::Kind::Until: {
                // exists t' in <t+a, t+b> with rhs at t' and lhs on every
                // sample of [t, t'] (endpoints included).
                const TimeInterval& w = *n->window;
                for (size_t j = i; j < x_.size(); ++j) {
                    double rel = x_.times[j] - x_.times[i];
                    if (rel > w.upper() + kTimeEps) break;
                    // lhs must hold on [t, t'] including the witness itself,
                    // so a failing lhs sample blocks j and everything later.
                    if (!eval(n->lhs.get(), j)) return false;
                    if (w.contains(rel) && eval(n->rhs.get(), j)) return true;
                }
                return false;
            }
        }
        return false;
    }

    const StateTrajectory& x_;
    std::unordered_map<const Formula::Node*, std::vector<int8_t>> memo_;
};

}  // namespace

bool eval_boolean(const Formula& f, const StateTrajectory& x, double t) {
    if (x.times.empty()) throw Error("empty trajectory");
    size_t start = x.size();
    for (size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x.times[i] - t) <= 1e-9) {
            start = i;
            break;
        }
    }
    if (start == x.size())
        throw Error("evaluation time " + format_double(t) + " is not a sample time");
    if (x.end_time() + 1e-9 < t + f.horizon())
        throw HorizonError("trajectory too short for the formula horizon: needs " +
                           format_double(t + f.horizon()) + " s, has " +
                           format_double(x.end_time()) + " s");
    BooleanEval ev(x);
    return ev.eval(f.node(), start);
}

}  // namespace stori
