// SPDX-License-Identifier: Apache-2.0
#include "chronop/opcalc.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace chronop::opcalc {

namespace {

constexpr std::array<const char*, kGenCount> kNames = {
    "t", "x1", "p1", "p0", "alpha1", "alpha2", "alpha3", "beta", "theta1", "T", "H"};

}  // namespace

const char* name(Gen g) { return kNames[static_cast<int>(g)]; }

std::optional<Gen> gen_from_name(const std::string& s) {
    for (int i = 0; i < kGenCount; ++i)
        if (s == kNames[i]) return static_cast<Gen>(i);
    return std::nullopt;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s = name(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
        s += '*';
        s += name(w[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// OperatorExpression

OperatorExpression OperatorExpression::scalar(const ExactComplex& c) {
    OperatorExpression e;
    e.add_term(Word{}, c);
    return e;
}

OperatorExpression OperatorExpression::generator(Gen g) {
    OperatorExpression e;
    e.add_term(Word{g}, ExactComplex::one());
    return e;
}

OperatorExpression OperatorExpression::word(Word w, ExactComplex c) {
    OperatorExpression e;
    e.add_term(std::move(w), c);
    return e;
}

void OperatorExpression::add_term(const Word& w, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OperatorExpression& OperatorExpression::operator+=(const OperatorExpression& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

OperatorExpression& OperatorExpression::operator-=(const OperatorExpression& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

OperatorExpression operator-(const OperatorExpression& a) {
    OperatorExpression r;
    for (const auto& [w, c] : a.terms()) r.add_term(w, -c);
    return r;
}

OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b) {
    OperatorExpression r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

OperatorExpression OperatorExpression::scaled(const ExactComplex& c) const {
    OperatorExpression r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

OperatorExpression operator*(const ExactComplex& c, const OperatorExpression& e) {
    return e.scaled(c);
}

std::string to_string(const OperatorExpression& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        ExactComplex a = c;
        bool neg = false;
        if ((c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0)) {
            neg = true;
            a = -c;
        }
        const std::string cs = chronop::to_string(a);
        std::string piece;
        if (w.empty()) piece = cs;
        else if (cs == "1") piece = to_string(w);
        else piece = cs + "*" + to_string(w);
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " + piece : " + " + piece;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// RuleSet

void RuleSet::add_commutator(Gen a, Gen b, OperatorExpression rhs) {
    if (a == b) throw std::invalid_argument("commutator fact [g,g] is vacuous");
    if (a < b) pairs_[{a, b}] = PairRule{PairKind::commute, std::move(rhs)};
    else pairs_[{b, a}] = PairRule{PairKind::commute, -rhs};
}

void RuleSet::add_anticommutator(Gen a, Gen b, OperatorExpression rhs) {
    if (a == b) throw std::invalid_argument("declare g*g via add_square instead");
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    pairs_[key] = PairRule{PairKind::anticommute, std::move(rhs)};
}

void RuleSet::add_substitution(Gen g, OperatorExpression rhs) {
    subst_[g] = std::move(rhs);
}

void RuleSet::add_square(Gen g, OperatorExpression rhs) { squares_[g] = std::move(rhs); }

void RuleSet::add_scalar_commutes(Gen g) { scalar_commutes_.insert(g); }

const OperatorExpression* RuleSet::substitution(Gen g) const {
    auto it = subst_.find(g);
    return it == subst_.end() ? nullptr : &it->second;
}

const OperatorExpression* RuleSet::square(Gen g) const {
    auto it = squares_.find(g);
    return it == squares_.end() ? nullptr : &it->second;
}

std::optional<RuleSet::PairRule> RuleSet::swap_rule(Gen hi, Gen lo) const {
    auto it = pairs_.find({lo, hi});
    if (it != pairs_.end()) {
        if (it->second.kind == PairKind::commute)
            // stored [lo,hi]; the caller rewrites hi*lo = lo*hi + [hi,lo]
            return PairRule{PairKind::commute, -it->second.rhs};
        return it->second;  // anticommutator is symmetric
    }
    if (scalar_commutes_.count(hi) || scalar_commutes_.count(lo))
        return PairRule{PairKind::commute, OperatorExpression::zero()};
    return std::nullopt;
}

RuleSet RuleSet::canonical() {
    RuleSet r;
    const auto i_unit = OperatorExpression::scalar(ExactComplex::i());
    const auto zero = OperatorExpression::zero();
    const auto unit = OperatorExpression::unit();

    r.add_commutator(Gen::x1, Gen::p1, i_unit);
    r.add_commutator(Gen::p0, Gen::t, i_unit);
    r.add_scalar_commutes(Gen::t);

    r.add_commutator(Gen::x1, Gen::p0, zero);
    r.add_commutator(Gen::p1, Gen::p0, zero);

    const Gen matrices[] = {Gen::alpha1, Gen::alpha2, Gen::alpha3, Gen::beta, Gen::theta1};
    for (Gen m : matrices) {
        r.add_commutator(Gen::x1, m, zero);
        r.add_commutator(Gen::p1, m, zero);
        r.add_commutator(Gen::p0, m, zero);
    }

    const Gen dirac[] = {Gen::alpha1, Gen::alpha2, Gen::alpha3, Gen::beta};
    for (Gen a : dirac) r.add_square(a, unit);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            r.add_anticommutator(dirac[i], dirac[j], zero);

    return r;
}

RuleSet RuleSet::concrete_dirac(const Rational& mass, bool theta1_zero) {
    RuleSet r = canonical();
    const auto a1 = OperatorExpression::generator(Gen::alpha1);
    r.add_substitution(Gen::H,
                       a1 * OperatorExpression::generator(Gen::p1) +
                           ExactComplex(mass) * OperatorExpression::generator(Gen::beta));
    r.add_substitution(Gen::T,
                       a1 * OperatorExpression::generator(Gen::x1) -
                           a1 * OperatorExpression::generator(Gen::theta1));
    if (theta1_zero) r.add_substitution(Gen::theta1, OperatorExpression::zero());
    return r;
}

RuleSet RuleSet::abstract_conjugate() {
    RuleSet r = canonical();
    r.add_commutator(Gen::H, Gen::T, OperatorExpression::scalar(-ExactComplex::i()));
    r.add_commutator(Gen::H, Gen::p1, OperatorExpression::zero());
    return r;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// prefix + replacement + suffix for every replacement term, scaled by c
void push_sandwich(std::vector<std::pair<Word, ExactComplex>>& stack, const Word& w,
                   std::size_t pos, std::size_t len, const OperatorExpression& repl,
                   const ExactComplex& c) {
    // reverse map order so terms pop in map order
    const auto& terms = repl.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Word nw;
        nw.reserve(w.size() - len + it->first.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), it->first.begin(), it->first.end());
        nw.insert(nw.end(), w.begin() + pos + len, w.end());
        stack.emplace_back(std::move(nw), c * it->second);
    }
}

std::string pos_tag(std::size_t i, const Word& w) {
    return "  @" + std::to_string(i) + " in " + to_string(w);
}

}  // namespace

OperatorExpression normalize(const OperatorExpression& e, const RuleSet& rules,
                             StepSink* trace) {
    OperatorExpression out;
    std::vector<std::pair<Word, ExactComplex>> stack;
    stack.reserve(e.term_count());
    const auto& terms = e.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        stack.emplace_back(it->first, it->second);

    std::size_t steps = 0;
    const std::size_t budget = rules.step_budget();

    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;

        bool reduced = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (const auto* sub = rules.substitution(w[i])) {
                if (++steps > budget) throw BudgetExceeded(budget);
                if (trace)
                    trace->note(std::string("subst ") + name(w[i]) + " := " +
                                to_string(*sub) + pos_tag(i, w));
                push_sandwich(stack, w, i, 1, *sub, c);
                reduced = true;
                break;
            }
            if (i + 1 >= w.size()) continue;
            const Gen a = w[i], b = w[i + 1];
            if (a == b) {
                if (const auto* sq = rules.square(a)) {
                    if (++steps > budget) throw BudgetExceeded(budget);
                    if (trace)
                        trace->note(std::string("square ") + name(a) + "*" + name(a) +
                                    " -> " + to_string(*sq) + pos_tag(i, w));
                    push_sandwich(stack, w, i, 2, *sq, c);
                    reduced = true;
                    break;
                }
            } else if (a > b) {
                const auto rule = rules.swap_rule(a, b);
                if (!rule) continue;
                if (++steps > budget) throw BudgetExceeded(budget);
                // hi*lo = s*lo*hi + extra, s = +1 (commute, extra = [hi,lo])
                //                          s = -1 (anticommute, extra = {hi,lo})
                const bool anti = rule->kind == RuleSet::PairKind::anticommute;
                const ExactComplex sign = anti ? ExactComplex(-1) : ExactComplex(1);
                if (trace) {
                    OperatorExpression local =
                        sign * OperatorExpression::word(Word{b, a}) + rule->rhs;
                    trace->note(std::string("swap ") + name(a) + "*" + name(b) + " -> " +
                                to_string(local) + pos_tag(i, w));
                }
                if (!rule->rhs.is_zero()) push_sandwich(stack, w, i, 2, rule->rhs, c);
                Word nw = w;
                std::swap(nw[i], nw[i + 1]);
                stack.emplace_back(std::move(nw), c * sign);
                reduced = true;
                break;
            }
        }
        if (!reduced) out.add_term(w, c);
    }
    return out;
}

OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b,
                              const RuleSet& rules) {
    return normalize(a * b - b * a, rules);
}

OperatorExpression anticommutator(const OperatorExpression& a, const OperatorExpression& b,
                                  const RuleSet& rules) {
    return normalize(a * b + b * a, rules);
}

OperatorExpression partial_t(const OperatorExpression& e) {
    OperatorExpression r;
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != Gen::t) continue;
            Word nw;
            nw.reserve(w.size() - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            r.add_term(nw, c);
        }
    }
    return r;
}

OperatorExpression heisenberg_derivative(const OperatorExpression& a,
                                         const OperatorExpression& hamiltonian,
                                         const RuleSet& rules) {
    const OperatorExpression comm = hamiltonian * a - a * hamiltonian;
    return normalize(partial_t(a) + ExactComplex::i() * comm, rules);
}

// ---------------------------------------------------------------------------
// Proof ledgers

std::string ProofLedger::report() const {
    std::string s = "identity: " + title + "\n";
    s += "input: " + input + "\n";
    for (std::size_t i = 0; i < steps.size(); ++i)
        s += "step " + std::to_string(i + 1) + ": " + steps[i] + "\n";
    s += "steps: " + std::to_string(steps_used) + "\n";
    s += "residual: " + to_string(residual) + "\n";
    s += std::string("verdict: ") + (verified ? "VERIFIED" : "RESIDUAL") + "\n";
    return s;
}

ProofLedger prove_zero(const std::string& title, const OperatorExpression& e,
                       const RuleSet& rules) {
    ProofLedger ledger;
    ledger.title = title;
    ledger.input = to_string(e);
    StepSink sink;
    ledger.residual = normalize(e, rules, &sink);
    ledger.steps = std::move(sink.lines);
    ledger.steps_used = ledger.steps.size();
    ledger.verified = ledger.residual.is_zero();
    return ledger;
}

ProofLedger square_identity_check(const Rational& tau) {
    const auto x = OperatorExpression::generator(Gen::x1);
    const auto a = OperatorExpression::generator(Gen::alpha1);
    const auto b = OperatorExpression::generator(Gen::beta);
    const OperatorExpression tf = a * x + ExactComplex(tau) * b;
    const OperatorExpression e =
        tf * tf - x * x - OperatorExpression::scalar(ExactComplex(tau * tau));
    return prove_zero("time_squared_linearization tau=" + tau.get_str(), e,
                      RuleSet::canonical());
}

clifford::DiracMatrix to_matrix(const OperatorExpression& e) {
    clifford::DiracMatrix acc = clifford::zero();
    for (const auto& [w, c] : e.terms()) {
        clifford::DiracMatrix m = clifford::identity();
        for (Gen g : w) {
            switch (g) {
                case Gen::alpha1: m = clifford::mat_product(m, clifford::alpha1()); break;
                case Gen::beta: m = clifford::mat_product(m, clifford::beta()); break;
                default:
                    throw UnknownGenerator(std::string("not a matrix letter: ") + name(g));
            }
        }
        acc = clifford::mat_add(acc, clifford::mat_scale(c, m));
    }
    return acc;
}

}  // namespace chronop::opcalc
