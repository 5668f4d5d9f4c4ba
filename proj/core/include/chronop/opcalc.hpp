// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronop/clifford.hpp"
#include "chronop/exact.hpp"

/// Sign conventions, shared by every module in this project:
///
///   metric            g = diag(+1, -1, -1, -1), natural units hbar = c = 1
///   momentum          p^mu = i d^mu, so [x1, p1] = +i and [p0, t] = +i
///   Hamiltonian       H = alpha1 p1 + m beta   (free 1+1D Dirac)
///   time function     T = alpha1 x1 - alpha1 theta1, conjugate to H via
///                     [H, T] = -i (declared fact for the opaque route;
///                     exact for the expanded route only at m = 0)
///   boost generator   spin part S01 = (i/2) alpha1
namespace chronop::opcalc {

/// Generators of the operator algebra, listed in canonical order.
/// Normalization sorts each word into this order, using only declared
/// relations to move letters past each other.
///
/// Grading:  t, x1        scalar variables
///           p1, p0       differential generators
///           alpha1..beta Dirac matrices, theta1 an opaque constant matrix
///           T, H         composites (kept opaque or expanded by a
///                        substitution fact, depending on the rule set)
enum class Gen : std::uint8_t {
    t = 0,
    x1,
    p1,
    p0,
    alpha1,
    alpha2,
    alpha3,
    beta,
    theta1,
    T,
    H,
};

constexpr int kGenCount = 11;

const char* name(Gen g);

/// Resolves a generator identifier; nullopt if unknown.
std::optional<Gen> gen_from_name(const std::string& s);

/// A word is a finite product of generators; the empty word is the
/// identity operator.
using Word = std::vector<Gen>;

std::string to_string(const Word& w);

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("rewrite budget exceeded (" + std::to_string(budget) +
                             " steps); rule set may not terminate") {}
};

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string& what) : std::runtime_error(what) {}
};

/// Formal sum of words with exact complex-rational coefficients.
/// Zero coefficients are never stored.
class OperatorExpression {
  public:
    using TermMap = std::map<Word, ExactComplex>;

    OperatorExpression() = default;

    static OperatorExpression zero() { return {}; }
    static OperatorExpression unit() { return scalar(ExactComplex::one()); }
    static OperatorExpression scalar(const ExactComplex& c);
    static OperatorExpression generator(Gen g);
    static OperatorExpression word(Word w, ExactComplex c = ExactComplex::one());

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * w, erasing the term if the sum cancels.
    void add_term(const Word& w, const ExactComplex& c);

    OperatorExpression& operator+=(const OperatorExpression& o);
    OperatorExpression& operator-=(const OperatorExpression& o);
    friend OperatorExpression operator+(OperatorExpression a, const OperatorExpression& b) {
        return a += b;
    }
    friend OperatorExpression operator-(OperatorExpression a, const OperatorExpression& b) {
        return a -= b;
    }
    friend OperatorExpression operator-(const OperatorExpression& a);

    /// Formal (unnormalized) product: concatenates words pairwise.
    friend OperatorExpression operator*(const OperatorExpression& a,
                                        const OperatorExpression& b);

    OperatorExpression scaled(const ExactComplex& c) const;

    /// Structural equality (same words, same coefficients). Use
    /// normalize() first to decide equality in the algebra.
    friend bool operator==(const OperatorExpression& a, const OperatorExpression& b) {
        return a.terms_ == b.terms_;
    }

  private:
    TermMap terms_;
};

OperatorExpression operator*(const ExactComplex& c, const OperatorExpression& e);

std::string to_string(const OperatorExpression& e);

/// Declared rewrite facts driving canonical reduction.
///
/// Kinds of fact:
///   commutation      [a,b] = rhs   (stored orientation-normalized)
///   anticommutation  {a,b} = rhs
///   substitution     g := rhs      (g replaced everywhere by rhs)
///   square           g*g = rhs     (involutions: alpha1^2 = 1, ...)
///   scalar-commutes  g commutes with everything, unless a specific
///                    pair fact overrides
class RuleSet {
  public:
    enum class PairKind { commute, anticommute };

    struct PairRule {
        PairKind kind;
        OperatorExpression rhs;  // [lo,hi] = rhs  or  {lo,hi} = rhs
    };

    /// Declare [a,b] = rhs.
    void add_commutator(Gen a, Gen b, OperatorExpression rhs);
    /// Declare {a,b} = rhs.
    void add_anticommutator(Gen a, Gen b, OperatorExpression rhs);
    /// Declare g := rhs.
    void add_substitution(Gen g, OperatorExpression rhs);
    /// Declare g*g = rhs.
    void add_square(Gen g, OperatorExpression rhs);
    /// Declare that g commutes with every generator absent a pair fact.
    void add_scalar_commutes(Gen g);

    const OperatorExpression* substitution(Gen g) const;
    const OperatorExpression* square(Gen g) const;

    /// Rule for an adjacent out-of-order pair hi*lo (hi > lo), if any.
    /// Returns the pair kind plus the expression [hi,lo] (resp. {hi,lo}).
    std::optional<PairRule> swap_rule(Gen hi, Gen lo) const;

    std::size_t step_budget() const { return budget_; }
    void set_step_budget(std::size_t b) { budget_ = b; }

    /// Commutation facts shared by the whole artifact: [x1,p1] = i,
    /// [p0,t] = i, t scalar-commutes, scalars and differentials commute
    /// with the matrix generators, alpha_j^2 = beta^2 = 1 and all
    /// distinct Dirac matrices anticommute. theta1 commutes with
    /// t, x1, p1, p0 only; its algebra with alpha/beta is left open.
    static RuleSet canonical();

    /// canonical() plus concrete substitutions
    ///   H := alpha1*p1 + m*beta,  T := alpha1*x1 - alpha1*theta1.
    /// Pass theta1_zero = true to also substitute theta1 := 0.
    static RuleSet concrete_dirac(const Rational& mass, bool theta1_zero = true);

    /// canonical() plus the opaque conjugation facts
    ///   [H,T] = -i,  [H,p1] = 0
    /// with H and T kept unexpanded.
    static RuleSet abstract_conjugate();

  private:
    std::map<std::pair<Gen, Gen>, PairRule> pairs_;
    std::map<Gen, OperatorExpression> subst_;
    std::map<Gen, OperatorExpression> squares_;
    std::set<Gen> scalar_commutes_;
    std::size_t budget_ = 1'000'000;
};

/// Sink for rewrite-step traces; prove_zero records one line per step.
struct StepSink {
    std::vector<std::string> lines;
    void note(const std::string& s) { lines.push_back(s); }
};

/// Rewrites e to its unique canonical form under the declared relations:
/// substitutions expanded, squares reduced, letters sorted into the Gen
/// order wherever a declared relation allows the swap. Terms that cannot
/// be reordered further (e.g. words mixing theta1 with alpha1/beta) are
/// kept verbatim.
///
/// Throws BudgetExceeded when the rule set fails to terminate within the
/// step budget.
OperatorExpression normalize(const OperatorExpression& e, const RuleSet& rules,
                             StepSink* trace = nullptr);

/// normalize(ab - ba)
OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b,
                              const RuleSet& rules);
/// normalize(ab + ba)
OperatorExpression anticommutator(const OperatorExpression& a, const OperatorExpression& b,
                                  const RuleSet& rules);

/// Formal time derivative of a word sum: product rule over the explicit
/// t letters, all other generators treated as t-independent.
OperatorExpression partial_t(const OperatorExpression& e);

/// Heisenberg derivative  dA/dt = dA/dt|_explicit + i [H, A], normalized.
OperatorExpression heisenberg_derivative(const OperatorExpression& a,
                                         const OperatorExpression& hamiltonian,
                                         const RuleSet& rules);

/// Outcome of a reduction-to-zero proof, with the full rewrite trace.
struct ProofLedger {
    std::string title;
    std::string input;
    std::vector<std::string> steps;
    OperatorExpression residual;
    bool verified = false;
    std::size_t steps_used = 0;

    /// One rewrite step per line, fixed format, suitable for golden
    /// files.
    std::string report() const;
};

/// Normalizes e and records every rewrite step. verified iff the normal
/// form is the zero expression; otherwise the irreducible residual is
/// reported verbatim.
ProofLedger prove_zero(const std::string& title, const OperatorExpression& e,
                       const RuleSet& rules);

/// Checks (alpha1*x1 + tau*beta)^2 - x1^2 - tau^2 reduces to zero.
ProofLedger square_identity_check(const Rational& tau);

/// Evaluates an expression containing only matrix letters (alpha1, beta)
/// in the fixed 2x2 representation. Throws UnknownGenerator if any other
/// letter occurs; this is the independent cross-check route against
/// normalize().
clifford::DiracMatrix to_matrix(const OperatorExpression& e);

}  // namespace chronop::opcalc
