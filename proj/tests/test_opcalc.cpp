// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "chronop/opcalc.hpp"
#include "chronop/opcalc_parser.hpp"

using namespace chronop;
using namespace chronop::opcalc;

namespace {

OperatorExpression parse(const std::string& s) { return parse_expression(s); }

// random formal sums over a small generator pool, exact coefficients
OperatorExpression random_expression(std::mt19937_64& rng, int max_len,
                                     bool matrix_only = false) {
    static const Gen full[] = {Gen::t, Gen::x1, Gen::p1, Gen::alpha1, Gen::beta};
    static const Gen matrices[] = {Gen::alpha1, Gen::beta};
    static const ExactComplex coeffs[] = {
        ExactComplex(1), ExactComplex(-1), ExactComplex(Rational(1, 2)),
        ExactComplex(Rational(-2, 3)), ExactComplex::i(),
        ExactComplex(Rational(1), Rational(1))};
    std::uniform_int_distribution<int> n_terms(1, 3);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick_full(0, 4);
    std::uniform_int_distribution<int> pick_mat(0, 1);
    std::uniform_int_distribution<int> pick_coeff(0, 5);
    OperatorExpression e;
    const int terms = n_terms(rng);
    for (int i = 0; i < terms; ++i) {
        Word w;
        const int l = len(rng);
        for (int j = 0; j < l; ++j)
            w.push_back(matrix_only ? matrices[pick_mat(rng)] : full[pick_full(rng)]);
        e += OperatorExpression::word(w, coeffs[pick_coeff(rng)]);
    }
    return e;
}

const RuleSet& canon() {
    static const RuleSet r = RuleSet::canonical();
    return r;
}

}  // namespace

TEST_CASE("canonical pair reduces to i") {
    CHECK(normalize(parse("x1*p1 - p1*x1"), canon()) ==
          OperatorExpression::scalar(ExactComplex::i()));
    CHECK(normalize(parse("[x1,p1] - i*unit"), canon()).is_zero());
}

TEST_CASE("matrix squares reduce to the identity word") {
    CHECK(normalize(parse("alpha1*alpha1"), canon()) == OperatorExpression::unit());
    CHECK(normalize(parse("beta*beta*beta"), canon()) ==
          normalize(parse("beta"), canon()));
}

TEST_CASE("independent letters stay put") {
    const auto e = parse("t*p1");
    CHECK(normalize(e, canon()) == e);
}

TEST_CASE("formal time derivative of t coordinate") {
    CHECK(partial_t(parse("t")) == OperatorExpression::unit());
    CHECK(partial_t(parse("t*t")) == parse("2*t"));
    CHECK(partial_t(parse("t*p1 + x1")) == parse("p1"));
    CHECK(partial_t(parse("p1*alpha1")).is_zero());
}

TEST_CASE("free Dirac anticommutation and conservation identities") {
    const auto concrete = RuleSet::concrete_dirac(Rational(3, 2));
    CHECK(normalize(parse("{H,alpha1} - 2*p1"), concrete).is_zero());
    CHECK(normalize(parse("[H,-x1*H] - i*alpha1*H"), concrete).is_zero());
    CHECK(normalize(parse("[H, i/2*alpha1] - (i*H*alpha1 - i*p1)"), concrete).is_zero());
    CHECK(normalize(parse("[alpha1*x1, alpha1*p1] - i*unit"), canon()).is_zero());

    // also at other masses
    for (long m : {0L, 1L, 7L}) {
        const auto rules = RuleSet::concrete_dirac(Rational(m));
        CHECK(normalize(parse("{H,alpha1} - 2*p1"), rules).is_zero());
    }
}

TEST_CASE("Heisenberg derivative routes") {
    const auto concrete = RuleSet::concrete_dirac(Rational(3, 2));
    const auto abstract_rules = RuleSet::abstract_conjugate();
    const auto h = parse("H");
    const auto p1 = parse("p1");

    SUBCASE("full boost generator is conserved") {
        const auto j01 = parse("t*p1 - x1*H + i/2*alpha1");
        CHECK(heisenberg_derivative(j01, h, concrete).is_zero());
    }
    SUBCASE("time-coordinate route") {
        CHECK(heisenberg_derivative(parse("t*p1"), h, concrete) == p1);
    }
    SUBCASE("opaque time-function route") {
        CHECK(heisenberg_derivative(parse("T*p1"), h, abstract_rules) == p1);
    }
    SUBCASE("momentum is conserved") {
        CHECK(heisenberg_derivative(p1, h, concrete).is_zero());
        CHECK(heisenberg_derivative(p1, h, abstract_rules).is_zero());
    }
}

TEST_CASE("proof ledgers carry the trace and the verdict") {
    const auto lg = prove_zero("canonical pair", parse("[alpha1*x1, alpha1*p1] - i*unit"),
                               canon());
    CHECK(lg.verified);
    CHECK(lg.steps_used > 0);
    CHECK(lg.steps.size() == lg.steps_used);
    CHECK(lg.residual.is_zero());
    const std::string report = lg.report();
    CHECK(report.find("verdict: VERIFIED") != std::string::npos);
    CHECK(report.find("step 1:") != std::string::npos);
}

TEST_CASE("conjugation residual is disclosed, never dropped") {
    // T := alpha1*x1 - alpha1*theta1 against H := alpha1*p1 + m*beta
    const auto rules = RuleSet::concrete_dirac(Rational(3, 2), /*theta1_zero=*/false);
    const auto lg = prove_zero("conjugation with the full Hamiltonian",
                               parse("[T,H] - i*unit"), rules);
    CHECK_FALSE(lg.verified);
    // the mass term 2m * x1*alpha1*beta survives with m = 3/2
    const Word mass_word{Gen::x1, Gen::alpha1, Gen::beta};
    auto it = lg.residual.terms().find(mass_word);
    REQUIRE(it != lg.residual.terms().end());
    CHECK(it->second == ExactComplex(3));
    // theta1 words are reported verbatim
    bool has_theta = false;
    for (const auto& [w, c] : lg.residual.terms())
        for (Gen g : w)
            if (g == Gen::theta1) has_theta = true;
    CHECK(has_theta);

    // at m = 0 with theta1 := 0 the identity is exact
    const auto massless = RuleSet::concrete_dirac(Rational(0), /*theta1_zero=*/true);
    CHECK(prove_zero("massless conjugation", parse("[T,H] - i*unit"), massless).verified);
}

TEST_CASE("squared time function linearizes") {
    for (const Rational& tau : {Rational(0), Rational(1), Rational(3, 2)})
        CHECK(square_identity_check(tau).verified);
}

TEST_CASE("three-dimensional alpha contraction") {
    // alpha.alpha = 3 from the declared squares alone
    CHECK(normalize(parse("alpha1*alpha1 + alpha2*alpha2 + alpha3*alpha3 - 3"),
                    canon())
              .is_zero());
    // distinct alphas anticommute
    CHECK(normalize(parse("{alpha1,alpha2}"), canon()).is_zero());
    CHECK(normalize(parse("{alpha2,alpha3}"), canon()).is_zero());
    CHECK(normalize(parse("{alpha2,beta}"), canon()).is_zero());
}

TEST_CASE("normalize is idempotent and linear") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_expression(rng, 3);
        const auto b = random_expression(rng, 3);
        const auto na = normalize(a, canon());
        const auto nb = normalize(b, canon());
        CHECK(normalize(na, canon()) == na);
        CHECK(normalize(a + b, canon()) == na + nb);
    }
}

TEST_CASE("bracket is bilinear, antisymmetric and satisfies Jacobi") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const auto a = random_expression(rng, 3);
        const auto b = random_expression(rng, 3);
        const auto c = random_expression(rng, 3);
        CHECK((commutator(a, b, canon()) + commutator(b, a, canon())).is_zero());
        CHECK(commutator(a + b, c, canon()) ==
              commutator(a, c, canon()) + commutator(b, c, canon()));
        auto br = [](const OperatorExpression& x, const OperatorExpression& y) {
            return x * y - y * x;
        };
        CHECK(normalize(br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b), canon())
                  .is_zero());
    }
}

TEST_CASE("derived product rule for the bracket") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; ++it) {
        const auto a = random_expression(rng, 2);
        const auto b = random_expression(rng, 2);
        const auto c = random_expression(rng, 2);
        const auto lhs = commutator(a * b, c, canon());
        const auto rhs =
            normalize(a * (b * c - c * b) + (a * c - c * a) * b, canon());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rewriting agrees with exact 2x2 matrix evaluation") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; ++it) {
        const auto e = random_expression(rng, 5, /*matrix_only=*/true);
        const auto direct = to_matrix(e);                   // plain matrix products
        const auto reduced = to_matrix(normalize(e, canon()));  // rewrite route
        CHECK(direct == reduced);
    }
}

TEST_CASE("to_matrix rejects non-matrix letters") {
    CHECK_THROWS_AS(to_matrix(parse("x1*alpha1")), UnknownGenerator);
}

TEST_CASE("budget guards non-terminating substitutions") {
    RuleSet bad = RuleSet::canonical();
    bad.add_substitution(Gen::H, parse("H*H"));
    bad.set_step_budget(1000);
    CHECK_THROWS_AS(normalize(parse("H"), bad), BudgetExceeded);
}

TEST_CASE("explicit pair facts override scalar-commutes") {
    // [p0, t] = i wins over t commuting with everything else
    CHECK(normalize(parse("p0*t - t*p0"), canon()) ==
          OperatorExpression::scalar(ExactComplex::i()));
    CHECK(normalize(parse("t*alpha1 - alpha1*t"), canon()).is_zero());
    CHECK(normalize(parse("t*H - H*t"), canon()).is_zero());
}

TEST_CASE("expression grammar") {
    CHECK(parse("3/2") == OperatorExpression::scalar(ExactComplex(Rational(3, 2))));
    CHECK(parse(" x1 * p1 ") == parse("x1*p1"));
    CHECK(parse("[x1,p1]") == parse("x1*p1 - p1*x1"));
    CHECK(parse("{alpha1,beta}") == parse("alpha1*beta + beta*alpha1"));
    CHECK(parse("-x1 + x1").is_zero());
    CHECK(parse("x1/2") == parse("1/2*x1"));
    CHECK(parse("i*i") == OperatorExpression::scalar(ExactComplex(-1)));
    CHECK(parse("unit") == OperatorExpression::unit());
    CHECK_THROWS_AS(parse("foo"), UnknownGenerator);
    CHECK_THROWS_AS(parse("x1 +"), ParseError);
    CHECK_THROWS_AS(parse("x1)"), ParseError);
    CHECK_THROWS_AS(parse("x1/p1"), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse("[x1,p1"), ParseError);
}

TEST_CASE("printed expressions parse back unchanged") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        const auto e = normalize(random_expression(rng, 3), canon());
        CHECK(parse(to_string(e)) == e);
    }
}

TEST_CASE("ledger report matches the golden file") {
    const auto lg = square_identity_check(Rational(1));
    std::ifstream in(std::string(CHRONOP_TEST_DATA_DIR) + "/golden_square_tau1.ledger.txt",
                     std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(lg.report() == buf.str());
}
