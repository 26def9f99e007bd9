#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eqloc;

namespace {

CharFraction frac1(const std::string &num, std::initializer_list<long long> dens)
{
	std::vector<Exponent> d;
	for (auto x : dens)
		d.push_back(Exponent({Rational(x)}));
	return canonicalize(CharFraction(P1(num), std::move(d)));
}

const CharFraction &single(const Contribution &c, int b)
{
	for (auto &t : c)
		if (t.b_deg == b && t.y_deg == 0)
			return t.frac;
	throw std::runtime_error("no term at requested degree");
}

} // namespace

TEST_CASE("sphere contributions")
{
	auto p = sphere_problem();
	auto c0 = smooth_contribution(p.points[0], p.chamber, p.dim);
	REQUIRE(c0.size() == 1);
	REQUIRE(c0[0].b_deg == 0);
	REQUIRE(frac_equals(c0[0].frac, frac1("1", {1})));

	auto c1 = smooth_contribution(p.points[1], p.chamber, p.dim);
	REQUIRE(c1[0].b_deg == 1);
	REQUIRE(frac_equals(c1[0].frac, frac1("l", {1})));

	FixedPoint bare;
	bare.name = "bad";
	REQUIRE_THROWS(smooth_contribution(bare, p.chamber, p.dim));
}

TEST_CASE("sphere dual contributions give the reversed geometric series")
{
	auto p = sphere_problem();
	// [0:1] dual: b·λ^{-1}/(1-λ^{-1}), i.e. b Σ_{k≥1} λ^{-k}
	auto d0 = dual_contribution(smooth_contribution(p.points[0], p.chamber, 1),
	                            p.points[0], 1);
	REQUIRE(d0[0].b_deg == 1);
	CharFraction expect0(GradedLaurentPoly::monomial(E({-1})), {E({-1})});
	REQUIRE(frac_equals(d0[0].frac, canonicalize(expect0)));

	// [1:0] dual: b⁰ Σ_{k≥0} λ^{-k} = 1/(1-λ^{-1})
	auto d1 = dual_contribution(smooth_contribution(p.points[1], p.chamber, 1),
	                            p.points[1], 1);
	REQUIRE(d1[0].b_deg == 0);
	REQUIRE(frac_equals(d1[0].frac, canonicalize(CharFraction(P1("1"), {E({-1})}))));

	// involution: the canonical trace of the dual complex, written in the
	// problem's fixed variables, is the same stored exponent
	FixedPoint clone = p.points[0];
	clone.canonical = E({-1});
	auto once = dual_contribution(smooth_contribution(p.points[0], p.chamber, 1),
	                              clone, 1);
	auto twice = dual_contribution(once, clone, 1);
	REQUIRE(twice[0].b_deg == 0);
	REQUIRE(frac_equals(twice[0].frac, frac1("1", {1})));
}

TEST_CASE("Calabi-Yau smooth point contribution")
{
	// weights {λ^{-4}, μ/λ} in chamber ξ=(1,2): b¹ λ⁴/(1-λ⁴) · 1/(1-μλ^{-1})
	auto cy = calabi_yau_problem();
	auto c = smooth_contribution(cy.points[1], cy.chamber, cy.dim);
	REQUIRE(c.size() == 1);
	REQUIRE(c[0].b_deg == 1);
	GradedLaurentPoly n(2);
	n.add_term(E({4, 0}), GradedCoeff(Scalar(1)));
	CharFraction display(n, {E({4, 0}), E({-1, 1})});
	REQUIRE(frac_equals(c[0].frac, canonicalize(display)));
}

TEST_CASE("Morse index complementarity")
{
	auto problems = {quadric_problem(), calabi_yau_problem()};
	for (auto &p : problems)
		for (auto &fp : p.points) {
			if (fp.weights.empty())
				continue;
			int na = morse_index(fp, p.chamber);
			int nd = morse_index(fp, p.chamber.opposite());
			REQUIRE(na + nd == p.dim);
		}
}

TEST_CASE("global closed forms at b=-1")
{
	// sphere: 1/(1-λ) - λ/(1-λ) = 1
	auto sp = sphere_problem();
	auto sphere_sum = evaluate_contribution(global_closed_form(sp, Side::morse),
	                                        1, Scalar(-1), Scalar(1));
	REQUIRE(frac_equals(sphere_sum, CharFraction::polynomial(P1("1"))));

	// quadric: 1 (cross-multiplication oracle)
	auto qp = quadric_problem();
	auto quad_sum = evaluate_contribution(global_closed_form(qp, Side::morse),
	                                      2, Scalar(-1), Scalar(1));
	REQUIRE(frac_equals(
	    quad_sum,
	    CharFraction::polynomial(GradedLaurentPoly::constant(2, Scalar(1)))));

	// Z⁴-X³Y: 1 + λ⁵μ^{-1}
	auto cy = calabi_yau_problem();
	auto cy_sum = evaluate_contribution(global_closed_form(cy, Side::morse), 2,
	                                    Scalar(-1), Scalar(1));
	GradedLaurentPoly expect(2);
	expect.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
	expect.add_term(E({5, -1}), GradedCoeff(Scalar(1)));
	REQUIRE(frac_equals(cy_sum, CharFraction::polynomial(expect)));
}

TEST_CASE("quadric smooth Morse contributions")
{
	// a1: b²(λ/μ)λ²/((1-λ/μ)(1-λ²)), a2: bμ²/((1-λ/μ)(1-μ²))
	auto qp = quadric_problem();
	auto c1 = smooth_contribution(qp.points[1], qp.chamber, 2);
	REQUIRE(c1[0].b_deg == 2);
	REQUIRE(frac_equals(c1[0].frac,
	                    canonicalize(CharFraction(
	                        GradedLaurentPoly::monomial(E({3, -1})),
	                        {E({1, -1}), E({2, 0})}))));
	auto c2 = smooth_contribution(qp.points[2], qp.chamber, 2);
	REQUIRE(c2[0].b_deg == 1);
	REQUIRE(frac_equals(c2[0].frac,
	                    canonicalize(CharFraction(
	                        GradedLaurentPoly::monomial(E({0, 2})),
	                        {E({1, -1}), E({0, 2})}))));
}

TEST_CASE("Calabi-Yau dual contribution closed forms")
{
	auto cy = calabi_yau_problem();
	// a2 dual: b·(λ/μ)/((1-λ^{-4})(1-λ/μ)) via the default κ = λ⁵μ^{-1}
	auto d2 = side_contribution(cy, cy.points[1], Side::dual);
	REQUIRE(d2[0].b_deg == 1);
	GradedLaurentPoly n(2);
	n.add_term(E({1, -1}), GradedCoeff(Scalar(1)));
	CharFraction display(n, {E({-4, 0}), E({1, -1})});
	REQUIRE(frac_equals(d2[0].frac, canonicalize(display)));
}

TEST_CASE("quadric dual singular contribution closed form")
{
	auto qp = quadric_problem();
	auto dual = side_contribution(qp, qp.points[0], Side::dual);
	REQUIRE(dual.size() == 1);
	REQUIRE(dual[0].b_deg == 2);
	// b²(1+λμ)λ^{-2}μ^{-2}/((1-λ^{-2})(1-μ^{-2}))
	GradedLaurentPoly n(2);
	n.add_term(E({-2, -2}), GradedCoeff(Scalar(1)));
	n.add_term(E({-1, -1}), GradedCoeff(Scalar(1)));
	CharFraction display(n, {E({-2, 0}), E({0, -2})});
	REQUIRE(frac_equals(dual[0].frac, canonicalize(display)));
}

TEST_CASE("Serre duality identity D_q = (-1)^n M_{n-q} on worked examples")
{
	auto check = [](const FixedPointProblem &p) {
		auto morse = global_closed_form(p, Side::morse);
		auto dual = global_closed_form(p, Side::dual);
		Scalar sign(p.dim % 2 ? -1 : 1);
		for (auto &t : dual) {
			const CharFraction &m = single(morse, p.dim - t.b_deg);
			REQUIRE(frac_equals(t.frac, frac_scale(m, GradedCoeff(sign))));
		}
	};
	check(sphere_problem());
	check(quadric_problem());
	check(calabi_yau_problem());
	check(cusp_problem(false));
}

TEST_CASE("classical Morse polynomials")
{
	bool stable = false;

	auto sp = sphere_problem();
	auto cs = classical_morse(sp, Rational(10), &stable);
	REQUIRE(stable);
	REQUIRE(cs == GradedLaurentPoly::constant(1, Scalar(1)));

	auto qp = quadric_problem();
	auto cq = classical_morse(qp, Rational(12), &stable);
	REQUIRE(stable);
	REQUIRE(cq == GradedLaurentPoly::constant(2, Scalar(1)));

	auto cy = calabi_yau_problem();
	auto cc = classical_morse(cy, Rational(10), &stable);
	REQUIRE(stable);
	GradedLaurentPoly expect(2); // 1 + b²λ⁵μ^{-1}
	expect.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
	expect.add_term(E({5, -1}), GradedCoeff::monomial(2, 0, Scalar(1)));
	REQUIRE(cc == expect);

	for (bool lott : {false, true}) {
		auto cp = cusp_problem(lott);
		auto cl = classical_morse(cp, Rational(10), &stable);
		REQUIRE(stable);
		GradedLaurentPoly e1(1); // 1 + bλ
		e1.add_term(E({0}), GradedCoeff(Scalar(1)));
		e1.add_term(E({1}), GradedCoeff::monomial(1, 0, Scalar(1)));
		REQUIRE(cl == e1);
	}
}

TEST_CASE("classical Morse polynomial invariant under chamber rescaling")
{
	auto cy = calabi_yau_problem();
	bool stable = false;
	auto base = classical_morse(cy, Rational(10), &stable);
	FixedPointProblem scaled = cy;
	for (auto &x : scaled.chamber.xi)
		x *= Rational(7, 3);
	// cutoff scales along with ξ so the window covers the same exponents
	auto again = classical_morse(scaled, Rational(10) * Rational(7, 3), &stable);
	REQUIRE(base == again);
}

TEST_CASE("verify_inequality on both sides of every worked example")
{
	for (auto &p : {sphere_problem(), quadric_problem(), calabi_yau_problem(),
	                cusp_problem(false), cusp_problem(true)}) {
		Rational T(10);
		auto morse = global_series(p, Side::morse, T);
		auto repm = verify_inequality(morse, *p.poincare, p.dim, p.chamber, T);
		INFO(repm.failure);
		REQUIRE(repm.holds);
		auto dual = global_series(p, Side::dual, T);
		auto repd = verify_inequality(dual, *p.poincare, p.dim,
		                              p.chamber.opposite(), T);
		INFO(repd.failure);
		REQUIRE(repd.holds);
	}
}

TEST_CASE("sphere inequality report has unit Q_0 coefficients")
{
	auto sp = sphere_problem();
	Rational T(10);
	auto rep = verify_inequality(global_series(sp, Side::morse, T), *sp.poincare,
	                             1, sp.chamber, T);
	REQUIRE(rep.holds);
	for (long long k = 1; k <= 10; ++k)
		REQUIRE(rep.Q.at({E({RatLit(static_cast<int>(k))}), 0}) == Scalar(1));
	REQUIRE(rep.Q.count({E({0}), 0}) == 0);
}

TEST_CASE("verify_inequality detects M = P and failures")
{
	auto sp = sphere_problem();
	Rational T(8);
	// M = P: all Q vanish
	DegreeSeries flat;
	flat.add(0, E({0}), Scalar(1));
	auto rep = verify_inequality(flat, *sp.poincare, 1, sp.chamber, T);
	REQUIRE(rep.holds);
	REQUIRE(rep.Q.empty());
	// wrong Poincaré input breaks the top identity
	GradedLaurentPoly wrong = GradedLaurentPoly::constant(1, Scalar(2));
	auto bad = verify_inequality(global_series(sp, Side::morse, T), wrong, 1,
	                             sp.chamber, T);
	REQUIRE_FALSE(bad.holds);
}

TEST_CASE("lacunary principle")
{
	auto one = GradedLaurentPoly::constant(1, Scalar(1));
	auto v = lacunary_conclusion(one, 1);
	REQUIRE(v.equals_poincare);
	REQUIRE(*v.poincare == one);

	GradedLaurentPoly cy(2); // 1 + b²λ⁵μ^{-1}: degrees 0 and 2 not adjacent
	cy.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
	cy.add_term(E({5, -1}), GradedCoeff::monomial(2, 0, Scalar(1)));
	REQUIRE(lacunary_conclusion(cy, 2).equals_poincare);

	GradedLaurentPoly rs(1); // λ^{-1/2}(1+b): adjacent degrees 0,1
	rs.add_term(E({{-1, 2}}), GradedCoeff(Scalar(1)));
	rs.add_term(E({{-1, 2}}), GradedCoeff::monomial(1, 0, Scalar(1)));
	REQUIRE_FALSE(lacunary_conclusion(rs, 1).equals_poincare);
}

TEST_CASE("spin vanishing for sphere K^{1/2} data")
{
	// sphere, E = K^{1/2}: contributions λ^{1/2}/(1-λ) and bλ^{1/2}/(1-λ)
	FixedPointProblem p;
	p.rank = 1;
	p.dim = 1;
	p.root_order = 2;
	p.chamber = Chamber({Rational(1)});
	FixedPoint a, b;
	a.name = "zero";
	a.weights = {E({1})};
	a.bundle = GradedLaurentPoly::monomial(E({{1, 2}}));
	a.dual_contribution = Contribution{
	    {1, 0,
	     canonicalize(CharFraction(GradedLaurentPoly::monomial(E({{-1, 2}})),
	                               {E({-1})}))}};
	b.name = "infinity";
	b.weights = {E({-1})};
	b.bundle = GradedLaurentPoly::monomial(E({{-1, 2}}));
	b.dual_contribution = Contribution{
	    {0, 0,
	     canonicalize(CharFraction(GradedLaurentPoly::monomial(E({{-1, 2}})),
	                               {E({-1})}))}};
	p.points = {a, b};
	// the Morse side matches the stated contributions
	auto c0 = side_contribution(p, p.points[0], Side::morse);
	REQUIRE(frac_equals(
	    single(c0, 0),
	    canonicalize(CharFraction(GradedLaurentPoly::monomial(E({{1, 2}})),
	                              {E({1})}))));
	auto c1 = side_contribution(p, p.points[1], Side::morse);
	REQUIRE(frac_equals(
	    single(c1, 1),
	    canonicalize(CharFraction(GradedLaurentPoly::monomial(E({{1, 2}})),
	                              {E({1})}))));
	REQUIRE(check_vanishing(p, Rational(12)));

	// sphere with trivial bundle does not vanish
	REQUIRE_FALSE(check_vanishing(sphere_problem(), Rational(12)));
}

TEST_CASE("conifold Poincaré-Hodge polynomial")
{
	auto p = conifold_problem();
	auto rep = chi_yb_assemble(p);
	REQUIRE(rep.polynomial.has_value());
	GradedLaurentPoly expect(3); // 1 + 2by + 2b²y² + b³y³
	expect.add_term(E({0, 0, 0}), GradedCoeff(Scalar(1)));
	expect.add_term(E({0, 0, 0}), GradedCoeff::monomial(1, 1, Scalar(2)));
	expect.add_term(E({0, 0, 0}), GradedCoeff::monomial(2, 2, Scalar(2)));
	expect.add_term(E({0, 0, 0}), GradedCoeff::monomial(3, 3, Scalar(1)));
	REQUIRE(*rep.polynomial == expect);
	// signature: evaluation at (b,y)=(-1,1) is 0
	REQUIRE(eval_grading(*rep.polynomial, Scalar(-1), Scalar(1)).is_zero());
	REQUIRE(chi_duality_check(*rep.polynomial, 3));
	// single point with datum (0,0) assembles to 1
	FixedPointProblem tiny;
	tiny.rank = 1;
	tiny.dim = 1;
	tiny.chamber = Chamber({Rational(1)});
	FixedPoint fp;
	fp.name = "pt";
	fp.contribution = Contribution{{0, 0, CharFraction::polynomial(P1("1"))}};
	tiny.points = {fp};
	REQUIRE(*chi_yb_assemble(tiny).polynomial == P1("1"));
}

TEST_CASE("chi duality check rejects asymmetric polynomials")
{
	GradedLaurentPoly p(1); // 1 + by, n=1: palindrome
	p.add_term(E({0}), GradedCoeff(Scalar(1)));
	p.add_term(E({0}), GradedCoeff::monomial(1, 1, Scalar(1)));
	REQUIRE(chi_duality_check(p, 1));

	GradedLaurentPoly q(1); // 1 + b²y with n=2: not self-dual
	q.add_term(E({0}), GradedCoeff(Scalar(1)));
	q.add_term(E({0}), GradedCoeff::monomial(2, 1, Scalar(1)));
	REQUIRE_FALSE(chi_duality_check(q, 2));
}
