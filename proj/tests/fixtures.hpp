#pragma once

#include "eqloc/localization.hpp"
#include "test_util.hpp"

namespace eqloc {

/// CP¹ with the standard rotation: weights +1 at [0:1], -1 at [1:0].
inline FixedPointProblem sphere_problem()
{
	FixedPointProblem p;
	p.rank = 1;
	p.dim = 1;
	p.chamber = Chamber({Rational(1)});
	FixedPoint a, b;
	a.name = "zero";
	a.weights = {E({1})};
	b.name = "infinity";
	b.weights = {E({-1})};
	p.points = {a, b};
	p.poincare = GradedLaurentPoly::constant(1, Scalar(1));
	return p;
}

/// Singular quadric Z²=XY in CP³, torus (λ,μ), chamber ξ=(2,1).
inline FixedPointProblem quadric_problem()
{
	FixedPointProblem p;
	p.rank = 2;
	p.dim = 2;
	p.chamber = Chamber({Rational(2), Rational(1)});
	FixedPoint sing, a1, a2;
	sing.name = "cone";
	GradedLaurentPoly n0(2);
	n0.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
	n0.add_term(E({1, 1}), GradedCoeff(Scalar(1)));
	sing.contribution = Contribution{
	    {0, 0, canonicalize(CharFraction(n0, {E({2, 0}), E({0, 2})}))}};
	sing.canonical = E({-1, -1});
	a1.name = "a1";
	a1.weights = {E({-1, 1}), E({-2, 0})};
	a2.name = "a2";
	a2.weights = {E({1, -1}), E({0, -2})};
	p.points = {sing, a1, a2};
	p.poincare = GradedLaurentPoly::constant(2, Scalar(1));
	return p;
}

/// Z⁴ = X³Y in CP³ with (λ,μ)·[W:X:Y:Z] = [W:λ⁴X:μ⁴Y:λ³μZ]; BFQ local data
/// at the two singular points, chamber ξ=(1,2).
inline FixedPointProblem calabi_yau_problem()
{
	FixedPointProblem p;
	p.rank = 2;
	p.dim = 2;
	p.chamber = Chamber({Rational(1), Rational(2)});

	FixedPoint a1, a2, a3;
	a1.name = "a1";
	{
		GradedLaurentPoly n(2); // 1 + λ³μ + (λ³μ)² + (λ³μ)³
		for (int c = 0; c <= 3; ++c)
			n.add_term(E({3 * c, c}), GradedCoeff(Scalar(1)));
		a1.contribution = Contribution{
		    {0, 0, canonicalize(CharFraction(n, {E({4, 0}), E({0, 4})}))}};
		GradedLaurentPoly nd(2); // same numerator, dual side
		for (int c = 0; c <= 3; ++c)
			nd.add_term(E({3 * c, c}), GradedCoeff(Scalar(1)));
		CharFraction d(nd * GradedLaurentPoly::monomial(E({-4, -4})),
		               {E({-4, 0}), E({0, -4})});
		a1.dual_contribution = Contribution{{2, 0, canonicalize(d)}};
		// χ₁ carrier for the NUT module: constructed self-dual character with
		// u=λ⁴, v=μ⁴ (see corpus notes)
		GradedLaurentPoly chi(2);
		auto add = [&](int a, int b, long long c) {
			chi.add_term(E({4 * a, 4 * b}), GradedCoeff(Scalar(c)));
		};
		add(0, 0, 1);
		add(1, 0, 6);
		add(0, 1, 6);
		add(1, 1, 22);
		add(2, 1, 6);
		add(1, 2, 6);
		add(2, 2, 1);
		a1.chi1 = canonicalize(CharFraction(chi, {E({8, 0}), E({0, 8})}));
	}
	a2.name = "a2";
	a2.weights = {E({-4, 0}), E({-1, 1})};
	a3.name = "a3";
	{
		GradedLaurentPoly n(2); // (1+t+t²+t³)·μ⁸λ^{-4}, t = λ³μ^{-3}
		for (int c = 0; c <= 3; ++c)
			n.add_term(E({-4 + 3 * c, 8 - 3 * c}), GradedCoeff(Scalar(1)));
		a3.contribution = Contribution{
		    {2, 0, canonicalize(CharFraction(n, {E({0, 4}), E({-4, 4})}))}};
		GradedLaurentPoly nd(2); // (1+t+t²+t³), dual side at b⁰
		for (int c = 0; c <= 3; ++c)
			nd.add_term(E({3 * c, -3 * c}), GradedCoeff(Scalar(1)));
		a3.dual_contribution = Contribution{
		    {0, 0, canonicalize(CharFraction(nd, {E({0, -4}), E({4, -4})}))}};
		// χ₁: smooth-type character in the cone variables λ/μ and μ^{-4}
		GradedLaurentPoly cn(2);
		cn.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
		cn.add_term(E({1, -1}), GradedCoeff(Scalar(1)));
		cn.add_term(E({0, -4}), GradedCoeff(Scalar(1)));
		cn.add_term(E({1, -5}), GradedCoeff(Scalar(1)));
		a3.chi1 = canonicalize(CharFraction(cn, {E({1, -1}), E({0, -4})}));
	}
	p.points = {a1, a2, a3};
	GradedLaurentPoly poincare(2); // 1 + b²λ⁵μ^{-1}
	poincare.add_term(E({0, 0}), GradedCoeff(Scalar(1)));
	poincare.add_term(E({5, -1}), GradedCoeff::monomial(2, 0, Scalar(1)));
	p.poincare = poincare;
	return p;
}

/// Cusp curve ZY² = X³ in CP², λ·[X:Y:Z]=[λ²X:λ³Y:Z]. Two data variants for
/// the singular point: the BFQ local ring and Lott's complex.
inline FixedPointProblem cusp_problem(bool lott)
{
	FixedPointProblem p;
	p.rank = 1;
	p.dim = 1;
	p.chamber = Chamber({Rational(1)});
	FixedPoint smooth, sing;
	smooth.name = "smooth";
	smooth.weights = {E({-1})};
	sing.name = "cusp";
	if (!lott) {
		// local ring {1, t², t³, ...}: 1/(1-λ) - λ = (1-λ+λ²)/(1-λ)
		sing.contribution = Contribution{
		    {0, 0, CharFraction(P1("1 -l l2"), {E({1})})}};
	} else {
		// holomorphic functions in degree 0 plus the skyscraper t in degree 1
		sing.contribution = Contribution{
		    {0, 0, CharFraction(P1("1"), {E({1})})},
		    {1, 0, CharFraction::polynomial(P1("l"))}};
	}
	// dual side from the dualizing module: b·(λ + λ^{-1} + λ^{-2} + ...)
	sing.dual_contribution = Contribution{
	    {1, 0, CharFraction(P1("-1 l -l2"), {E({1})})}};
	p.points = {smooth, sing};
	GradedLaurentPoly poincare(1); // 1 + bλ
	poincare.add_term(E({0}), GradedCoeff(Scalar(1)));
	poincare.add_term(E({1}), GradedCoeff::monomial(1, 0, Scalar(1)));
	p.poincare = poincare;
	return p;
}

/// Conifold Y₁Y₄ = Y₂Y₃ in CP⁴: explicit local Poincaré-Hodge data.
inline FixedPointProblem conifold_problem()
{
	FixedPointProblem p;
	p.rank = 3;
	p.dim = 3;
	p.chamber = Chamber({Rational(4), Rational(2), Rational(1)});
	auto constant_term = [&](int b, int y) {
		return ContribTerm{b, y,
		                   CharFraction::polynomial(
		                       GradedLaurentPoly::constant(3, Scalar(1)))};
	};
	FixedPoint sing;
	sing.name = "cone";
	sing.contribution = Contribution{constant_term(0, 0), constant_term(1, 1)};
	p.points.push_back(sing);
	int idx = 1;
	for (auto [b, y] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 2}, {3, 3}}) {
		FixedPoint fp;
		fp.name = "s" + std::to_string(idx++);
		fp.contribution = Contribution{constant_term(b, y)};
		p.points.push_back(fp);
	}
	return p;
}

/// CP² with torus weights (1,2)-compatible tangent characters.
inline FixedPointProblem cp2_problem()
{
	FixedPointProblem p;
	p.rank = 2;
	p.dim = 2;
	p.chamber = Chamber({Rational(1), Rational(2)});
	FixedPoint p0, p1, p2;
	p0.name = "p0";
	p0.weights = {E({1, 0}), E({0, 1})};
	p1.name = "p1";
	p1.weights = {E({-1, 0}), E({-1, 1})};
	p2.name = "p2";
	p2.weights = {E({0, -1}), E({1, -1})};
	p.points = {p0, p1, p2};
	return p;
}

} // namespace eqloc
