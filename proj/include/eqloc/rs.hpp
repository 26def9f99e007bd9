#pragma once

#include "eqloc/localization.hpp"

namespace eqloc {

/// k-Rarita-Schwinger twist (TX ⊕ k)⊗K^{1/2}, consolidated form:
/// b^{n_a} ∏_j λ^{|γ_j|/2}/(1-λ^{|γ_j|}) · Σ_m (λ^{γ_m}+λ^{-γ_m}+k),
/// |γ| the chamber-positive representative.
inline Contribution rs_contribution(const FixedPoint &fp, long k,
                                    const Chamber &ch, int n)
{
	if (fp.weights.empty())
		throw std::invalid_argument("rs_contribution: point '" + fp.name +
		                            "' needs weights (explicit data required at singular points)");
	int rank = ch.rank();
	int n_a = morse_index(fp, ch);
	Exponent half = Exponent::zero(rank);
	std::vector<Exponent> den;
	for (auto &g : fp.weights) {
		Rational p = ch.pairing(g);
		if (p == 0)
			throw std::domain_error("chamber not generic at '" + fp.name + "'");
		Exponent a = p > 0 ? g : -g;
		den.push_back(a);
		half += Rational(1, 2) * a;
	}
	// Ind_RS = Ind_{D_TX} + k·Ind_S: tangent sum Σ(λ^γ+λ^{-γ}) plus a single
	// k (k copies of the spin character, not one per weight).
	GradedLaurentPoly sum(rank);
	sum.add_term(Exponent::zero(rank), GradedCoeff(Scalar(Rational(k))));
	for (auto &g : fp.weights) {
		sum.add_term(g, GradedCoeff(Scalar(1)));
		sum.add_term(-g, GradedCoeff(Scalar(1)));
	}
	GradedLaurentPoly num = GradedLaurentPoly::monomial(half) * sum;
	CharFraction f = canonicalize(CharFraction(std::move(num), std::move(den)));
	return {{n_a, 0, f}};
}

/// RS Serre dual in the consolidated trivialization: (q,f) ↦
/// (n-q, λ^{-Σ|γ|} · f|_{λ→λ^{-1}}). Equals the opposite-chamber
/// consolidated form times that same canonical trace.
inline Contribution rs_dual_contribution(const FixedPoint &fp, long k,
                                         const Chamber &ch, int n)
{
	Contribution morse = rs_contribution(fp, k, ch, n);
	Exponent sigma = Exponent::zero(ch.rank());
	for (auto &g : fp.weights)
		sigma += ch.pairing(g) > 0 ? g : -g;
	Contribution out;
	for (auto &t : morse) {
		CharFraction g = frac_mul_monomial(frac_invert_vars(t.frac), -sigma);
		merge_term(out, n - t.b_deg, t.y_deg, canonicalize(g));
	}
	return out;
}

/// Problem view with every point's contribution replaced by the k-RS one.
inline FixedPointProblem rs_problem(const FixedPointProblem &p, long k)
{
	FixedPointProblem q = p;
	for (auto &fp : q.points) {
		if (fp.contribution)
			continue; // explicit RS data shipped as-is
		fp.contribution = rs_contribution(fp, k, p.chamber, p.dim);
		fp.dual_contribution = rs_dual_contribution(fp, k, p.chamber, p.dim);
	}
	return q;
}

/// Spin (K^{1/2}) character at a smooth point: ∏ λ^{|γ|/2}/(1-λ^{|γ|}).
inline CharFraction spin_index_fraction(const FixedPoint &fp, const Chamber &ch)
{
	int rank = ch.rank();
	Exponent half = Exponent::zero(rank);
	std::vector<Exponent> den;
	int n_a = 0;
	for (auto &g : fp.weights) {
		Rational p = ch.pairing(g);
		if (p == 0)
			throw std::domain_error("chamber not generic at '" + fp.name + "'");
		Exponent a = p > 0 ? g : -g;
		if (p < 0)
			++n_a;
		den.push_back(a);
		half += Rational(1, 2) * a;
	}
	CharFraction f = canonicalize(
	    CharFraction(GradedLaurentPoly::monomial(half,
	                                             Scalar(n_a % 2 ? -1 : 1)),
	                 std::move(den)));
	return f;
}

/// k-RS index character (b=-1) of a problem: Σ_a (-1)^{n_a}·(RS fraction).
inline CharFraction rs_index_character(const FixedPointProblem &p, long k)
{
	CharFraction acc = CharFraction::zero(p.rank);
	for (auto &fp : p.points) {
		Contribution c = rs_contribution(fp, k, p.chamber, p.dim);
		acc = frac_add(acc, evaluate_contribution(c, p.rank, Scalar(-1), Scalar(1)));
	}
	return acc;
}

inline CharFraction spin_index_character(const FixedPointProblem &p)
{
	CharFraction acc = CharFraction::zero(p.rank);
	for (auto &fp : p.points)
		acc = frac_add(acc, spin_index_fraction(fp, p.chamber));
	return acc;
}

namespace detail {

inline Exponent embed(const Exponent &e, int rank, int offset)
{
	Exponent r = Exponent::zero(rank);
	for (int i = 0; i < e.rank(); ++i)
		r.c[offset + i] = e.c[i];
	return r;
}

} // namespace detail

/// Product problem on disjoint variable blocks: fixed points are pairs,
/// weight lists concatenate.
inline FixedPointProblem product_problem(const FixedPointProblem &a,
                                         const FixedPointProblem &b)
{
	FixedPointProblem p;
	p.rank = a.rank + b.rank;
	p.dim = a.dim + b.dim;
	p.root_order = std::max(a.root_order, b.root_order);
	std::vector<Rational> xi = a.chamber.xi;
	xi.insert(xi.end(), b.chamber.xi.begin(), b.chamber.xi.end());
	p.chamber = Chamber(std::move(xi));
	for (auto &fa : a.points)
		for (auto &fb : b.points) {
			FixedPoint fp;
			fp.name = fa.name + "x" + fb.name;
			if (fa.weights.empty() || fb.weights.empty())
				throw std::invalid_argument("rs_product_check: smooth points with weights required");
			for (auto &g : fa.weights)
				fp.weights.push_back(detail::embed(g, p.rank, 0));
			for (auto &g : fb.weights)
				fp.weights.push_back(detail::embed(g, p.rank, a.rank));
			p.points.push_back(std::move(fp));
		}
	return p;
}

/// Ind(X₁×X₂) = Ind_RS(X₁)Ind_S(X₂) + Ind_RS(X₂)Ind_S(X₁) - k·Ind_S(X₁×X₂),
/// all sides assembled as exact characters and compared by frac_equals.
inline bool rs_product_check(const FixedPointProblem &p1,
                             const FixedPointProblem &p2, long k)
{
	for (auto *p : {&p1, &p2})
		for (auto &fp : p->points)
			if (fp.weights.empty())
				throw std::invalid_argument("rs_product_check: all points need weights");
	FixedPointProblem prod = product_problem(p1, p2);
	int rank = prod.rank;
	auto lift1 = [&](const CharFraction &f) {
		GradedLaurentPoly num(rank);
		for (auto &[e, c] : f.num.terms)
			num.add_term(detail::embed(e, rank, 0), c);
		std::vector<Exponent> den;
		for (auto &u : f.den)
			den.push_back(detail::embed(u, rank, 0));
		return CharFraction(std::move(num), std::move(den));
	};
	auto lift2 = [&](const CharFraction &f) {
		GradedLaurentPoly num(rank);
		for (auto &[e, c] : f.num.terms)
			num.add_term(detail::embed(e, rank, p1.rank), c);
		std::vector<Exponent> den;
		for (auto &u : f.den)
			den.push_back(detail::embed(u, rank, p1.rank));
		return CharFraction(std::move(num), std::move(den));
	};
	CharFraction lhs = rs_index_character(prod, k);
	CharFraction rs1 = lift1(rs_index_character(p1, k));
	CharFraction rs2 = lift2(rs_index_character(p2, k));
	CharFraction s1 = lift1(spin_index_character(p1));
	CharFraction s2 = lift2(spin_index_character(p2));
	CharFraction s12 = spin_index_character(prod);
	auto mul = [&](const CharFraction &f, const CharFraction &g) {
		std::vector<Exponent> den = f.den;
		den.insert(den.end(), g.den.begin(), g.den.end());
		return canonicalize(CharFraction(f.num * g.num, std::move(den)));
	};
	CharFraction rhs = frac_add(mul(rs1, s2), mul(rs2, s1));
	CharFraction ks = frac_scale(s12, GradedCoeff(Scalar(Rational(-k))));
	rhs = frac_add(rhs, canonicalize(ks));
	return frac_equals(lhs, rhs);
}

/// Σ_m L_m, where L_m counts nonnegative integer tuples (l_1..l_n) with
/// Σ w_j - 2 w_m + Σ l_j w_j ≤ 0; finite since all w_j > 0.
inline long long rs_kernel_bound(const std::vector<long long> &w)
{
	for (auto x : w)
		if (x <= 0)
			throw std::invalid_argument("rs_kernel_bound: weights must be positive");
	long long total = 0;
	long long s = 0;
	for (auto x : w)
		s += x;
	size_t n = w.size();
	for (size_t m = 0; m < n; ++m) {
		long long budget = 2 * w[m] - s; // need Σ l_j w_j ≤ budget
		if (budget < 0)
			continue;
		// count tuples with Σ l_j w_j ≤ budget by recursion
		std::vector<long long> counts(static_cast<size_t>(budget) + 1, 0);
		counts[0] = 1;
		for (size_t j = 0; j < n; ++j)
			for (long long v = w[j]; v <= budget; ++v)
				counts[static_cast<size_t>(v)] +=
				    counts[static_cast<size_t>(v - w[j])];
		for (long long v = 0; v <= budget; ++v)
			total += counts[static_cast<size_t>(v)];
	}
	return total;
}

} // namespace eqloc
