#pragma once

#include "eqloc/poly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace eqloc {

/// Generic linear functional ξ on the character lattice. Its sign on each
/// weight picks the convergence regime of every series expansion.
struct Chamber
{
	std::vector<Rational> xi;

	Chamber() = default;
	explicit Chamber(std::vector<Rational> v) : xi(std::move(v)) {}

	int rank() const { return static_cast<int>(xi.size()); }

	Rational pairing(const Exponent &e) const
	{
		if (e.rank() != rank())
			throw std::invalid_argument("chamber/exponent rank mismatch");
		Rational acc(0);
		for (size_t i = 0; i < xi.size(); ++i)
			acc += xi[i] * e.c[i];
		return acc;
	}

	Chamber opposite() const
	{
		Chamber c = *this;
		for (auto &x : c.xi)
			x = -x;
		return c;
	}
};

/// numerator / ∏_i (1 - λ^{u_i}), the closed form localization produces.
/// Denominator factors are kept as a sorted multiset of exponents.
struct CharFraction
{
	GradedLaurentPoly num;
	std::vector<Exponent> den;

	CharFraction() = default;
	CharFraction(GradedLaurentPoly n, std::vector<Exponent> d)
	    : num(std::move(n)), den(std::move(d))
	{
		std::sort(den.begin(), den.end());
	}
	static CharFraction zero(int rank)
	{
		return CharFraction(GradedLaurentPoly::zero(rank), {});
	}
	static CharFraction polynomial(GradedLaurentPoly p)
	{
		return CharFraction(std::move(p), {});
	}

	int rank() const { return num.rank; }
	bool is_zero() const { return num.is_zero(); }

	bool canonical() const
	{
		for (auto &u : den)
			if (!u.is_canonical())
				return false;
		return true;
	}

	friend bool operator==(const CharFraction &a, const CharFraction &b)
	{
		return a.num == b.num && a.den == b.den;
	}
};

/// Rewrites every denominator factor into canonical orientation using
/// 1 - m^{-1} = -m^{-1}(1 - m); value unchanged as a rational function.
inline CharFraction canonicalize(const CharFraction &f)
{
	for (auto &u : f.den)
		if (u.is_zero())
			throw std::invalid_argument("canonicalize: zero denominator exponent");
	if (f.num.is_zero())
		return CharFraction::zero(f.rank()); // 0/∏(1-m) is the canonical zero
	GradedLaurentPoly num = f.num;
	std::vector<Exponent> den;
	den.reserve(f.den.size());
	int flips = 0;
	Exponent shift = Exponent::zero(f.rank());
	for (auto &u : f.den) {
		if (u.is_canonical()) {
			den.push_back(u);
		} else {
			// 1/(1-λ^u) = -λ^{-u}/(1-λ^{-u})
			den.push_back(-u);
			shift += -u;
			++flips;
		}
	}
	if (flips) {
		GradedCoeff sign(Scalar(flips % 2 ? -1 : 1));
		num = num * GradedLaurentPoly::monomial(shift, sign);
	}
	return CharFraction(std::move(num), std::move(den));
}

/// λ ↦ λ^{-1} on numerator and every factor, then canonicalized.
inline CharFraction frac_invert_vars(const CharFraction &f)
{
	std::vector<Exponent> den;
	den.reserve(f.den.size());
	for (auto &u : f.den)
		den.push_back(-u);
	return canonicalize(CharFraction(invert_variables(f.num), std::move(den)));
}

inline GradedLaurentPoly denominator_product(int rank,
                                             const std::vector<Exponent> &factors)
{
	GradedLaurentPoly p = GradedLaurentPoly::constant(rank, Scalar(1));
	for (auto &u : factors) {
		GradedLaurentPoly f = GradedLaurentPoly::constant(rank, Scalar(1));
		f.add_term(u, GradedCoeff(Scalar(-1)));
		p = p * f;
	}
	return p;
}

namespace detail {

/// Multiset difference union∖sub, both sorted.
inline std::vector<Exponent> multiset_diff(const std::vector<Exponent> &uni,
                                           const std::vector<Exponent> &sub)
{
	std::vector<Exponent> out;
	size_t j = 0;
	for (auto &u : uni) {
		if (j < sub.size() && sub[j] == u)
			++j;
		else
			out.push_back(u);
	}
	return out;
}

inline std::vector<Exponent> multiset_union(const std::vector<Exponent> &a,
                                            const std::vector<Exponent> &b)
{
	std::vector<Exponent> out;
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (i == a.size())
			out.push_back(b[j++]);
		else if (j == b.size())
			out.push_back(a[i++]);
		else if (a[i] < b[j])
			out.push_back(a[i++]);
		else if (b[j] < a[i])
			out.push_back(b[j++]);
		else {
			out.push_back(a[i]);
			++i;
			++j;
		}
	}
	return out;
}

} // namespace detail

/// Sum over the multiset-union denominator (shared factors at max
/// multiplicity). Inputs must be canonical.
inline CharFraction frac_add(const CharFraction &f, const CharFraction &g)
{
	if (f.rank() != g.rank())
		throw std::invalid_argument("frac_add: rank mismatch");
	auto uni = detail::multiset_union(f.den, g.den);
	GradedLaurentPoly num =
	    f.num * denominator_product(f.rank(), detail::multiset_diff(uni, f.den)) +
	    g.num * denominator_product(g.rank(), detail::multiset_diff(uni, g.den));
	if (num.is_zero())
		return CharFraction::zero(f.rank());
	return CharFraction(std::move(num), std::move(uni));
}

inline CharFraction frac_scale(const CharFraction &f, const GradedCoeff &c)
{
	GradedLaurentPoly num =
	    f.num * GradedLaurentPoly::monomial(Exponent::zero(f.rank()), c);
	return CharFraction(std::move(num), f.den);
}

inline CharFraction frac_mul_monomial(const CharFraction &f, const Exponent &e,
                                      const Scalar &s = Scalar(1))
{
	return CharFraction(f.num * GradedLaurentPoly::monomial(e, s), f.den);
}

/// Exact equality as rational functions, by cross-multiplication over the
/// union denominator.
inline bool frac_equals(const CharFraction &f, const CharFraction &g)
{
	if (f.rank() != g.rank())
		return false;
	auto cf = canonicalize(f);
	auto cg = canonicalize(g);
	auto uni = detail::multiset_union(cf.den, cg.den);
	GradedLaurentPoly lhs =
	    cf.num * denominator_product(cf.rank(), detail::multiset_diff(uni, cf.den));
	GradedLaurentPoly rhs =
	    cg.num * denominator_product(cg.rank(), detail::multiset_diff(uni, cg.den));
	return lhs == rhs;
}

/// Truncated chamber expansion: sparse terms with ⟨ξ, exponent⟩ ≤ cutoff.
struct ChamberSeries
{
	Chamber chamber;
	Rational cutoff;
	int rank = 0;
	std::map<Exponent, GradedCoeff> terms;

	void add_term(const Exponent &e, const GradedCoeff &c)
	{
		if (c.is_zero() || chamber.pairing(e) > cutoff)
			return;
		auto it = terms.find(e);
		if (it == terms.end()) {
			terms.emplace(e, c);
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	friend bool operator==(const ChamberSeries &a, const ChamberSeries &b)
	{
		return a.terms == b.terms;
	}
};

inline ChamberSeries series_add(const ChamberSeries &a, const ChamberSeries &b)
{
	ChamberSeries r = a;
	r.cutoff = std::min(a.cutoff, b.cutoff);
	std::erase_if(r.terms,
	              [&](auto &kv) { return r.chamber.pairing(kv.first) > r.cutoff; });
	for (auto &[e, c] : b.terms)
		r.add_term(e, c);
	return r;
}

/// Multiplies a truncated expansion by a Laurent polynomial, re-truncating.
/// Only complete when the polynomial has nonnegative chamber pairings.
inline ChamberSeries series_mul_poly(const ChamberSeries &s,
                                     const GradedLaurentPoly &p)
{
	ChamberSeries r;
	r.chamber = s.chamber;
	r.cutoff = s.cutoff;
	r.rank = s.rank;
	for (auto &[e, c] : s.terms)
		for (auto &[ep, cp] : p.terms)
			r.add_term(e + ep, c * cp);
	return r;
}

/// Expands f in the chamber: factors with ⟨ξ,u⟩ > 0 become Σ_k λ^{ku},
/// factors with ⟨ξ,u⟩ < 0 are rewritten -λ^{-u}/(1-λ^{-u}) first. The
/// product is truncated at ⟨ξ,·⟩ ≤ T throughout (safe: every factor term
/// has nonnegative pairing).
inline ChamberSeries chamber_expand(const CharFraction &f, const Chamber &ch,
                                    const Rational &T)
{
	ChamberSeries s;
	s.chamber = ch;
	s.cutoff = T;
	s.rank = f.rank();
	for (auto &[e, c] : f.num.terms)
		s.add_term(e, c);
	for (auto &u : f.den) {
		Rational p = ch.pairing(u);
		if (p == 0)
			throw std::domain_error("chamber not generic for fraction: factor " +
			                        to_string(u));
		Exponent step = u;
		bool rewrite = false;
		if (p < 0) {
			step = -u;
			p = -p;
			rewrite = true;
		}
		ChamberSeries next;
		next.chamber = ch;
		next.cutoff = T;
		next.rank = s.rank;
		for (auto &[e, c] : s.terms) {
			Exponent base = rewrite ? e + step : e;
			GradedCoeff coeff = rewrite ? -c : c;
			Rational base_pair = ch.pairing(base);
			// k-th geometric term sits at pairing base_pair + k·p
			Exponent cur = base;
			for (Rational pr = base_pair; pr <= T; pr += p) {
				next.add_term(cur, coeff);
				cur += step;
			}
		}
		s = std::move(next);
	}
	return s;
}

/// Attempts to write f as a Laurent polynomial by exact synthetic division
/// of the numerator by each factor; the chamber orders the division.
inline std::optional<GradedLaurentPoly>
reduce_to_polynomial(const CharFraction &f, const Chamber &ch)
{
	CharFraction c = canonicalize(f);
	GradedLaurentPoly num = c.num;
	for (auto &u : c.den) {
		Rational p = ch.pairing(u);
		if (p == 0)
			return std::nullopt;
		Exponent step = u;
		if (p < 0) {
			// divide by (1-λ^u) = -λ^u (1-λ^{-u})
			step = -u;
			num = num * GradedLaurentPoly::monomial(-u, Scalar(-1));
		}
		// divide num by (1-λ^step), step has positive pairing
		Rational maxp(0);
		bool first = true;
		for (auto &[e, cc] : num.terms) {
			Rational pr = ch.pairing(e);
			if (first || pr > maxp)
				maxp = pr;
			first = false;
		}
		GradedLaurentPoly q(num.rank);
		GradedLaurentPoly r = num;
		while (!r.is_zero()) {
			// minimal remaining term w.r.t. the chamber pairing
			auto best = r.terms.begin();
			Rational bp = ch.pairing(best->first);
			for (auto it = std::next(r.terms.begin()); it != r.terms.end(); ++it) {
				Rational pr = ch.pairing(it->first);
				if (pr < bp) {
					best = it;
					bp = pr;
				}
			}
			if (bp > maxp)
				return std::nullopt; // non-terminating: not divisible
			Exponent e = best->first;
			GradedCoeff cc = best->second;
			q.add_term(e, cc);
			r.add_term(e, -cc);
			r.add_term(e + step, cc);
		}
		num = std::move(q);
	}
	return num;
}

inline std::string to_string(const CharFraction &f)
{
	std::string num = to_string(f.num);
	if (f.den.empty())
		return num;
	std::string den;
	for (auto &u : f.den)
		den += "(1 - " + to_string(u) + ")";
	if (f.num.terms.size() > 1)
		return "(" + num + ") / " + den;
	return num + " / " + den;
}

} // namespace eqloc
