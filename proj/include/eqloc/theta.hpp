#pragma once

#include "eqloc/localization.hpp"

namespace eqloc {

/// λ_j ↦ e^{i w_j t} substitution data.
struct WeightAssignment
{
	std::vector<Rational> w;

	Rational pairing(const Exponent &e) const
	{
		if (e.rank() != static_cast<int>(w.size()))
			throw std::invalid_argument("weight assignment rank mismatch");
		Rational acc(0);
		for (size_t i = 0; i < w.size(); ++i)
			acc += w[i] * e.c[i];
		return acc;
	}
};

/// Truncated Laurent series in the angle variable t.
struct ThetaSeries
{
	int trunc_order = 0; // coefficients valid for orders ≤ trunc_order
	std::map<int, Scalar> coeff;

	Scalar at(int order) const
	{
		auto it = coeff.find(order);
		return it == coeff.end() ? Scalar(0) : it->second;
	}
	int min_order() const { return coeff.empty() ? 0 : coeff.begin()->first; }

	friend ThetaSeries operator+(const ThetaSeries &a, const ThetaSeries &b)
	{
		ThetaSeries r;
		r.trunc_order = std::min(a.trunc_order, b.trunc_order);
		for (auto *src : {&a, &b})
			for (auto &[o, s] : src->coeff) {
				if (o > r.trunc_order)
					continue;
				auto it = r.coeff.find(o);
				if (it == r.coeff.end())
					r.coeff.emplace(o, s);
				else {
					it->second += s;
					if (it->second.is_zero())
						r.coeff.erase(it);
				}
			}
		return r;
	}
};

namespace detail {

/// Dense power series in t, orders 0..K.
struct PowerSeries
{
	std::vector<Scalar> c; // c[m] = order-m coefficient

	explicit PowerSeries(int K) : c(K + 1, Scalar(0)) {}
	int order() const { return static_cast<int>(c.size()) - 1; }

	PowerSeries mul(const PowerSeries &o) const
	{
		PowerSeries r(order());
		for (int i = 0; i <= order(); ++i) {
			if (c[i].is_zero())
				continue;
			for (int j = 0; i + j <= order(); ++j)
				r.c[i + j] += c[i] * o.c[j];
		}
		return r;
	}

	/// Inverse of a unit series (c[0] ≠ 0), standard recursion.
	PowerSeries inverse() const
	{
		if (c[0].is_zero())
			throw std::domain_error("series inverse: zero constant term");
		PowerSeries r(order());
		r.c[0] = Scalar(1) / c[0];
		for (int m = 1; m <= order(); ++m) {
			Scalar acc(0);
			for (int i = 1; i <= m; ++i)
				acc += c[i] * r.c[m - i];
			r.c[m] = -acc / c[0];
		}
		return r;
	}
};

/// exp(i x t) to order K, exact.
inline PowerSeries exp_series(const Rational &x, int K)
{
	PowerSeries s(K);
	Scalar step = Scalar::unit_i() * Scalar(x);
	Scalar p(1);   // (i x)^m
	Rational f(1); // m!
	for (int m = 0; m <= K; ++m) {
		s.c[m] = p / Scalar(f);
		p = p * step;
		f *= (m + 1);
	}
	return s;
}

} // namespace detail

/// Substitutes λ^v ↦ e^{i⟨w,v⟩t} into a fraction at trivial b,y grading and
/// expands to order K. Each factor (1-λ^u) has valuation one with leading
/// term -i⟨w,u⟩t; division is exact truncated Laurent inversion.
inline ThetaSeries theta_expand(const CharFraction &f, const WeightAssignment &w,
                                int K)
{
	int D = static_cast<int>(f.den.size());
	int internal = K + D;
	detail::PowerSeries num(internal);
	bool any = false;
	for (auto &[e, gc] : f.num.terms) {
		Scalar s = gc.trivial();
		if (s.is_zero())
			continue;
		any = true;
		detail::PowerSeries t = detail::exp_series(w.pairing(e), internal);
		for (int m = 0; m <= internal; ++m)
			num.c[m] += t.c[m] * s;
	}
	ThetaSeries out;
	out.trunc_order = K;
	if (!any)
		return out;
	for (auto &u : f.den) {
		Rational p = w.pairing(u);
		if (p == 0)
			throw std::domain_error(
			    "weight assignment not generic for factor " + to_string(u));
		// (1 - e^{ipt}) = t · g(t) with g(0) = -ip
		detail::PowerSeries e = detail::exp_series(p, internal + 1);
		detail::PowerSeries g(internal);
		for (int m = 0; m <= internal; ++m)
			g.c[m] = -e.c[m + 1];
		num = num.mul(g.inverse());
	}
	for (int m = 0; m <= internal; ++m) {
		int order = m - D;
		if (order > K)
			break;
		if (!num.c[m].is_zero())
			out.coeff[order] = num.c[m];
	}
	return out;
}

/// NUT charge N (t^{-2}) and τ₃ (t^0) of a local χ₁ character; both must be
/// exactly real.
inline std::pair<Rational, Rational> nut_and_tau3(const CharFraction &f,
                                                  const WeightAssignment &w)
{
	ThetaSeries s = theta_expand(f, w, 4);
	Scalar N = s.at(-2), tau = s.at(0);
	if (!N.is_real() || !tau.is_real())
		throw std::domain_error("nut_and_tau3: nonzero imaginary part (wrong input)");
	return {N.re, tau.re};
}

/// The χ₁ character of a fixed point: explicit corpus data, else the
/// evaluation of explicit local Hodge data at (b,y)=(-1,1), else the smooth
/// formula ∏ (1+λ^γ)/(1-λ^γ).
inline CharFraction chi1_character(const FixedPoint &fp, int rank)
{
	if (fp.chi1)
		return canonicalize(*fp.chi1);
	if (fp.contribution)
		return evaluate_contribution(*fp.contribution, rank, Scalar(-1), Scalar(1));
	if (fp.weights.empty())
		throw std::invalid_argument("point '" + fp.name + "': no χ₁ data");
	GradedLaurentPoly num = GradedLaurentPoly::constant(rank, Scalar(1));
	std::vector<Exponent> den;
	for (auto &g : fp.weights) {
		GradedLaurentPoly f = GradedLaurentPoly::constant(rank, Scalar(1));
		f.add_term(g, GradedCoeff(Scalar(1)));
		num = num * f;
		den.push_back(g);
	}
	return canonicalize(CharFraction(std::move(num), std::move(den)));
}

struct ThetaPointReport
{
	std::string name;
	Rational N;
	Rational tau3;
};

struct ThetaReport
{
	std::vector<ThetaPointReport> points;
	Rational sum_N;
	Rational sum_tau3;
	Rational sum_residue; // Σ of t^{-1} coefficients (must vanish)
	bool nut_sum_zero = false;
	bool residues_zero = false;
	bool odd_orders_zero = false;
	std::optional<Rational> signature; // from χ_{y,b}(1,-1) when supplied
	bool signature_matches = true;
};

/// Global NUT/signature checks: Σ N = 0, Σ t^{-1} = 0, odd orders of the
/// summed expansion vanish, and Σ τ₃ equals the supplied signature.
inline ThetaReport global_theta_checks(const FixedPointProblem &p,
                                       const WeightAssignment &w,
                                       std::optional<Rational> signature = {})
{
	ThetaReport rep;
	rep.sum_N = 0;
	rep.sum_tau3 = 0;
	rep.sum_residue = 0;
	ThetaSeries total;
	total.trunc_order = 4;
	for (auto &fp : p.points) {
		CharFraction chi = chi1_character(fp, p.rank);
		ThetaSeries s = theta_expand(chi, w, 4);
		auto [N, tau] = nut_and_tau3(chi, w);
		Scalar res = s.at(-1);
		if (!res.is_real())
			throw std::domain_error("t^{-1} coefficient not real at '" + fp.name + "'");
		rep.points.push_back({fp.name, N, tau});
		rep.sum_N += N;
		rep.sum_tau3 += tau;
		rep.sum_residue += res.re;
		total = total + s;
	}
	rep.nut_sum_zero = (rep.sum_N == 0);
	rep.residues_zero = (rep.sum_residue == 0);
	rep.odd_orders_zero = true;
	for (auto &[o, s] : total.coeff)
		if (o % 2 != 0 && !s.is_zero())
			rep.odd_orders_zero = false;
	if (signature) {
		rep.signature = *signature;
		rep.signature_matches = (rep.sum_tau3 == *signature);
	}
	return rep;
}

} // namespace eqloc
