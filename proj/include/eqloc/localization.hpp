#pragma once

#include "eqloc/charfrac.hpp"

#include <optional>
#include <string>

namespace eqloc {

/// One (b-degree, y-degree)-graded piece of a local contribution.
struct ContribTerm
{
	int b_deg = 0;
	int y_deg = 0;
	CharFraction frac;
};

using Contribution = std::vector<ContribTerm>;

inline void merge_term(Contribution &c, int b, int y, const CharFraction &f)
{
	for (auto &t : c)
		if (t.b_deg == b && t.y_deg == y) {
			t.frac = frac_add(t.frac, f);
			return;
		}
	c.push_back({b, y, f});
	std::sort(c.begin(), c.end(), [](const ContribTerm &a, const ContribTerm &b2) {
		return std::tie(a.b_deg, a.y_deg) < std::tie(b2.b_deg, b2.y_deg);
	});
}

/// Isolated fixed point: tangent-cone weights plus optional corpus data for
/// singular points (explicit contributions, canonical-bundle trace, χ₁).
struct FixedPoint
{
	std::string name;
	std::vector<Exponent> weights;
	std::optional<GradedLaurentPoly> bundle; // E_a trace; absent means 1
	std::optional<Contribution> contribution;
	std::optional<Contribution> dual_contribution;
	std::optional<Exponent> canonical; // κ_a, trace on the canonical bundle
	std::optional<CharFraction> chi1;  // local equivariant signature character
};

struct FixedPointProblem
{
	int rank = 0;
	int dim = 0; // complex dimension n
	long root_order = 1;
	Chamber chamber;
	std::vector<FixedPoint> points;
	std::optional<GradedLaurentPoly> poincare;
};

enum class Side { morse, dual };

/// Morse index: number of weights on the expanding side of the chamber.
inline int morse_index(const FixedPoint &fp, const Chamber &ch)
{
	int n_a = 0;
	for (auto &g : fp.weights)
		if (ch.pairing(g) < 0)
			++n_a;
	return n_a;
}

/// b^{n_a} E_a ∏_{⟨ξ,γ⟩>0} 1/(1-λ^γ) ∏_{⟨ξ,γ⟩<0} λ^{-γ}/(1-λ^{-γ}),
/// already in canonical chamber form. Explicit contributions, when present,
/// are returned verbatim.
inline Contribution smooth_contribution(const FixedPoint &fp, const Chamber &ch,
                                        int n)
{
	if (fp.contribution)
		return *fp.contribution;
	if (fp.weights.empty())
		throw std::invalid_argument("fixed point '" + fp.name +
		                            "' has no weights and no explicit contribution");
	int rank = ch.rank();
	GradedLaurentPoly num = fp.bundle
	                            ? *fp.bundle
	                            : GradedLaurentPoly::constant(rank, Scalar(1));
	std::vector<Exponent> den;
	int n_a = 0;
	for (auto &g : fp.weights) {
		Rational p = ch.pairing(g);
		if (p == 0)
			throw std::domain_error("chamber not generic at '" + fp.name + "'");
		if (p > 0) {
			den.push_back(g);
		} else {
			++n_a;
			den.push_back(-g);
			num = num * GradedLaurentPoly::monomial(-g);
		}
	}
	CharFraction f = canonicalize(CharFraction(std::move(num), std::move(den)));
	// split the bundle's own b,y grading onto the external degrees
	Contribution out;
	for (auto &[e, gc] : f.num.terms)
		for (auto &[d, s] : gc.terms) {
			CharFraction piece(GradedLaurentPoly::monomial(e, s), f.den);
			merge_term(out, n_a + d.first, d.second, piece);
		}
	(void)n;
	return out;
}

/// Serre-dual side: (q, f) ↦ (n-q, κ_a · f|_{λ→λ^{-1}}). κ_a defaults to
/// λ^{-Σγ} at smooth points; explicit dual data is returned verbatim.
inline Contribution dual_contribution(const Contribution &terms,
                                      const FixedPoint &fp, int n)
{
	if (fp.dual_contribution)
		return *fp.dual_contribution;
	Exponent kappa;
	if (fp.canonical) {
		kappa = *fp.canonical;
	} else if (!fp.weights.empty() && !fp.contribution) {
		Exponent s = Exponent::zero(static_cast<int>(fp.weights[0].rank()));
		for (auto &g : fp.weights)
			s += g;
		kappa = -s;
	} else {
		throw std::invalid_argument("point '" + fp.name +
		                            "': dual data requires κ or explicit dual contribution");
	}
	Contribution out;
	for (auto &t : terms) {
		CharFraction g = frac_mul_monomial(frac_invert_vars(t.frac), kappa);
		merge_term(out, n - t.b_deg, t.y_deg, canonicalize(g));
	}
	return out;
}

inline Contribution side_contribution(const FixedPointProblem &p,
                                      const FixedPoint &fp, Side side)
{
	Contribution morse = smooth_contribution(fp, p.chamber, p.dim);
	if (side == Side::morse)
		return morse;
	return dual_contribution(morse, fp, p.dim);
}

/// Per-(b,y)-degree sum of all local contributions, canonical.
inline Contribution global_closed_form(const FixedPointProblem &p, Side side)
{
	Contribution total;
	for (auto &fp : p.points)
		for (auto &t : side_contribution(p, fp, side))
			merge_term(total, t.b_deg, t.y_deg, canonicalize(t.frac));
	return total;
}

/// Collapses a contribution at fixed scalar values of b and y into one
/// fraction (the Lefschetz number at b=-1, y=1).
inline CharFraction evaluate_contribution(const Contribution &c, int rank,
                                          const Scalar &b_val, const Scalar &y_val)
{
	CharFraction acc = CharFraction::zero(rank);
	for (auto &t : c) {
		Scalar w(1);
		for (int i = 0; i < t.b_deg; ++i)
			w *= b_val;
		for (int i = 0; i < t.y_deg; ++i)
			w *= y_val;
		CharFraction piece = t.frac;
		piece.num = eval_grading(piece.num, b_val, y_val) *
		            GradedLaurentPoly::constant(rank, w);
		acc = frac_add(acc, canonicalize(piece));
	}
	return acc;
}

/// b-degree → (exponent → coefficient) truncated expansion of one side.
/// y-degrees must be trivial here (Morse machinery).
struct DegreeSeries
{
	std::map<int, std::map<Exponent, Scalar>> by_degree;

	void add(int q, const Exponent &e, const Scalar &s)
	{
		auto &m = by_degree[q];
		auto it = m.find(e);
		if (it == m.end()) {
			if (!s.is_zero())
				m.emplace(e, s);
		} else {
			it->second += s;
			if (it->second.is_zero())
				m.erase(it);
		}
	}
	Scalar coeff(int q, const Exponent &e) const
	{
		auto itq = by_degree.find(q);
		if (itq == by_degree.end())
			return Scalar(0);
		auto it = itq->second.find(e);
		return it == itq->second.end() ? Scalar(0) : it->second;
	}
};

inline DegreeSeries expand_contribution(const Contribution &c, const Chamber &ch,
                                        const Rational &T)
{
	DegreeSeries out;
	for (auto &t : c) {
		if (t.y_deg != 0)
			throw std::domain_error("series expansion expects trivial y grading");
		ChamberSeries s = chamber_expand(canonicalize(t.frac), ch, T);
		for (auto &[e, gc] : s.terms)
			for (auto &[d, sc] : gc.terms) {
				if (d != BiDeg{0, 0})
					throw std::domain_error("series expansion expects trivial grading");
				out.add(t.b_deg, e, sc);
			}
	}
	return out;
}

inline DegreeSeries global_series(const FixedPointProblem &p, Side side,
                                  const Rational &T)
{
	Chamber ch = side == Side::morse ? p.chamber : p.chamber.opposite();
	DegreeSeries out;
	for (auto &fp : p.points) {
		DegreeSeries s = expand_contribution(side_contribution(p, fp, side), ch, T);
		for (auto &[q, m] : s.by_degree)
			for (auto &[e, sc] : m)
				out.add(q, e, sc);
	}
	return out;
}

inline long long checked_nonneg_int(const Scalar &s, const char *what)
{
	if (!s.is_real() || !is_integer(s.re) || s.re < 0)
		throw std::domain_error(std::string(what) +
		                        ": coefficient not a nonnegative integer: " +
		                        to_string(s));
	return to_long(s.re);
}

/// Termwise min of the Morse expansion (chamber ξ, cutoff T) and the dual
/// expansion (chamber -ξ, cutoff T) on the window |⟨ξ,·⟩| ≤ T.
inline GradedLaurentPoly classical_window(const FixedPointProblem &p,
                                          const Rational &T)
{
	DegreeSeries morse = global_series(p, Side::morse, T);
	DegreeSeries dual = global_series(p, Side::dual, T);
	GradedLaurentPoly out(p.rank);
	for (auto &[q, m] : morse.by_degree) {
		auto itd = dual.by_degree.find(q);
		if (itd == dual.by_degree.end())
			continue;
		for (auto &[e, sc] : m) {
			Rational pr = p.chamber.pairing(e);
			if (pr > T || pr < -T)
				continue;
			auto it = itd->second.find(e);
			if (it == itd->second.end())
				continue;
			long long a = checked_nonneg_int(sc, "classical_morse (morse side)");
			long long b = checked_nonneg_int(it->second, "classical_morse (dual side)");
			long long c = std::min(a, b);
			if (c)
				out.add_term(e, GradedCoeff::monomial(q, 0, Scalar(c)));
		}
	}
	return out;
}

/// Classical Morse polynomial with stability-by-doubling: the result is
/// flagged stable iff recomputing at 2T returns the same polynomial.
inline GradedLaurentPoly classical_morse(const FixedPointProblem &p,
                                         const Rational &T, bool *stable = nullptr)
{
	GradedLaurentPoly at_T = classical_window(p, T);
	if (stable) {
		GradedLaurentPoly at_2T = classical_window(p, 2 * T);
		*stable = (at_T == at_2T);
	}
	return at_T;
}

/// True iff the classical Morse polynomial vanishes at cutoff T, stably.
inline bool check_vanishing(const FixedPointProblem &p, const Rational &T)
{
	bool stable = false;
	GradedLaurentPoly c = classical_morse(p, T, &stable);
	return c.is_zero() && stable;
}

struct InequalityReport
{
	// (exponent, degree q) → Q_q coefficient
	std::map<std::pair<Exponent, int>, Scalar> Q;
	bool holds = true;
	std::string failure;
};

/// Solves M_q - P_q = Q_q + Q_{q-1} recursively per exponent; holds iff all
/// Q_q are nonnegative integers and the top identity M_n - P_n = Q_{n-1}
/// closes for every exponent in the window.
inline InequalityReport verify_inequality(const DegreeSeries &morse,
                                          const GradedLaurentPoly &poincare,
                                          int n, const Chamber &ch,
                                          const Rational &T)
{
	InequalityReport rep;
	// collect window exponents from both the series and P
	std::map<Exponent, bool> exps;
	for (auto &[q, m] : morse.by_degree)
		for (auto &[e, s] : m)
			exps[e] = true;
	for (auto &[e, c] : poincare.terms)
		if (ch.pairing(e) <= T)
			exps[e] = true;
	auto pcoeff = [&](int q, const Exponent &e) -> Scalar {
		auto it = poincare.terms.find(e);
		if (it == poincare.terms.end())
			return Scalar(0);
		auto itd = it->second.terms.find({q, 0});
		return itd == it->second.terms.end() ? Scalar(0) : itd->second;
	};
	for (auto &[e, _] : exps) {
		Scalar prev(0); // Q_{-1}
		for (int q = 0; q < n; ++q) {
			Scalar Qq = morse.coeff(q, e) - pcoeff(q, e) - prev;
			if (!Qq.is_real() || !is_integer(Qq.re) || Qq.re < 0) {
				rep.holds = false;
				if (rep.failure.empty())
					rep.failure = "Q_" + std::to_string(q) + " at " +
					              (to_string(e).empty() ? "1" : to_string(e)) +
					              " is " + to_string(Qq);
			}
			if (!Qq.is_zero())
				rep.Q[{e, q}] = Qq;
			prev = Qq;
		}
		Scalar top = morse.coeff(n, e) - pcoeff(n, e);
		if (top != prev) {
			rep.holds = false;
			if (rep.failure.empty())
				rep.failure = "top degree mismatch at " +
				              (to_string(e).empty() ? "1" : to_string(e)) +
				              " (insufficient cutoff or wrong Poincaré input)";
		}
	}
	return rep;
}

struct LacunaryVerdict
{
	bool equals_poincare = false;
	std::optional<GradedLaurentPoly> poincare;
};

/// Lacunary principle: if for every exponent no two adjacent b-degrees are
/// both occupied, the classical polynomial is the Poincaré polynomial.
inline LacunaryVerdict lacunary_conclusion(const GradedLaurentPoly &classical,
                                           int n)
{
	(void)n;
	for (auto &[e, gc] : classical.terms) {
		for (auto &[d, s] : gc.terms) {
			checked_nonneg_int(s, "lacunary_conclusion");
			if (gc.terms.count({d.first + 1, d.second}))
				return {false, std::nullopt};
		}
	}
	return {true, classical};
}

/// Global χ_{y,b}: per-(b,y) sum over all points of the local data. Also
/// returns per-point local polynomials when each local datum is polynomial.
struct ChiReport
{
	Contribution global;                       // per-(b,y) fractions, canonical
	std::optional<GradedLaurentPoly> polynomial; // set when fully polynomial
	std::vector<std::pair<std::string, Contribution>> local;
};

inline ChiReport chi_yb_assemble(const FixedPointProblem &p)
{
	ChiReport rep;
	for (auto &fp : p.points) {
		Contribution c = smooth_contribution(fp, p.chamber, p.dim);
		rep.local.emplace_back(fp.name, c);
		for (auto &t : c)
			merge_term(rep.global, t.b_deg, t.y_deg, canonicalize(t.frac));
	}
	GradedLaurentPoly poly(p.rank);
	bool is_poly = true;
	for (auto &t : rep.global) {
		auto red = reduce_to_polynomial(t.frac, p.chamber);
		if (!red) {
			is_poly = false;
			break;
		}
		for (auto &[e, gc] : red->terms)
			for (auto &[d, s] : gc.terms)
				poly.add_term(e, GradedCoeff::monomial(t.b_deg + d.first,
				                                       t.y_deg + d.second, s));
	}
	if (is_poly)
		rep.polynomial = poly;
	return rep;
}

/// χ(b,y,λ) = (by)^n χ(b^{-1},y^{-1},λ^{-1}) as exact polynomials.
inline bool chi_duality_check(const GradedLaurentPoly &chi, int n)
{
	GradedLaurentPoly mirror(chi.rank);
	for (auto &[e, gc] : chi.terms)
		for (auto &[d, s] : gc.terms)
			mirror.add_term(-e, GradedCoeff::monomial(n - d.first, n - d.second, s));
	return mirror == chi;
}

} // namespace eqloc
