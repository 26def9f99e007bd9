#pragma once

#include "eqloc/exponent.hpp"

#include <map>
#include <utility>

namespace eqloc {

/// Bidegree in the formal variables (b, y).
using BiDeg = std::pair<int, int>;

/// Sparse polynomial in b, y with Scalar coefficients; no stored zeros.
struct GradedCoeff
{
	std::map<BiDeg, Scalar> terms;

	GradedCoeff() = default;
	explicit GradedCoeff(Scalar s)
	{
		if (!s.is_zero())
			terms[{0, 0}] = std::move(s);
	}
	static GradedCoeff monomial(int b, int y, Scalar s)
	{
		GradedCoeff g;
		if (!s.is_zero())
			g.terms[{b, y}] = std::move(s);
		return g;
	}

	bool is_zero() const { return terms.empty(); }

	/// The (0,0) coefficient; throws if any other bidegree is present.
	Scalar trivial() const
	{
		if (terms.empty())
			return Scalar(0);
		if (terms.size() == 1 && terms.begin()->first == BiDeg{0, 0})
			return terms.begin()->second;
		throw std::domain_error("GradedCoeff carries nontrivial b,y grading");
	}

	GradedCoeff &operator+=(const GradedCoeff &o)
	{
		for (auto &[d, s] : o.terms) {
			auto it = terms.find(d);
			if (it == terms.end()) {
				terms[d] = s;
			} else {
				it->second += s;
				if (it->second.is_zero())
					terms.erase(it);
			}
		}
		return *this;
	}
	friend GradedCoeff operator+(GradedCoeff a, const GradedCoeff &b)
	{
		a += b;
		return a;
	}
	friend GradedCoeff operator-(const GradedCoeff &a)
	{
		GradedCoeff r = a;
		for (auto &[d, s] : r.terms)
			s = -s;
		return r;
	}
	friend GradedCoeff operator*(const GradedCoeff &a, const GradedCoeff &b)
	{
		GradedCoeff r;
		for (auto &[da, sa] : a.terms)
			for (auto &[db, sb] : b.terms)
				r += GradedCoeff::monomial(da.first + db.first,
				                           da.second + db.second, sa * sb);
		return r;
	}
	friend bool operator==(const GradedCoeff &a, const GradedCoeff &b)
	{
		return a.terms == b.terms;
	}

	/// Substitutes values for b and y, collapsing to a trivial grading.
	GradedCoeff eval(const Scalar &b_val, const Scalar &y_val) const
	{
		Scalar acc(0);
		for (auto &[d, s] : terms) {
			Scalar f(1);
			for (int i = 0; i < d.first; ++i)
				f *= b_val;
			for (int i = 0; i > d.first; --i)
				f = f / b_val;
			for (int i = 0; i < d.second; ++i)
				f *= y_val;
			for (int i = 0; i > d.second; --i)
				f = f / y_val;
			acc += s * f;
		}
		return GradedCoeff(acc);
	}
};

/// Sparse Laurent polynomial in the torus characters with GradedCoeff
/// coefficients. Rank is fixed at construction; all exponents share it.
struct GradedLaurentPoly
{
	int rank = 0;
	std::map<Exponent, GradedCoeff> terms;

	GradedLaurentPoly() = default;
	explicit GradedLaurentPoly(int r) : rank(r) {}

	static GradedLaurentPoly zero(int rank) { return GradedLaurentPoly(rank); }
	static GradedLaurentPoly constant(int rank, Scalar s)
	{
		GradedLaurentPoly p(rank);
		p.add_term(Exponent::zero(rank), GradedCoeff(std::move(s)));
		return p;
	}
	static GradedLaurentPoly monomial(Exponent e, GradedCoeff c)
	{
		GradedLaurentPoly p(e.rank());
		p.add_term(std::move(e), std::move(c));
		return p;
	}
	static GradedLaurentPoly monomial(Exponent e, Scalar s = Scalar(1))
	{
		return monomial(std::move(e), GradedCoeff(std::move(s)));
	}

	bool is_zero() const { return terms.empty(); }

	void add_term(Exponent e, GradedCoeff c)
	{
		if (c.is_zero())
			return;
		auto it = terms.find(e);
		if (it == terms.end()) {
			terms.emplace(std::move(e), std::move(c));
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	friend GradedLaurentPoly operator+(const GradedLaurentPoly &a,
	                                   const GradedLaurentPoly &b)
	{
		if (a.rank != b.rank)
			throw std::invalid_argument("poly_add: rank mismatch");
		GradedLaurentPoly r = a;
		for (auto &[e, c] : b.terms)
			r.add_term(e, c);
		return r;
	}
	friend GradedLaurentPoly operator-(const GradedLaurentPoly &a)
	{
		GradedLaurentPoly r = a;
		for (auto &[e, c] : r.terms)
			c = -c;
		return r;
	}
	friend GradedLaurentPoly operator-(const GradedLaurentPoly &a,
	                                   const GradedLaurentPoly &b)
	{
		return a + (-b);
	}
	friend GradedLaurentPoly operator*(const GradedLaurentPoly &a,
	                                   const GradedLaurentPoly &b)
	{
		if (a.rank != b.rank)
			throw std::invalid_argument("poly_mul: rank mismatch");
		GradedLaurentPoly r(a.rank);
		for (auto &[ea, ca] : a.terms)
			for (auto &[eb, cb] : b.terms)
				r.add_term(ea + eb, ca * cb);
		return r;
	}
	friend bool operator==(const GradedLaurentPoly &a,
	                       const GradedLaurentPoly &b)
	{
		return a.rank == b.rank && a.terms == b.terms;
	}
};

inline GradedLaurentPoly poly_add(const GradedLaurentPoly &p,
                                  const GradedLaurentPoly &q)
{
	return p + q;
}

inline GradedLaurentPoly poly_mul(const GradedLaurentPoly &p,
                                  const GradedLaurentPoly &q)
{
	return p * q;
}

/// λ ↦ λ^{-1} on every torus variable; b,y grading untouched.
inline GradedLaurentPoly invert_variables(const GradedLaurentPoly &p)
{
	GradedLaurentPoly r(p.rank);
	for (auto &[e, c] : p.terms)
		r.terms.emplace(-e, c);
	return r;
}

/// Substitutes b and y; result carries trivial grading.
inline GradedLaurentPoly eval_grading(const GradedLaurentPoly &p,
                                      const Scalar &b_val, const Scalar &y_val)
{
	GradedLaurentPoly r(p.rank);
	for (auto &[e, c] : p.terms)
		r.add_term(e, c.eval(b_val, y_val));
	return r;
}

inline std::string to_string(const GradedCoeff &c, const std::string &monom);

/// Deterministic rendering: exponents lexicographic, b-degrees ascending.
inline std::string to_string(const GradedLaurentPoly &p)
{
	if (p.terms.empty())
		return "0";
	std::string out;
	for (auto &[e, c] : p.terms) {
		std::string part = to_string(c, to_string(e));
		if (out.empty()) {
			out = part;
		} else if (part.size() && part[0] == '-') {
			out += " - " + part.substr(1);
		} else {
			out += " + " + part;
		}
	}
	return out;
}

inline std::string to_string(const GradedCoeff &c, const std::string &monom)
{
	std::string out;
	bool first = true;
	for (auto &[d, s] : c.terms) {
		std::string factors;
		if (d.first != 0)
			factors += (d.first == 1) ? "b" : "b^" + std::to_string(d.first);
		if (d.second != 0) {
			if (!factors.empty())
				factors += " ";
			factors += (d.second == 1) ? "y" : "y^" + std::to_string(d.second);
		}
		if (!monom.empty()) {
			if (!factors.empty())
				factors += " ";
			factors += monom;
		}
		std::string coeff;
		if (factors.empty())
			coeff = to_string(s);
		else if (s == Scalar(1))
			coeff = "";
		else if (s == Scalar(-1))
			coeff = "-";
		else if (s.is_real())
			coeff = to_string(s) + " ";
		else
			coeff = "(" + to_string(s) + ") ";
		std::string part = coeff + factors;
		if (first) {
			out = part;
			first = false;
		} else if (!part.empty() && part[0] == '-') {
			out += " - " + part.substr(1);
		} else {
			out += " + " + part;
		}
	}
	return out;
}

} // namespace eqloc
