#pragma once

#include "eqloc/scalar.hpp"

#include <vector>

namespace eqloc {

/// Character-lattice exponent: a vector of exact rationals of length = torus
/// rank. Fractional entries encode roots of characters (root order fixed per
/// problem).
struct Exponent
{
	std::vector<Rational> c;

	Exponent() = default;
	explicit Exponent(std::vector<Rational> v) : c(std::move(v)) {}
	static Exponent zero(int rank)
	{
		return Exponent(std::vector<Rational>(rank, Rational(0)));
	}

	int rank() const { return static_cast<int>(c.size()); }

	bool is_zero() const
	{
		for (auto &x : c)
			if (x != 0)
				return false;
		return true;
	}

	/// Canonical orientation: first nonzero coordinate positive.
	bool is_canonical() const
	{
		for (auto &x : c) {
			if (x > 0)
				return true;
			if (x < 0)
				return false;
		}
		return false; // zero exponent has no orientation
	}

	friend Exponent operator+(const Exponent &a, const Exponent &b)
	{
		if (a.c.size() != b.c.size())
			throw std::invalid_argument("exponent rank mismatch");
		Exponent r = a;
		for (size_t i = 0; i < r.c.size(); ++i)
			r.c[i] += b.c[i];
		return r;
	}
	friend Exponent operator-(const Exponent &a, const Exponent &b)
	{
		return a + (-b);
	}
	friend Exponent operator-(const Exponent &a)
	{
		Exponent r = a;
		for (auto &x : r.c)
			x = -x;
		return r;
	}
	Exponent &operator+=(const Exponent &b) { return *this = *this + b; }

	friend Exponent operator*(const Rational &k, const Exponent &a)
	{
		Exponent r = a;
		for (auto &x : r.c)
			x *= k;
		return r;
	}

	friend bool operator==(const Exponent &a, const Exponent &b)
	{
		return a.c == b.c;
	}
	friend bool operator<(const Exponent &a, const Exponent &b)
	{
		if (a.c.size() != b.c.size())
			return a.c.size() < b.c.size();
		for (size_t i = 0; i < a.c.size(); ++i) {
			if (a.c[i] < b.c[i])
				return true;
			if (b.c[i] < a.c[i])
				return false;
		}
		return false;
	}
};

/// Variable name for coordinate i when printing monomials.
inline std::string var_name(int i, int rank)
{
	static const char *greek[] = {"λ", "μ", "γ"};
	if (rank <= 3)
		return greek[i];
	return "x" + std::to_string(i + 1);
}

/// "λ^2 μ^{-1}"; empty string for the zero exponent.
inline std::string to_string(const Exponent &e)
{
	std::string out;
	for (int i = 0; i < e.rank(); ++i) {
		if (e.c[i] == 0)
			continue;
		if (!out.empty())
			out += " ";
		out += var_name(i, e.rank());
		if (e.c[i] == 1)
			continue;
		if (is_integer(e.c[i]) && e.c[i] > 0)
			out += "^" + e.c[i].str();
		else
			out += "^{" + e.c[i].str() + "}";
	}
	return out;
}

} // namespace eqloc
