#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eqloc {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational &r) { return denominator(r) == 1; }

inline long long to_long(const Rational &r)
{
	if (!is_integer(r))
		throw std::domain_error("to_long: not an integer: " + r.str());
	return static_cast<long long>(numerator(r));
}

/// Parses "p" or "p/q" with optional leading sign. Throws on malformed input.
inline Rational parse_rational(const std::string &s)
{
	if (s.empty())
		throw std::invalid_argument("empty rational literal");
	for (char ch : s)
		if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
		      ch == '-' || ch == '+'))
			throw std::invalid_argument("bad rational literal: " + s);
	Rational r(s);
	return r;
}

/// Gaussian rational a + b·i with exact arithmetic.
struct Scalar
{
	Rational re;
	Rational im;

	Scalar() = default;
	Scalar(long long v) : re(v) {}
	Scalar(Rational r) : re(std::move(r)) {}
	Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

	static Scalar unit_i() { return Scalar(Rational(0), Rational(1)); }

	bool is_zero() const { return re == 0 && im == 0; }
	bool is_real() const { return im == 0; }

	friend Scalar operator+(const Scalar &a, const Scalar &b)
	{
		return Scalar(a.re + b.re, a.im + b.im);
	}
	friend Scalar operator-(const Scalar &a, const Scalar &b)
	{
		return Scalar(a.re - b.re, a.im - b.im);
	}
	friend Scalar operator-(const Scalar &a) { return Scalar(-a.re, -a.im); }
	friend Scalar operator*(const Scalar &a, const Scalar &b)
	{
		return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
	}
	friend Scalar operator/(const Scalar &a, const Scalar &b)
	{
		Rational n = b.re * b.re + b.im * b.im;
		if (n == 0)
			throw std::domain_error("division by zero Scalar");
		return Scalar((a.re * b.re + a.im * b.im) / n,
		              (a.im * b.re - a.re * b.im) / n);
	}
	Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
	Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
	Scalar &operator*=(const Scalar &b) { return *this = *this * b; }

	friend bool operator==(const Scalar &a, const Scalar &b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
};

inline std::string to_string(const Rational &r) { return r.str(); }

inline std::string to_string(const Scalar &s)
{
	if (s.im == 0)
		return s.re.str();
	std::string im;
	if (s.im == 1)
		im = "i";
	else if (s.im == -1)
		im = "-i";
	else
		im = s.im.str() + "i";
	if (s.re == 0)
		return im;
	if (s.im > 0)
		return s.re.str() + "+" + im;
	return s.re.str() + im;
}

/// Parses "a", "a+ib", "a-ib" or "ib" (a, b rationals). Whitespace tolerated.
inline Scalar parse_scalar(const std::string &raw)
{
	std::string s;
	for (char ch : raw)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		throw std::invalid_argument("empty scalar literal");
	// locate an 'i'; the sign immediately before it splits real/imag parts
	auto ipos = s.find('i');
	if (ipos == std::string::npos)
		return Scalar(parse_rational(s));
	std::string before = s.substr(0, ipos);
	std::string after = s.substr(ipos + 1);
	Rational sign(1);
	if (!before.empty() && (before.back() == '+' || before.back() == '-')) {
		if (before.back() == '-')
			sign = -1;
		before.pop_back();
	}
	Rational re = before.empty() ? Rational(0) : parse_rational(before);
	Rational im = after.empty() ? Rational(1) : parse_rational(after);
	return Scalar(re, sign * im);
}

inline std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
	return os << to_string(s);
}

} // namespace eqloc
