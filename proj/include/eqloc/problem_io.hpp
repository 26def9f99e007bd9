#pragma once

#include "eqloc/localization.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace eqloc {

using nlohmann::json;

struct ParseError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

namespace io_detail {

inline Rational rat(const json &j, const std::string &where)
{
	try {
		if (j.is_number_integer())
			return Rational(j.get<long long>());
		if (j.is_string())
			return parse_rational(j.get<std::string>());
	} catch (const std::exception &e) {
		throw ParseError(where + ": " + e.what());
	}
	throw ParseError(where + ": expected rational as string or integer");
}

inline Exponent exponent(const json &j, int rank, const std::string &where)
{
	if (!j.is_array() || static_cast<int>(j.size()) != rank)
		throw ParseError(where + ": expected exponent array of length " +
		                 std::to_string(rank));
	std::vector<Rational> c;
	for (size_t i = 0; i < j.size(); ++i)
		c.push_back(rat(j[i], where + "[" + std::to_string(i) + "]"));
	return Exponent(std::move(c));
}

inline void check_root_order(const Exponent &e, long N, const std::string &where)
{
	for (auto &x : e.c) {
		Rational scaled = x * N;
		if (!is_integer(scaled))
			throw ParseError(where + ": exponent denominator of " + x.str() +
			                 " does not divide root_order " + std::to_string(N));
	}
}

/// Term array [{"exp":[...], "coeff":"...", "b":0, "y":0}, ...] to a poly.
inline GradedLaurentPoly poly(const json &j, int rank, const std::string &where)
{
	if (!j.is_array())
		throw ParseError(where + ": expected term array");
	GradedLaurentPoly p(rank);
	int i = 0;
	for (auto &t : j) {
		std::string at = where + "[" + std::to_string(i++) + "]";
		if (!t.is_object() || !t.contains("exp"))
			throw ParseError(at + ": expected {exp, coeff, b?, y?}");
		Exponent e = exponent(t["exp"], rank, at + ".exp");
		Scalar s(1);
		if (t.contains("coeff")) {
			try {
				s = t["coeff"].is_string() ? parse_scalar(t["coeff"].get<std::string>())
				                           : Scalar(Rational(t["coeff"].get<long long>()));
			} catch (const std::exception &ex) {
				throw ParseError(at + ".coeff: " + ex.what());
			}
		}
		int b = t.value("b", 0), y = t.value("y", 0);
		p.add_term(e, GradedCoeff::monomial(b, y, s));
	}
	return p;
}

inline Contribution contribution(const json &j, int rank, const std::string &where)
{
	if (!j.is_array())
		throw ParseError(where + ": expected contribution array");
	Contribution c;
	int i = 0;
	for (auto &t : j) {
		std::string at = where + "[" + std::to_string(i++) + "]";
		if (!t.is_object() || !t.contains("numerator"))
			throw ParseError(at + ": expected {b?, y?, numerator, denominator?}");
		GradedLaurentPoly num = poly(t["numerator"], rank, at + ".numerator");
		std::vector<Exponent> den;
		if (t.contains("denominator")) {
			int k = 0;
			for (auto &d : t["denominator"]) {
				Exponent u = exponent(d, rank,
				                      at + ".denominator[" + std::to_string(k++) + "]");
				if (u.is_zero())
					throw ParseError(at + ": zero denominator exponent");
				den.push_back(u);
			}
		}
		merge_term(c, t.value("b", 0), t.value("y", 0),
		           canonicalize(CharFraction(std::move(num), std::move(den))));
	}
	return c;
}

inline json exponent_json(const Exponent &e)
{
	json a = json::array();
	for (auto &x : e.c)
		a.push_back(x.str());
	return a;
}

inline json poly_json(const GradedLaurentPoly &p)
{
	json a = json::array();
	for (auto &[e, gc] : p.terms)
		for (auto &[d, s] : gc.terms) {
			json t;
			t["exp"] = exponent_json(e);
			t["coeff"] = to_string(s);
			if (d.first)
				t["b"] = d.first;
			if (d.second)
				t["y"] = d.second;
			a.push_back(t);
		}
	return a;
}

inline json contribution_json(const Contribution &c)
{
	json a = json::array();
	for (auto &t : c) {
		json e;
		if (t.b_deg)
			e["b"] = t.b_deg;
		if (t.y_deg)
			e["y"] = t.y_deg;
		e["numerator"] = poly_json(t.frac.num);
		if (!t.frac.den.empty()) {
			json d = json::array();
			for (auto &u : t.frac.den)
				d.push_back(exponent_json(u));
			e["denominator"] = d;
		}
		a.push_back(e);
	}
	return a;
}

} // namespace io_detail

/// Parses and fully validates a fixed-point problem file: rank consistency,
/// chamber genericity, root-order divisibility.
inline FixedPointProblem parse_problem_json(const json &j)
{
	using namespace io_detail;
	if (!j.is_object())
		throw ParseError("problem: expected a JSON object");
	FixedPointProblem p;
	if (!j.contains("rank") || !j.contains("dim"))
		throw ParseError("problem: rank and dim are required");
	p.rank = j["rank"].get<int>();
	p.dim = j["dim"].get<int>();
	if (p.rank < 1 || p.dim < 1)
		throw ParseError("problem: need rank ≥ 1 and dim ≥ 1");
	p.root_order = j.value("root_order", 1);
	if (p.root_order < 1)
		throw ParseError("root_order: must be ≥ 1");
	if (!j.contains("chamber"))
		throw ParseError("chamber: required");
	{
		Exponent xi = exponent(j["chamber"], p.rank, "chamber");
		p.chamber = Chamber(xi.c);
	}
	if (j.contains("poincare"))
		p.poincare = poly(j["poincare"], p.rank, "poincare");
	if (!j.contains("fixed_points") || !j["fixed_points"].is_array() ||
	    j["fixed_points"].empty())
		throw ParseError("fixed_points: at least one fixed point required");
	int idx = 0;
	for (auto &fj : j["fixed_points"]) {
		std::string at = "fixed_points[" + std::to_string(idx) + "]";
		FixedPoint fp;
		fp.name = fj.value("name", "p" + std::to_string(idx));
		if (fj.contains("weights")) {
			int k = 0;
			for (auto &wj : fj["weights"]) {
				Exponent g = exponent(wj, p.rank,
				                      at + ".weights[" + std::to_string(k++) + "]");
				if (g.is_zero())
					throw ParseError(at + ": zero weight");
				fp.weights.push_back(g);
			}
		}
		if (fj.contains("bundle"))
			fp.bundle = poly(fj["bundle"], p.rank, at + ".bundle");
		if (fj.contains("contribution"))
			fp.contribution = contribution(fj["contribution"], p.rank,
			                               at + ".contribution");
		if (fj.contains("dual_contribution"))
			fp.dual_contribution = contribution(fj["dual_contribution"], p.rank,
			                                    at + ".dual_contribution");
		if (fj.contains("canonical"))
			fp.canonical = exponent(fj["canonical"], p.rank, at + ".canonical");
		if (fj.contains("chi1")) {
			Contribution c = contribution(fj["chi1"], p.rank, at + ".chi1");
			fp.chi1 = evaluate_contribution(c, p.rank, Scalar(-1), Scalar(1));
		}
		if (fp.weights.empty() && !fp.contribution)
			throw ParseError(at + ": weights required unless an explicit contribution is given");
		p.points.push_back(std::move(fp));
		++idx;
	}
	// genericity + root-order validation over every exponent in play
	auto check_exp = [&](const Exponent &e, const std::string &where) {
		check_root_order(e, p.root_order, where);
	};
	auto check_generic = [&](const Exponent &u, const std::string &where) {
		if (p.chamber.pairing(u) == 0)
			throw ParseError(where + ": chamber is orthogonal to " + to_string(u));
		check_exp(u, where);
	};
	auto check_contrib = [&](const Contribution &c, const std::string &where) {
		for (auto &t : c) {
			for (auto &u : t.frac.den)
				check_generic(u, where);
			for (auto &[e, gc] : t.frac.num.terms) {
				check_exp(e, where);
				for (auto &[d, s] : gc.terms)
					if (t.b_deg + d.first > p.dim || t.y_deg + d.second > p.dim)
						std::cerr << "warning: " << where << ": b,y degree beyond dim "
						          << p.dim << "\n";
			}
		}
	};
	for (size_t i = 0; i < p.points.size(); ++i) {
		auto &fp = p.points[i];
		std::string at = "fixed_points[" + std::to_string(i) + "]";
		for (auto &g : fp.weights)
			check_generic(g, at + ".weights");
		if (fp.bundle)
			for (auto &[e, gc] : fp.bundle->terms)
				check_exp(e, at + ".bundle");
		if (fp.contribution)
			check_contrib(*fp.contribution, at + ".contribution");
		if (fp.dual_contribution)
			check_contrib(*fp.dual_contribution, at + ".dual_contribution");
		if (fp.canonical)
			check_exp(*fp.canonical, at + ".canonical");
		if (fp.chi1)
			for (auto &u : fp.chi1->den)
				check_exp(u, at + ".chi1");
	}
	if (p.poincare)
		for (auto &[e, gc] : p.poincare->terms)
			check_exp(e, "poincare");
	return p;
}

inline FixedPointProblem parse_problem(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw ParseError("cannot open " + path);
	json j;
	try {
		in >> j;
	} catch (const std::exception &e) {
		throw ParseError(path + ": " + e.what());
	}
	return parse_problem_json(j);
}

/// Inverse of parse: emits a problem back to the same schema.
inline json emit_problem(const FixedPointProblem &p)
{
	using namespace io_detail;
	json j;
	j["rank"] = p.rank;
	j["dim"] = p.dim;
	if (p.root_order != 1)
		j["root_order"] = p.root_order;
	{
		json c = json::array();
		for (auto &x : p.chamber.xi)
			c.push_back(x.str());
		j["chamber"] = c;
	}
	if (p.poincare)
		j["poincare"] = poly_json(*p.poincare);
	json pts = json::array();
	for (auto &fp : p.points) {
		json f;
		f["name"] = fp.name;
		if (!fp.weights.empty()) {
			json w = json::array();
			for (auto &g : fp.weights)
				w.push_back(exponent_json(g));
			f["weights"] = w;
		}
		if (fp.bundle)
			f["bundle"] = poly_json(*fp.bundle);
		if (fp.contribution)
			f["contribution"] = contribution_json(*fp.contribution);
		if (fp.dual_contribution)
			f["dual_contribution"] = contribution_json(*fp.dual_contribution);
		if (fp.canonical)
			f["canonical"] = exponent_json(*fp.canonical);
		if (fp.chi1) {
			Contribution c{{0, 0, *fp.chi1}};
			f["chi1"] = contribution_json(c);
		}
		pts.push_back(f);
	}
	j["fixed_points"] = pts;
	return j;
}

} // namespace eqloc
