// eqloc: file-driven front end for equivariant localization computations.
//
// Exit codes: 0 success / check passed, 1 input error, 2 failed mathematical
// check.

#include "eqloc/oscillator.hpp"
#include "eqloc/problem_io.hpp"
#include "eqloc/rs.hpp"
#include "eqloc/theta.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace eqloc;

namespace {

std::string display(const CharFraction &f, const Chamber &ch)
{
	auto c = canonicalize(f);
	if (auto p = reduce_to_polynomial(c, ch))
		return to_string(*p);
	return to_string(c);
}

std::string poly_or_zero(const GradedLaurentPoly &p) { return to_string(p); }

json contribution_report(const Contribution &c, const Chamber &ch)
{
	json a = json::array();
	for (auto &t : c) {
		json e;
		e["b"] = t.b_deg;
		if (t.y_deg)
			e["y"] = t.y_deg;
		e["value"] = display(t.frac, ch);
		a.push_back(e);
	}
	return a;
}

void print_side(const std::string &label, const Contribution &c,
                const Chamber &ch)
{
	for (auto &t : c) {
		std::cout << label << "[b^" << t.b_deg;
		if (t.y_deg)
			std::cout << " y^" << t.y_deg;
		std::cout << "] = " << display(t.frac, ch) << "\n";
	}
}

void print_series(const std::string &label, const DegreeSeries &s, int rank)
{
	for (auto &[q, m] : s.by_degree) {
		GradedLaurentPoly p(rank);
		for (auto &[e, sc] : m)
			p.add_term(e, GradedCoeff(sc));
		std::cout << label << " series b^" << q << ": " << to_string(p) << "\n";
	}
}

std::vector<Rational> parse_rat_list(const std::string &s)
{
	std::vector<Rational> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, ','))
		out.push_back(parse_rational(cur));
	return out;
}

GradedLaurentPoly poincare_for(const FixedPointProblem &p, const Rational &T,
                               bool *from_lacunary = nullptr)
{
	if (p.poincare) {
		if (from_lacunary)
			*from_lacunary = false;
		return *p.poincare;
	}
	bool stable = false;
	auto classical = classical_morse(p, T, &stable);
	auto verdict = lacunary_conclusion(classical, p.dim);
	if (!stable || !verdict.equals_poincare)
		throw ParseError("no poincare data and the lacunary principle is inconclusive");
	if (from_lacunary)
		*from_lacunary = true;
	return *verdict.poincare;
}

struct Options
{
	std::string file;
	Rational T = Rational(10);
	long k = 0;
	std::string weights;
	Rational b_val = Rational(-1);
	Rational y_val = Rational(1);
	bool json_out = false;
	std::string eps = "1,2,4";
	int M = 2000;
	double L = 12.0;
};

int cmd_lefschetz(const Options &opt)
{
	auto p = parse_problem(opt.file);
	auto sum = evaluate_contribution(global_closed_form(p, Side::morse), p.rank,
	                                 Scalar(opt.b_val), Scalar(opt.y_val));
	std::string text = display(sum, p.chamber);
	if (opt.json_out) {
		json j;
		j["lefschetz"] = text;
		j["b"] = opt.b_val.str();
		j["y"] = opt.y_val.str();
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "lefschetz (b=" << opt.b_val.str() << ", y="
		          << opt.y_val.str() << "): " << text << "\n";
	}
	return 0;
}

int cmd_side(const Options &opt, Side side)
{
	auto p = parse_problem(opt.file);
	const char *label = side == Side::morse ? "morse" : "dual";
	Chamber ch = side == Side::morse ? p.chamber : p.chamber.opposite();
	auto closed = global_closed_form(p, side);
	auto series = global_series(p, side, opt.T);
	if (opt.json_out) {
		json j;
		j[label] = contribution_report(closed, ch);
		std::cout << j.dump(2) << "\n";
	} else {
		print_side(label, closed, ch);
		std::cout << "expansion cutoff T = " << opt.T.str() << "\n";
		print_series(label, series, p.rank);
	}
	return 0;
}

int cmd_classical(const Options &opt)
{
	auto p = parse_problem(opt.file);
	bool stable = false;
	auto classical = classical_morse(p, opt.T, &stable);
	auto verdict = lacunary_conclusion(classical, p.dim);
	if (opt.json_out) {
		json j;
		j["classical"] = poly_or_zero(classical);
		j["T"] = opt.T.str();
		j["stable"] = stable;
		j["lacunary_equals_poincare"] = verdict.equals_poincare;
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "classical (T=" << opt.T.str()
		          << "): " << poly_or_zero(classical) << "\n";
		std::cout << "stable: " << (stable ? "yes" : "no") << "\n";
		std::cout << "lacunary: "
		          << (verdict.equals_poincare ? "equals the Poincaré polynomial"
		                                      : "inconclusive")
		          << "\n";
	}
	return 0;
}

int cmd_verify(const Options &opt)
{
	auto p = parse_problem(opt.file);
	bool from_lacunary = false;
	GradedLaurentPoly P = poincare_for(p, opt.T, &from_lacunary);
	auto morse = global_series(p, Side::morse, opt.T);
	auto repm = verify_inequality(morse, P, p.dim, p.chamber, opt.T);
	auto dual = global_series(p, Side::dual, opt.T);
	auto repd = verify_inequality(dual, P, p.dim, p.chamber.opposite(), opt.T);
	bool ok = repm.holds && repd.holds;
	if (opt.json_out) {
		json j;
		j["poincare"] = poly_or_zero(P);
		j["poincare_from_lacunary"] = from_lacunary;
		j["morse_holds"] = repm.holds;
		j["dual_holds"] = repd.holds;
		if (!repm.failure.empty())
			j["morse_failure"] = repm.failure;
		if (!repd.failure.empty())
			j["dual_failure"] = repd.failure;
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "poincare"
		          << (from_lacunary ? " (from lacunary principle)" : "") << ": "
		          << poly_or_zero(P) << "\n";
		std::cout << "morse side (T=" << opt.T.str()
		          << "): " << (repm.holds ? "holds" : "FAILS: " + repm.failure)
		          << "\n";
		std::cout << "dual side (T=" << opt.T.str()
		          << "): " << (repd.holds ? "holds" : "FAILS: " + repd.failure)
		          << "\n";
		std::cout << (ok ? "verified" : "check failed") << "\n";
	}
	return ok ? 0 : 2;
}

int cmd_vanish(const Options &opt)
{
	auto p = parse_problem(opt.file);
	bool stable = false;
	auto classical = classical_morse(p, opt.T, &stable);
	bool ok = classical.is_zero() && stable;
	if (opt.json_out) {
		json j;
		j["classical"] = poly_or_zero(classical);
		j["stable"] = stable;
		j["vanishing"] = ok;
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "classical (T=" << opt.T.str()
		          << "): " << poly_or_zero(classical) << "\n";
		std::cout << "stable: " << (stable ? "yes" : "no") << "\n";
		std::cout << "vanishing: " << (ok ? "yes" : "no") << "\n";
	}
	return ok ? 0 : 2;
}

int cmd_chi(const Options &opt)
{
	auto p = parse_problem(opt.file);
	auto rep = chi_yb_assemble(p);
	if (!rep.polynomial)
		throw ParseError("chi: global data does not reduce to a polynomial");
	auto eval = eval_grading(*rep.polynomial, Scalar(opt.b_val), Scalar(opt.y_val));
	bool self_dual = chi_duality_check(*rep.polynomial, p.dim);
	if (opt.json_out) {
		json j;
		j["chi"] = poly_or_zero(*rep.polynomial);
		j["evaluation"] = poly_or_zero(eval);
		j["b"] = opt.b_val.str();
		j["y"] = opt.y_val.str();
		j["self_dual"] = self_dual;
		json locals = json::array();
		for (auto &[name, c] : rep.local) {
			json e;
			e["point"] = name;
			e["local"] = contribution_report(c, p.chamber);
			locals.push_back(e);
		}
		j["local"] = locals;
		std::cout << j.dump(2) << "\n";
	} else {
		for (auto &[name, c] : rep.local) {
			std::cout << "local chi at " << name << ":";
			for (auto &t : c)
				std::cout << " [b^" << t.b_deg << " y^" << t.y_deg << "] "
				          << display(t.frac, p.chamber) << ";";
			std::cout << "\n";
		}
		std::cout << "chi_{y,b} = " << poly_or_zero(*rep.polynomial) << "\n";
		std::cout << "chi at (b=" << opt.b_val.str() << ", y=" << opt.y_val.str()
		          << ") = " << poly_or_zero(eval) << "\n";
		std::cout << "duality (n=" << p.dim
		          << "): " << (self_dual ? "self-dual" : "not self-dual") << "\n";
	}
	return 0;
}

int cmd_nut(const Options &opt)
{
	auto p = parse_problem(opt.file);
	if (opt.weights.empty())
		throw ParseError("nut: --weights required");
	WeightAssignment w{parse_rat_list(opt.weights)};
	if (static_cast<int>(w.w.size()) != p.rank)
		throw ParseError("nut: --weights length must equal the rank");
	auto rep = global_theta_checks(p, w);
	bool ok = rep.nut_sum_zero && rep.residues_zero && rep.odd_orders_zero;
	if (opt.json_out) {
		json j;
		json pts = json::array();
		for (auto &pt : rep.points) {
			json e;
			e["point"] = pt.name;
			e["N"] = pt.N.str();
			e["tau3"] = pt.tau3.str();
			pts.push_back(e);
		}
		j["points"] = pts;
		j["sum_N"] = rep.sum_N.str();
		j["sum_tau3"] = rep.sum_tau3.str();
		j["nut_sum_zero"] = rep.nut_sum_zero;
		j["residues_zero"] = rep.residues_zero;
		j["odd_orders_zero"] = rep.odd_orders_zero;
		std::cout << j.dump(2) << "\n";
	} else {
		for (auto &pt : rep.points)
			std::cout << "point " << pt.name << ": N = " << pt.N.str()
			          << ", tau3 = " << pt.tau3.str() << "\n";
		std::cout << "sum N = " << rep.sum_N.str() << "\n";
		std::cout << "sum tau3 = " << rep.sum_tau3.str() << "\n";
		std::cout << "odd orders vanish: " << (rep.odd_orders_zero ? "yes" : "no")
		          << "\n";
		std::cout << "NUT check: " << (ok ? "pass" : "fail") << "\n";
	}
	return ok ? 0 : 2;
}

int cmd_rs(const Options &opt)
{
	auto p = parse_problem(opt.file);
	auto rsp = rs_problem(p, opt.k);
	rsp.poincare.reset();
	auto morse = global_closed_form(rsp, Side::morse);
	auto dual = global_closed_form(rsp, Side::dual);
	bool stable = false;
	auto classical = classical_morse(rsp, opt.T, &stable);
	auto index = evaluate_contribution(morse, p.rank, Scalar(-1), Scalar(1));
	if (opt.json_out) {
		json j;
		j["k"] = opt.k;
		j["morse"] = contribution_report(morse, p.chamber);
		j["dual"] = contribution_report(dual, p.chamber.opposite());
		j["classical"] = poly_or_zero(classical);
		j["stable"] = stable;
		j["index"] = display(index, p.chamber);
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "k = " << opt.k << "\n";
		print_side("rs morse", morse, p.chamber);
		print_side("rs dual", dual, p.chamber.opposite());
		std::cout << "rs classical (T=" << opt.T.str()
		          << "): " << poly_or_zero(classical) << "\n";
		std::cout << "stable: " << (stable ? "yes" : "no") << "\n";
		std::cout << "rs index (b=-1): " << display(index, p.chamber) << "\n";
	}
	return 0;
}

int cmd_oscillator(const Options &opt)
{
	std::vector<double> eps;
	for (auto &r : parse_rat_list(opt.eps))
		eps.push_back(static_cast<double>(numerator(r)) /
		              static_cast<double>(denominator(r)));
	auto rep = scaling_check(eps, opt.M, opt.L);
	char buf[64];
	if (opt.json_out) {
		json j;
		json spectra = json::array();
		for (auto &[e, s] : rep.spectra) {
			json one;
			one["eps"] = e;
			one["eigenvalues"] = s.eigenvalues;
			spectra.push_back(one);
		}
		j["spectra"] = spectra;
		j["max_rel_dev"] = rep.max_rel_dev;
		j["ok"] = rep.ok;
		std::cout << j.dump(2) << "\n";
	} else {
		for (auto &[e, s] : rep.spectra) {
			std::cout << "eps=" << e << ":";
			for (double v : s.eigenvalues) {
				std::snprintf(buf, sizeof buf, " %.4f", v);
				std::cout << buf;
			}
			std::cout << "\n";
		}
		std::snprintf(buf, sizeof buf, "%.3e", rep.max_rel_dev);
		std::cout << "max relative deviation = " << buf << "\n";
		std::cout << "scaling check: " << (rep.ok ? "pass" : "fail") << "\n";
	}
	return rep.ok ? 0 : 2;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact equivariant localization toolkit"};
	app.require_subcommand(1);
	Options opt;
	std::string T_str = "10", b_str = "-1", y_str = "1";

	auto add_common = [&](CLI::App *sub, bool needs_file = true) {
		if (needs_file)
			sub->add_option("file", opt.file, "problem file (JSON)")->required();
		sub->add_option("--T", T_str, "series cutoff (rational)");
		sub->add_flag("--json", opt.json_out, "machine-readable output");
		return sub;
	};

	auto *lef = add_common(
	    app.add_subcommand("lefschetz", "global closed form at fixed b, y"));
	lef->add_option("--b", b_str, "b value (default -1)");
	lef->add_option("--y", y_str, "y value (default 1)");
	add_common(app.add_subcommand("morse", "Morse-side closed forms and series"));
	add_common(app.add_subcommand("dual", "dual-side closed forms and series"));
	add_common(app.add_subcommand("classical", "classical Morse polynomial"));
	add_common(app.add_subcommand("verify", "strong inequalities on both sides"));
	add_common(app.add_subcommand("vanish", "vanishing of the classical polynomial"));
	auto *chi = add_common(app.add_subcommand("chi", "Poincaré-Hodge polynomial"));
	chi->add_option("--b", b_str, "evaluation b value");
	chi->add_option("--y", y_str, "evaluation y value");
	auto *nut = add_common(app.add_subcommand("nut", "NUT charges and tau3 sums"));
	nut->add_option("--weights", opt.weights,
	                "theta weight assignment (comma rationals)");
	auto *rs = add_common(app.add_subcommand("rs", "k-Rarita-Schwinger data"));
	rs->add_option("--k", opt.k, "RS parameter (default 0)");
	auto *osc = app.add_subcommand("oscillator", "model spectral-gap scaling");
	osc->add_option("--eps", opt.eps, "epsilon list (default 1,2,4)");
	osc->add_option("--M", opt.M, "grid points (default 2000)");
	osc->add_option("--L", opt.L, "half-width (default 12)");
	osc->add_flag("--json", opt.json_out, "machine-readable output");

	CLI11_PARSE(app, argc, argv);

	try {
		opt.T = parse_rational(T_str);
		opt.b_val = parse_rational(b_str);
		opt.y_val = parse_rational(y_str);
		if (app.got_subcommand("lefschetz"))
			return cmd_lefschetz(opt);
		if (app.got_subcommand("morse"))
			return cmd_side(opt, Side::morse);
		if (app.got_subcommand("dual"))
			return cmd_side(opt, Side::dual);
		if (app.got_subcommand("classical"))
			return cmd_classical(opt);
		if (app.got_subcommand("verify"))
			return cmd_verify(opt);
		if (app.got_subcommand("vanish"))
			return cmd_vanish(opt);
		if (app.got_subcommand("chi"))
			return cmd_chi(opt);
		if (app.got_subcommand("nut"))
			return cmd_nut(opt);
		if (app.got_subcommand("rs"))
			return cmd_rs(opt);
		if (app.got_subcommand("oscillator"))
			return cmd_oscillator(opt);
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}
