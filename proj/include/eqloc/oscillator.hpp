#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace eqloc {

/// Deformed model operator H_ε = -d²/dx² + ε²x² + cε on [-L, L], Dirichlet,
/// second-order central differences on M interior grid points.
struct ModelOperator
{
	double epsilon = 1.0;
	double L = 12.0;
	int M = 2000;
	double c = -1.0; // ground energy 0 for the default

	void validate() const
	{
		if (epsilon <= 0 || L <= 0 || M < 3)
			throw std::invalid_argument("ModelOperator: need ε>0, L>0, M≥3");
		if (M < 200)
			std::cerr << "warning: M=" << M << " below the recommended minimum 200\n";
		if (std::exp(-epsilon * L * L / 2) >= 1e-12)
			std::cerr << "warning: L=" << L
			          << " too small for Gaussian decay at ε=" << epsilon << "\n";
	}
};

struct SpectrumReport
{
	std::vector<double> eigenvalues; // lowest 10, ascending
};

/// Lowest eigenvalues of the discretized operator via Eigen's dense
/// symmetric solver on the tridiagonal matrix.
inline SpectrumReport spectrum(const ModelOperator &op)
{
	op.validate();
	int m = op.M;
	double h = 2 * op.L / (m + 1);
	Eigen::VectorXd diag(m), sub(m - 1);
	for (int i = 0; i < m; ++i) {
		double x = -op.L + (i + 1) * h;
		diag[i] = 2.0 / (h * h) + op.epsilon * op.epsilon * x * x +
		          op.c * op.epsilon;
	}
	sub.setConstant(-1.0 / (h * h));
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
	solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
	if (solver.info() != Eigen::Success)
		throw std::runtime_error("eigensolver failed");
	SpectrumReport rep;
	int keep = std::min<int>(10, m);
	rep.eigenvalues.assign(solver.eigenvalues().data(),
	                       solver.eigenvalues().data() + keep);
	return rep;
}

struct ScalingReport
{
	bool ok = false;
	double max_rel_dev = 0.0;
	std::vector<std::pair<double, SpectrumReport>> spectra;
};

/// Checks that the lowest 5 positive eigenvalues scale linearly in ε:
/// |λ_i(ε)/ε - λ_i(ε')/ε'| / (λ_i(ε')/ε') < 10⁻² for every pair.
inline ScalingReport scaling_check(const std::vector<double> &eps_list,
                                   int M = 2000, double L = 12.0,
                                   double c = -1.0)
{
	if (eps_list.size() < 2)
		throw std::invalid_argument("scaling_check: need at least two ε values");
	ScalingReport rep;
	std::vector<std::vector<double>> scaled;
	for (double eps : eps_list) {
		ModelOperator op{eps, L, M, c};
		SpectrumReport s = spectrum(op);
		// positive part of the spectrum, lowest 5, divided by ε
		std::vector<double> pos;
		double gap_floor = 0.5 * eps; // zero modes sit well below ε
		for (double v : s.eigenvalues)
			if (v > gap_floor && pos.size() < 5)
				pos.push_back(v / eps);
		if (pos.size() < 5)
			throw std::runtime_error("scaling_check: fewer than 5 positive eigenvalues");
		scaled.push_back(pos);
		rep.spectra.emplace_back(eps, std::move(s));
	}
	double worst = 0;
	for (size_t a = 0; a < scaled.size(); ++a)
		for (size_t b = 0; b < scaled.size(); ++b) {
			if (a == b)
				continue;
			for (int i = 0; i < 5; ++i) {
				double dev = std::fabs(scaled[a][i] - scaled[b][i]) /
				             std::fabs(scaled[b][i]);
				worst = std::max(worst, dev);
			}
		}
	rep.max_rel_dev = worst;
	rep.ok = worst < 1e-2;
	return rep;
}

} // namespace eqloc
