#ifndef GODELCAT_LIMIT_LAW_HPP
#define GODELCAT_LIMIT_LAW_HPP

#include <functional>
#include <vector>

#include <godelcat/analytic.hpp>
#include <godelcat/numeric.hpp>

namespace godelcat
{
	/**
	 * The limiting distribution of the scaled output level j/(m-1) as the
	 * chain grows: an absolutely continuous part with density
	 * (1 + 2t)^(-3/2) on [0, 1) plus an atom of mass 1/sqrt(3) at t = 1.
	 * Its survival function on [0, 1) is (1 + 2t)^(-1/2), and the mean is
	 * sqrt(3) - 1.
	 */
	struct LimitMeasure
	{
		unsigned digits = 0;
		Real atom; // 1/sqrt(3)
		Real mean; // sqrt(3) - 1, in closed form

		// Density and survival at t in [0, 1); outside is a domain error.
		// Precision follows the argument.
		static Real density(const Real& t);
		static Real survival(const Real& t);
	};

	LimitMeasure limit_measure(Precision prec = Precision{});

	// Convenience forwarding to LimitMeasure's pointwise functions.
	Real survival(const Real& t);
	Real density(const Real& t);

	// Closed-form mean sqrt(3) - 1.
	Real mean_closed(Precision prec = Precision{});

	/**
	 * The same moments by adaptive Simpson quadrature over [0, 1 - 1e-12]
	 * plus the atom's contribution, target absolute error 1e-13. Agreement
	 * with the closed forms to 1e-12 is the library's own cross-check that
	 * density, survival and atom describe one coherent measure.
	 */
	Real mean_by_quadrature(Precision prec = Precision{});
	Real mass_by_quadrature(Precision prec = Precision{});

	// Adaptive Simpson integral of f over [a, b] to absolute tolerance
	// tol. Exposed for integrating test functions against the density.
	Real integrate(const std::function<Real(const Real&)>& f,
		const Real& a, const Real& b, const Real& tol);

	/**
	 * Finite-m survival approximant: the tail share q_k(m) at the cut
	 * k = floor(t * (m - 1)), for t in [0, 1]. Converges to survival(t)
	 * pointwise on [0, 1) and to the atom mass at t = 1.
	 */
	Real macroscopic_cut(int m, const Real& t, Precision prec = Precision{});

	// The finite-m law itself: mass p_k(m) at the point k/(m-1).
	struct ScaledLevelDistribution
	{
		int m = 0;
		unsigned digits = 0;
		std::vector<Real> support; // k/(m-1)
		std::vector<Real> weight; // p_k(m)
	};

	ScaledLevelDistribution scaled_level_distribution(int m, Precision prec = Precision{});

	// Integral of f against the finite-m law and against the limit law,
	// for checking weak convergence on concrete test functions.
	struct ConvergencePair
	{
		Real discrete; // sum_k p_k(m) f(k/(m-1))
		Real continuum; // integral of f against density + atom * f(1)
	};

	ConvergencePair weak_convergence_check(int m,
		const std::function<Real(const Real&)>& f, Precision prec = Precision{});

	// p_j(m) along a ladder of chain sizes: each fixed level's share
	// vanishes as m grows (only scaled levels carry mass in the limit).
	std::vector<Real> fixed_level_vanishing(int j, const std::vector<int>& ms,
		Precision prec = Precision{});
}
#endif
