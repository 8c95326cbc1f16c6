#ifndef GODELCAT_ANALYTIC_HPP
#define GODELCAT_ANALYTIC_HPP

#include <vector>

#include <godelcat/numeric.hpp>

namespace godelcat
{
	/**
	 * The tail transform and its inverse.
	 *
	 * phi(x, u) = u + x / (1 - u) maps the generating function of one tail
	 * level to the next; it is singular at u = 1. psi(x, v) is the inverse
	 * branch with psi(x, 0) = 0:
	 *     psi(x, v) = (1 + v - sqrt((1 - v)^2 + 4x)) / 2,
	 * defined for (1 - v)^2 + 4x >= 0. psi_deriv is d psi / d v:
	 *     (1 + (1 - v) / sqrt((1 - v)^2 + 4x)) / 2.
	 * Precision follows the operands; wrap calls in a PrecisionGuard (or
	 * use the higher-level entry points below, which do so themselves).
	 */
	Real phi(const Real& x, const Real& u);
	Real psi(const Real& x, const Real& v);
	Real psi_deriv(const Real& x, const Real& v);

	/**
	 * Everything about the square-root singularity of the level generating
	 * functions at radius r = 1/(4m), obtained by iterating the inverse
	 * map from the singular value of the grand total:
	 *
	 *   w[0] = 1/2,            w[k+1] = psi(r, w[k])
	 *   d[k] = psi_deriv(r, w[k])                    (k = 0..m-2)
	 *   q[0] = 1,              q[k+1] = q[k] * d[k]  (tail shares)
	 *   c[0] = 1/2,            c[k+1] = c[k] * d[k]  (tail singular coefficients)
	 *   p[k] = q[k] - q[k+1],  p[m-1] = q[m-1]       (level shares)
	 *   a_level[k] = w[k] - w[k+1], a_level[m-1] = w[m-1]  (level values at r)
	 *   b_level[k] = c[k] - c[k+1], b_level[m-1] = c[m-1]  (level singular coefficients)
	 *
	 * p[j] is the limiting share of output level j among all truth table
	 * entries; q[k] the limiting share of outputs at level k or above.
	 */
	struct CriticalData
	{
		int m = 0;
		unsigned digits = 0; // working precision the table was computed at
		Real r; // singularity radius 1/(4m)
		std::vector<Real> w, d, q, p, c, a_level, b_level;
	};

	/**
	 * Compute the critical table for an m-element chain. Runs m-1 inverse-map
	 * iterations at the requested precision; requires
	 *     digits >= 20 + floor(log10(m - 1))
	 * so ten guard digits survive the accumulated drift, and raises a
	 * precision error naming the needed digits otherwise.
	 */
	CriticalData critical_data(int m, Precision prec = Precision{});

	// Limiting share of top outputs, q[m-1]; decreasing in m with limit
	// 1/sqrt(3).
	Real p_top(int m, Precision prec = Precision{});

	// Limiting share of bottom outputs in closed form:
	//     p_bottom(m) = (1 - sqrt(m / (m + 4))) / 2.
	// This is the reference value; critical_data(m).p[0] must agree with it.
	Real p_bottom_closed(int m, Precision prec = Precision{});

	/**
	 * Exact nested radicals for the four-element chain:
	 *     beta  = sqrt(7 + 2 sqrt 2)
	 *     alpha = 1 + sqrt 2 + beta
	 *     gamma = sqrt(16 + alpha^2)
	 * give the inverse-map derivatives and the level shares
	 *     d0 = (2 + sqrt 2)/4,  d1 = alpha/(2 beta),  d2 = (alpha + gamma)/(2 gamma)
	 *     p_bottom = 1/2 - sqrt(2)/4
	 *     p_a      = (2 + sqrt 2) / (2 alpha beta)
	 *     p_b      = (2 + sqrt 2) alpha / (beta gamma (alpha + gamma))
	 *     p_top    = (2 + sqrt 2) alpha (alpha + gamma) / (16 beta gamma)
	 * along with the iterates w1, w2, w3 in radical form. An independent
	 * route to the same numbers as critical_data(4).
	 */
	struct Godel4Radicals
	{
		unsigned digits = 0;
		Real beta, alpha, gamma;
		Real d0, d1, d2;
		Real w1, w2, w3;
		Real p_bottom, p_a, p_b, p_top;
	};

	Godel4Radicals godel4_exact(Precision prec = Precision{});

	// Coefficient B_{i,j} = a_level[i] * b_level[j] + a_level[j] * b_level[i]
	// governing joint root-split counts: pair share at (i, j) tends to
	// 2 * B_{i,j} of the grand total.
	Real pair_singular_coefficient(const CriticalData& cd, int i, int j);

	// A positive real too large for fixed-point display, as
	// mantissa * 10^exponent10 with mantissa in [1, 10).
	struct ScaledReal
	{
		Real mantissa;
		long exponent10 = 0;
	};

	/**
	 * First-order asymptotic size of the level-j count at n:
	 *     at(n, j) ~ (p[j] / 4) * (4m)^n / (sqrt(pi) * n^(3/2)).
	 * Evaluated in the log domain, so n in the thousands is fine.
	 */
	ScaledReal asymptotic_estimate(const CriticalData& cd, int j, int n);

	// Same shape for the grand total (level share 1):
	//     total(n) ~ (1/4) * (4m)^n / (sqrt(pi) * n^(3/2)).
	ScaledReal asymptotic_total_estimate(int m, int n, Precision prec = Precision{});
}
#endif
