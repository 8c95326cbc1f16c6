#include <godelcat/analytic.hpp>

#include <boost/math/constants/constants.hpp>

namespace godelcat
{
	Real phi(const Real& x, const Real& u)
	{
		if (u == 1)
			throw SingularInputError("phi is singular at u = 1");
		return u + x / (1 - u);
	}

	static Real radicand(const Real& x, const Real& v)
	{
		return (1 - v) * (1 - v) + 4 * x;
	}

	Real psi(const Real& x, const Real& v)
	{
		Real rad = radicand(x, v);
		if (rad < 0)
			throw DomainError("psi needs (1 - v)^2 + 4x >= 0");
		return (1 + v - sqrt(rad)) / 2;
	}

	Real psi_deriv(const Real& x, const Real& v)
	{
		Real rad = radicand(x, v);
		if (rad <= 0)
			throw DomainError("psi_deriv needs (1 - v)^2 + 4x > 0");
		return (1 + (1 - v) / sqrt(rad)) / 2;
	}

	// Decimal digits of drift to allow for k iterations of the inverse map:
	// floor(log10(k)), i.e. one digit per factor of ten iterations.
	static unsigned drift_digits(int iterations)
	{
		unsigned d = 0;
		for (int v = iterations; v >= 10; v /= 10)
			++d;
		return d;
	}

	CriticalData critical_data(int m, Precision prec)
	{
		if (m < 2)
			throw DomainError("critical data needs a chain of at least 2, got " + std::to_string(m));
		unsigned required = 20 + drift_digits(m - 1);
		if (prec.digits < required)
			throw PrecisionError(
				"critical data for a chain of " + std::to_string(m) + " runs "
				+ std::to_string(m - 1) + " inverse-map iterations and needs at least "
				+ std::to_string(required) + " digits to keep 10 guard digits; got "
				+ std::to_string(prec.digits) + " - increase digits");

		PrecisionGuard guard(prec);
		CriticalData cd;
		cd.m = m;
		cd.digits = prec.digits;
		cd.r = Real(1) / (4 * m);
		cd.w.resize(m);
		cd.d.resize(m - 1);
		cd.q.resize(m);
		cd.c.resize(m);
		cd.p.resize(m);
		cd.a_level.resize(m);
		cd.b_level.resize(m);

		// Iterate the inverse map down from the grand total's singular
		// value 1/2, collecting the derivative at every step.
		cd.w[0] = Real(1) / 2;
		for (int k = 0; k + 1 < m; ++k)
		{
			cd.d[k] = psi_deriv(cd.r, cd.w[k]);
			cd.w[k + 1] = psi(cd.r, cd.w[k]);
		}

		// Products of derivatives: tail shares (from 1) and tail singular
		// coefficients (from 1/2).
		cd.q[0] = 1;
		cd.c[0] = Real(1) / 2;
		for (int k = 0; k + 1 < m; ++k)
		{
			cd.q[k + 1] = cd.q[k] * cd.d[k];
			cd.c[k + 1] = cd.c[k] * cd.d[k];
		}

		// Per-level differences, with the top level keeping the whole tail.
		for (int k = 0; k + 1 < m; ++k)
		{
			cd.p[k] = cd.q[k] - cd.q[k + 1];
			cd.a_level[k] = cd.w[k] - cd.w[k + 1];
			cd.b_level[k] = cd.c[k] - cd.c[k + 1];
		}
		cd.p[m - 1] = cd.q[m - 1];
		cd.a_level[m - 1] = cd.w[m - 1];
		cd.b_level[m - 1] = cd.c[m - 1];
		return cd;
	}

	Real p_top(int m, Precision prec)
	{
		return critical_data(m, prec).q[m - 1];
	}

	Real p_bottom_closed(int m, Precision prec)
	{
		if (m < 2)
			throw DomainError("p_bottom needs a chain of at least 2, got " + std::to_string(m));
		PrecisionGuard guard(prec);
		return (1 - sqrt(Real(m) / (m + 4))) / 2;
	}

	Godel4Radicals godel4_exact(Precision prec)
	{
		PrecisionGuard guard(prec);
		Godel4Radicals g;
		g.digits = prec.digits;

		Real s2 = sqrt(Real(2));
		g.beta = sqrt(7 + 2 * s2);
		g.alpha = 1 + s2 + g.beta;
		g.gamma = sqrt(16 + g.alpha * g.alpha);

		g.d0 = (2 + s2) / 4;
		g.d1 = g.alpha / (2 * g.beta);
		g.d2 = (g.alpha + g.gamma) / (2 * g.gamma);

		g.w1 = Real(3) / 4 - s2 / 4;
		g.w2 = Real(7) / 8 - s2 / 8 - g.beta / 8;
		g.w3 = Real(15) / 16 - s2 / 16 - g.beta / 16 - g.gamma / 16;

		g.p_bottom = Real(1) / 2 - s2 / 4;
		g.p_a = (2 + s2) / (2 * g.alpha * g.beta);
		g.p_b = (2 + s2) * g.alpha / (g.beta * g.gamma * (g.alpha + g.gamma));
		g.p_top = (2 + s2) * g.alpha * (g.alpha + g.gamma) / (16 * g.beta * g.gamma);
		return g;
	}

	Real pair_singular_coefficient(const CriticalData& cd, int i, int j)
	{
		if (i < 0 || i >= cd.m || j < 0 || j >= cd.m)
			throw DomainError(
				"pair (" + std::to_string(i) + ", " + std::to_string(j)
				+ ") outside a chain of " + std::to_string(cd.m));
		return cd.a_level[i] * cd.b_level[j] + cd.a_level[j] * cd.b_level[i];
	}

	// value = share/4 * (4m)^n / (sqrt(pi) n^(3/2)), assembled in the
	// log10 domain so n in the thousands cannot overflow anything.
	static ScaledReal log_domain_estimate(const Real& share, int m, int n)
	{
		Real pi = boost::math::constants::pi<Real>();
		Real lg = log10(share / 4) + n * log10(Real(4) * m)
			- log10(sqrt(pi)) - Real(3) / 2 * log10(Real(n));
		Real ex = floor(lg);
		ScaledReal out;
		out.exponent10 = ex.convert_to<long>();
		out.mantissa = pow(Real(10), lg - ex);
		// Round-off at the floor boundary can push the mantissa a hair
		// outside [1, 10); renormalise.
		while (out.mantissa >= 10)
		{
			out.mantissa /= 10;
			++out.exponent10;
		}
		while (out.mantissa < 1)
		{
			out.mantissa *= 10;
			--out.exponent10;
		}
		return out;
	}

	ScaledReal asymptotic_estimate(const CriticalData& cd, int j, int n)
	{
		if (j < 0 || j >= cd.m)
			throw DomainError("level " + std::to_string(j) + " outside a chain of " + std::to_string(cd.m));
		if (n < 1)
			throw DomainError("asymptotic estimate needs n >= 1, got " + std::to_string(n));
		PrecisionGuard guard(Precision{cd.digits});
		return log_domain_estimate(cd.p[j], cd.m, n);
	}

	ScaledReal asymptotic_total_estimate(int m, int n, Precision prec)
	{
		if (m < 2)
			throw DomainError("asymptotic estimate needs a chain of at least 2, got " + std::to_string(m));
		if (n < 1)
			throw DomainError("asymptotic estimate needs n >= 1, got " + std::to_string(n));
		PrecisionGuard guard(prec);
		return log_domain_estimate(Real(1), m, n);
	}
}
