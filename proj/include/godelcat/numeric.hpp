#ifndef GODELCAT_NUMERIC_HPP
#define GODELCAT_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include <godelcat/errors.hpp>

namespace godelcat
{
	// Exact integer type used for all counting. Counts grow like (4m)^n,
	// far past any machine word for the n this library targets.
	using BigInt = boost::multiprecision::mpz_int;

	// Arbitrary-precision real with runtime-selectable precision.
	// Binary operations propagate the widest operand precision; values
	// constructed from scratch pick up the current default precision,
	// which PrecisionGuard manages below.
	using Real = boost::multiprecision::mpfr_float;

	// Requested working precision in decimal digits. The last ten digits
	// are treated as guard digits; results are quoted to digits - 10.
	struct Precision
	{
		unsigned digits;

		explicit Precision(unsigned d = 60) : digits(d)
		{
			if (d < 20)
				throw PrecisionError(
					"working precision must be at least 20 digits (10 quoted + 10 guard), got "
					+ std::to_string(d));
		}
	};

	// Scope guard installing a default precision for freshly constructed
	// Real values. Every public analytic entry point opens one of these,
	// so callers never have to touch the global default themselves.
	class PrecisionGuard
	{
	public:
		explicit PrecisionGuard(Precision p)
		: saved_(Real::default_precision())
		{
			Real::default_precision(p.digits);
		}

		~PrecisionGuard() { Real::default_precision(saved_); }

		PrecisionGuard(const PrecisionGuard&) = delete;
		PrecisionGuard& operator=(const PrecisionGuard&) = delete;

	private:
		unsigned saved_;
	};

	// 10^k as an exact integer.
	BigInt pow10(unsigned k);

	// Fixed-point decimal string with the given number of places,
	// rounded half up (half away from zero for negative input).
	// format_fixed(0.6841222107..., 6) == "0.684122".
	std::string format_fixed(const Real& x, unsigned places);

	// Exact ratio num/den rendered to `places` decimals, rounded half up.
	// Works entirely in integers, so the printed digits are exact.
	std::string format_ratio(const BigInt& num, const BigInt& den, unsigned places);
}
#endif
