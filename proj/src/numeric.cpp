#include <godelcat/numeric.hpp>

namespace godelcat
{
	BigInt pow10(unsigned k)
	{
		BigInt p = 1;
		for (unsigned i = 0; i < k; ++i)
			p *= 10;
		return p;
	}

	// Render a nonnegative scaled integer as a fixed-point decimal with
	// `places` fractional digits.
	static std::string place_point(const BigInt& scaled, unsigned places)
	{
		std::string digits = scaled.str();
		if (digits.size() <= places)
			digits.insert(0, places + 1 - digits.size(), '0');
		digits.insert(digits.size() - places, places ? "." : "");
		return digits;
	}

	std::string format_fixed(const Real& x, unsigned places)
	{
		const bool negative = x < 0;
		Real ax = abs(x);
		// Scale, add a half, truncate: round half away from zero.
		Real scaled_real = ax * pow(Real(10), (int)places) + Real(0.5);
		BigInt scaled = scaled_real.convert_to<BigInt>();
		return (negative && scaled != 0 ? "-" : "") + place_point(scaled, places);
	}

	std::string format_ratio(const BigInt& num, const BigInt& den, unsigned places)
	{
		if (den == 0)
			throw DomainError("format_ratio: zero denominator");
		if (num < 0 || den < 0)
			throw DomainError("format_ratio: expected nonnegative ratio");
		// floor((2 * num * 10^places + den) / (2 * den)) rounds half up exactly.
		BigInt scaled = (2 * num * pow10(places) + den) / (2 * den);
		return place_point(scaled, places);
	}
}
