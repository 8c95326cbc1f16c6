#ifndef GODELCAT_ERRORS_HPP
#define GODELCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace godelcat
{
	// Base class for every error raised by this library.
	struct Error : std::runtime_error
	{
		using std::runtime_error::runtime_error;
	};

	// Invalid argument: value outside the mathematical domain of the
	// operation (chain index out of range, n < 1, mismatched sizes, ...).
	struct DomainError : Error
	{
		using Error::Error;
	};

	// A function was evaluated at a point where it is singular
	// (e.g. the tail transform at u = 1).
	struct SingularInputError : DomainError
	{
		using DomainError::DomainError;
	};

	// A configurable resource cap would be exceeded (brute-force evaluation
	// budget, bracketing enumeration cap, maximum chain size). The message
	// always names the cap so callers can decide whether to raise it.
	struct ResourceLimitError : Error
	{
		using Error::Error;
	};

	// Requested working precision is too low for the computation to keep
	// its guard digits. The message suggests a sufficient number of digits.
	struct PrecisionError : Error
	{
		using Error::Error;
	};

	// Command-line misuse: unknown flags, missing or conflicting selectors.
	struct UsageError : Error
	{
		using Error::Error;
	};
}
#endif
