#ifndef GODELCAT_VERIFY_HPP
#define GODELCAT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <godelcat/bracketing.hpp>

namespace godelcat
{
	/**
	 * Cross-validation of the fast recurrence engine against the two
	 * independent brute-force oracles, plus the exact identities the
	 * count tables must satisfy. Used by the `verify` subcommand; each
	 * check reports the first mismatch it finds in full.
	 */
	struct VerifyOptions
	{
		std::vector<int> ms{2, 3, 4, 5}; // chain sizes to check
		int oracle_n = 6; // brute-force comparison depth
		int identity_n = 40; // exact-identity depth
		std::uint64_t budget = default_evaluation_budget;
		unsigned digits = 60; // precision for analytic cross-checks
	};

	struct CheckResult
	{
		std::string name;
		bool pass = false;
		std::string detail; // first mismatch, empty when passing
	};

	std::vector<CheckResult> run_verification(const VerifyOptions& opt);

	bool all_passed(const std::vector<CheckResult>& results);
}
#endif
