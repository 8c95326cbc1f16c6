#include <godelcat/verify.hpp>

#include <godelcat/analytic.hpp>
#include <godelcat/sequences.hpp>

namespace godelcat
{
	namespace
	{
		// Collect one named check; the body reports the first mismatch by
		// returning a non-empty string.
		template <typename Body>
		void check(std::vector<CheckResult>& out, const std::string& name, Body body)
		{
			CheckResult r;
			r.name = name;
			try
			{
				r.detail = body();
				r.pass = r.detail.empty();
			}
			catch (const ResourceLimitError&)
			{
				// A blown budget is a caller problem, not a failed check;
				// let it surface as such.
				throw;
			}
			catch (const Error& e)
			{
				r.pass = false;
				r.detail = e.what();
			}
			out.push_back(std::move(r));
		}

		std::string place(int m, int n, int j)
		{
			return "m=" + std::to_string(m) + " n=" + std::to_string(n)
				+ " level=" + std::to_string(j);
		}

		std::string mismatch(const std::string& where, const BigInt& expected, const BigInt& got)
		{
			return where + ": expected " + expected.str() + ", got " + got.str();
		}

		// Engine rows against both brute-force routes.
		std::string oracle_levels(const LevelCounts& lc, int depth, std::uint64_t budget)
		{
			Chain chain(lc.m());
			for (int n = 1; n <= depth; ++n)
			{
				CountVector brute = brute_counts(chain, n, budget);
				CountVector dp;
				dp.n = n;
				dp.m = lc.m();
				dp.counts.assign(lc.m(), 0);
				for (const Bracketing& b : enumerate_bracketings(n, n))
				{
					CountVector one = distribution_dp(b, chain);
					for (int j = 0; j < lc.m(); ++j)
						dp.counts[j] += one.counts[j];
				}
				for (int j = 0; j < lc.m(); ++j)
				{
					if (brute.counts[j] != lc.at(n, j))
						return mismatch("recurrence vs sweep at " + place(lc.m(), n, j),
							brute.counts[j], lc.at(n, j));
					if (dp.counts[j] != brute.counts[j])
						return mismatch("per-tree distribution vs sweep at " + place(lc.m(), n, j),
							brute.counts[j], dp.counts[j]);
				}
			}
			return {};
		}

		std::string oracle_pairs(const LevelCounts& lc, const PairCounts& pc, int depth,
			std::uint64_t budget)
		{
			Chain chain(lc.m());
			for (int n = 1; n <= depth; ++n)
			{
				auto brute = brute_pair_counts(chain, n, budget);
				for (int i = 0; i < lc.m(); ++i)
					for (int j = 0; j < lc.m(); ++j)
						if (brute[i][j] != pc.at(n, i, j))
							return mismatch(
								"pair convolution vs sweep at m=" + std::to_string(lc.m())
									+ " n=" + std::to_string(n) + " pair=(" + std::to_string(i)
									+ "," + std::to_string(j) + ")",
								brute[i][j], pc.at(n, i, j));
			}
			return {};
		}

		std::string sum_law(const LevelCounts& lc)
		{
			for (int n = 1; n <= lc.n_max(); ++n)
			{
				BigInt sum = 0;
				for (int j = 0; j < lc.m(); ++j)
					sum += lc.at(n, j);
				if (sum != lc.total(n))
					return mismatch("row sum vs m^n * Catalan(n-1) at m=" + std::to_string(lc.m())
						+ " n=" + std::to_string(n), lc.total(n), sum);
			}
			return {};
		}

		std::string swap_symmetry(const PairCounts& pc)
		{
			for (int n = 1; n <= pc.n_max(); ++n)
				for (int i = 0; i < pc.m(); ++i)
					for (int j = i + 1; j < pc.m(); ++j)
						if (pc.at(n, i, j) != pc.at(n, j, i))
							return mismatch(
								"pair swap at m=" + std::to_string(pc.m()) + " n=" + std::to_string(n)
									+ " pair=(" + std::to_string(i) + "," + std::to_string(j) + ")",
								pc.at(n, i, j), pc.at(n, j, i));
			return {};
		}

		std::string pair_recovery(const LevelCounts& lc, const PairCounts& pc)
		{
			RecoveredLevels rec = recover_outputs_from_pairs(pc);
			for (int n = RecoveredLevels::first_n; n <= lc.n_max(); ++n)
				for (int j = 0; j < lc.m(); ++j)
					if (rec.at(n, j) != lc.at(n, j))
						return mismatch("recovery from pairs at " + place(lc.m(), n, j),
							lc.at(n, j), rec.at(n, j));
			return {};
		}

		// The split recurrence recomputed from raw rows (no stored tails):
		// level j at n is sum_i (counts above j at i) * (level j at n - i),
		// plus 1 at n = 1; the top level is the complement of the rest.
		std::string level_recurrences(const LevelCounts& lc)
		{
			const int m = lc.m();
			for (int n = 1; n <= lc.n_max(); ++n)
			{
				for (int j = 0; j + 1 < m; ++j)
				{
					BigInt expect = n == 1 ? BigInt(1) : BigInt(0);
					for (int i = 1; i < n; ++i)
					{
						BigInt above = 0;
						for (int p = j + 1; p < m; ++p)
							above += lc.at(i, p);
						expect += above * lc.at(n - i, j);
					}
					if (expect != lc.at(n, j))
						return mismatch("split recurrence at " + place(m, n, j),
							expect, lc.at(n, j));
				}
				BigInt rest = 0;
				for (int j = 0; j + 1 < m; ++j)
					rest += lc.at(n, j);
				if (lc.total(n) - rest != lc.at(n, m - 1))
					return mismatch("top complement at " + place(m, n, m - 1),
						lc.total(n) - rest, lc.at(n, m - 1));
			}
			return {};
		}

		std::string analytic_identities(int m, Precision prec)
		{
			CriticalData cd = critical_data(m, prec);
			PrecisionGuard guard(prec);
			// Tolerance leaves the 10 guard digits plus drift out of the claim.
			Real tol = pow(Real(10), -(int)(prec.digits - 20));
			auto bad = [&](const std::string& what, const Real& diff)
			{
				return what + " off by " + format_fixed(abs(diff), prec.digits - 15)
					+ " at m=" + std::to_string(m);
			};

			Real sum = 0;
			for (int j = 0; j < m; ++j)
				sum += cd.p[j];
			if (abs(sum - 1) > tol)
				return bad("sum of level shares vs 1", sum - 1);
			for (int k = 0; k < m; ++k)
			{
				if (abs(cd.p[k] - 2 * cd.b_level[k]) > tol)
					return bad("share vs doubled singular coefficient at level " + std::to_string(k),
						cd.p[k] - 2 * cd.b_level[k]);
				if (abs(cd.q[k] - 2 * cd.c[k]) > tol)
					return bad("tail share vs doubled tail coefficient at level " + std::to_string(k),
						cd.q[k] - 2 * cd.c[k]);
			}
			Real closed = p_bottom_closed(m, prec);
			if (abs(closed - cd.p[0]) > tol)
				return bad("closed-form bottom share vs iterated", closed - cd.p[0]);
			if (m == 4)
			{
				Godel4Radicals g = godel4_exact(prec);
				if (abs(g.p_top - cd.p[3]) > tol)
					return bad("radical top share vs iterated", g.p_top - cd.p[3]);
				if (abs(g.p_a - cd.p[1]) > tol)
					return bad("radical a-share vs iterated", g.p_a - cd.p[1]);
				if (abs(g.p_b - cd.p[2]) > tol)
					return bad("radical b-share vs iterated", g.p_b - cd.p[2]);
				if (abs(g.w3 - cd.w[3]) > tol)
					return bad("radical third iterate vs psi chain", g.w3 - cd.w[3]);
			}
			return {};
		}
	}

	std::vector<CheckResult> run_verification(const VerifyOptions& opt)
	{
		std::vector<CheckResult> results;
		for (int m : opt.ms)
		{
			LevelCounts lc = level_counts(m, std::max(opt.oracle_n, opt.identity_n));
			PairCounts pc = pair_counts(lc);
			std::string tag = " (m=" + std::to_string(m) + ")";
			check(results, "level oracle" + tag,
				[&] { return oracle_levels(lc, opt.oracle_n, opt.budget); });
			check(results, "pair oracle" + tag,
				[&] { return oracle_pairs(lc, pc, opt.oracle_n, opt.budget); });
			check(results, "sum law" + tag, [&] { return sum_law(lc); });
			check(results, "swap symmetry" + tag, [&] { return swap_symmetry(pc); });
			check(results, "pair recovery" + tag, [&] { return pair_recovery(lc, pc); });
			check(results, "split recurrences" + tag, [&] { return level_recurrences(lc); });
			check(results, "critical identities" + tag,
				[&] { return analytic_identities(m, Precision{opt.digits}); });
		}
		return results;
	}

	bool all_passed(const std::vector<CheckResult>& results)
	{
		for (const CheckResult& r : results)
			if (!r.pass)
				return false;
		return true;
	}
}
