// Acceptance gate: fourteen end-to-end criteria, each printed as one
// PASS/FAIL line with its wall time. The exit code is the number of
// failed criteria, so 0 means the gate is green.

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include <godelcat/analytic.hpp>
#include <godelcat/bracketing.hpp>
#include <godelcat/chain.hpp>
#include <godelcat/limit_law.hpp>
#include <godelcat/numeric.hpp>
#include <godelcat/sequences.hpp>
#include <godelcat/verify.hpp>

#include "fixtures.hpp"

using namespace godelcat;

namespace
{
	struct Failure : std::runtime_error
	{
		using std::runtime_error::runtime_error;
	};

	void require(bool ok, const std::string& what)
	{
		if (!ok)
			throw Failure(what);
	}

	Real tol(int exp10)
	{
		return pow(Real(10), exp10);
	}

	void require_close(const Real& got, const Real& want, const Real& bound,
		const std::string& what)
	{
		if (!(abs(got - want) <= bound))
			throw Failure(what + ": |" + format_fixed(got, 20) + " - "
				+ format_fixed(want, 20) + "| exceeds bound");
	}

	// ---- criterion bodies -------------------------------------------------

	// 1. Full sweep of both propositions over the four-element chain at
	//    n = 2: the tally (3, 2, 1, 10) and the value string itself.
	void sweep_tally_n2()
	{
		Chain chain(4);
		CountVector two = brute_counts(chain, 2);
		for (int j = 0; j < 4; ++j)
			require(two.counts[j] == fixtures::tally_n2[j],
				"tally mismatch at level " + std::to_string(j));

		const char symbols[] = {'0', 'a', 'b', '1'};
		std::string got;
		Bracketing b = enumerate_bracketings(2)[0];
		Valuation v(2, chain.bottom());
		do
			got += symbols[evaluate(b, v, chain).index];
		while (next_valuation(v, chain.size()));
		require(got == fixtures::outputs_n2, "output string mismatch: " + got);
	}

	// 2. The frozen exact sequences to n = 10: four level rows, totals,
	//    non-top counts, and all sixteen pair sequences.
	void frozen_sequences()
	{
		LevelCounts lc = level_counts(4, 10);
		PairCounts pc = pair_counts(lc);
		auto row = [&](int j, const fixtures::Seq10& want, const char* name)
		{
			for (int n = 1; n <= 10; ++n)
				require(lc.at(n, j) == want[n - 1],
					std::string(name) + " mismatch at n = " + std::to_string(n));
		};
		row(0, fixtures::g4_bottom, "bottom row");
		row(1, fixtures::g4_a, "second row");
		row(2, fixtures::g4_b, "third row");
		row(3, fixtures::g4_top, "top row");

		std::vector<BigInt> s = non_true_counts(lc);
		for (int n = 1; n <= 10; ++n)
		{
			require(lc.total(n) == fixtures::g4_total[n - 1],
				"total mismatch at n = " + std::to_string(n));
			require(s[n] == fixtures::g4_non_top[n - 1],
				"non-top mismatch at n = " + std::to_string(n));
		}

		auto pair_row = [&](int i, int j, const fixtures::Seq10& want)
		{
			for (int n = 1; n <= 10; ++n)
			{
				require(pc.at(n, i, j) == want[n - 1], "pair (" + std::to_string(i)
					+ "," + std::to_string(j) + ") mismatch at n = " + std::to_string(n));
				require(pc.at(n, j, i) == want[n - 1], "pair swap mismatch");
			}
		};
		pair_row(1, 0, fixtures::p4_a0);
		pair_row(2, 0, fixtures::p4_b0);
		pair_row(3, 0, fixtures::p4_10);
		pair_row(2, 1, fixtures::p4_ba);
		pair_row(3, 1, fixtures::p4_1a);
		pair_row(3, 2, fixtures::p4_1b);
		pair_row(0, 0, fixtures::p4_00);
		pair_row(1, 1, fixtures::p4_aa);
		pair_row(2, 2, fixtures::p4_bb);
		pair_row(3, 3, fixtures::p4_11);
	}

	// 3. The recurrence engine against the brute-force oracle: every level
	//    and pair count for m = 2..5 up to n = 6, and for the two-element
	//    chain up to n = 9; recovered levels along the way.
	void oracle_equivalence()
	{
		auto check_chain = [](int m, int n_top)
		{
			Chain chain(m);
			LevelCounts lc = level_counts(m, n_top);
			PairCounts pc = pair_counts(lc);
			RecoveredLevels rec = recover_outputs_from_pairs(pc);
			for (int n = 1; n <= n_top; ++n)
			{
				CountVector counts = brute_counts(chain, n);
				for (int j = 0; j < m; ++j)
					require(lc.at(n, j) == counts.counts[j],
						"level oracle mismatch at m = " + std::to_string(m)
						+ ", n = " + std::to_string(n));
				std::vector<std::vector<BigInt>> pairs = brute_pair_counts(chain, n);
				for (int i = 0; i < m; ++i)
					for (int j = 0; j < m; ++j)
						require(pc.at(n, i, j) == pairs[i][j],
							"pair oracle mismatch at m = " + std::to_string(m)
							+ ", n = " + std::to_string(n));
				if (n >= 2)
					for (int j = 0; j < m; ++j)
						require(rec.at(n, j) == lc.at(n, j),
							"recovery mismatch at m = " + std::to_string(m));
			}
		};
		for (int m : {2, 3, 4, 5})
			check_chain(m, 6);
		check_chain(2, 9);
	}

	// 4. The frozen six-place share strings at ten values of n, plus the
	//    limit row, exactly as printed.
	void frozen_share_strings()
	{
		LevelCounts lc = level_counts(4, 250);
		for (const fixtures::ShareRow& row : fixtures::shares4)
		{
			std::vector<std::string> text = proportions(lc, row.n, 6).text();
			for (int j = 0; j < 4; ++j)
				require(text[j] == row.shares[j], "share string mismatch at n = "
					+ std::to_string(row.n) + ": got " + text[j]);
		}
		CriticalData cd = critical_data(4, Precision{60});
		for (int j = 0; j < 4; ++j)
			require(format_fixed(cd.p[j], 6) == fixtures::shares4_limit[j],
				"limit share string mismatch at level " + std::to_string(j));
	}

	// 5. Eighteen-place decimals of the four-element limiting shares from
	//    the nested radicals, and agreement with the iterated route.
	void radical_constants()
	{
		Godel4Radicals r = godel4_exact(Precision{60});
		CriticalData cd = critical_data(4, Precision{60});
		PrecisionGuard guard{Precision{60}};
		require(format_fixed(r.p_top, 18) == fixtures::p_top4_18,
			"top share decimals mismatch: " + format_fixed(r.p_top, 18));
		Real non_top = 1 - r.p_top;
		require(format_fixed(non_top, 18) == fixtures::p_non_top4_18,
			"non-top share decimals mismatch");
		require_close(cd.p[0], r.p_bottom, tol(-40), "bottom share routes disagree");
		require_close(cd.p[1], r.p_a, tol(-40), "second share routes disagree");
		require_close(cd.p[2], r.p_b, tol(-40), "third share routes disagree");
		require_close(cd.p[3], r.p_top, tol(-40), "top share routes disagree");
	}

	// 6. The iterates and the first derivative in closed radical form.
	void radical_iterates()
	{
		CriticalData cd = critical_data(4, Precision{60});
		PrecisionGuard guard{Precision{60}};
		Real s2 = sqrt(Real(2));
		Real beta = sqrt(7 + 2 * s2);
		Real gamma = sqrt(16 + pow(1 + s2 + beta, 2));
		require_close(cd.w[1], Real(3) / 4 - s2 / 4, tol(-40), "first iterate");
		require_close(cd.w[2], Real(7) / 8 - s2 / 8 - beta / 8, tol(-40), "second iterate");
		require_close(cd.w[3], Real(15) / 16 - s2 / 16 - beta / 16 - gamma / 16,
			tol(-40), "third iterate");
		require_close(cd.d[0], (2 + s2) / 4, tol(-40), "first derivative");
		Godel4Radicals r = godel4_exact(Precision{60});
		require_close(cd.d[1], r.d1, tol(-40), "second derivative");
		require_close(cd.d[2], r.d2, tol(-40), "third derivative");
	}

	// 7. The frozen ten-place top shares for twelve chain sizes up to
	//    m = 10000, each within 1e-9.
	void frozen_top_shares()
	{
		PrecisionGuard guard{Precision{60}};
		auto check = [](const fixtures::TopShare& row)
		{
			Real got = p_top(row.m, Precision{60});
			require_close(got, Real(row.p_top), tol(-9),
				"top share at m = " + std::to_string(row.m));
		};
		for (const fixtures::TopShare& row : fixtures::top_small)
			check(row);
		for (const fixtures::TopShare& row : fixtures::top_large)
			check(row);
		require_close(1 / sqrt(Real(3)), Real(fixtures::inv_sqrt3_10), tol(-9),
			"limiting constant");
	}

	// 8. The frozen six-place share vectors of the five- and ten-element
	//    chains, each entry within 1e-6.
	void frozen_share_vectors()
	{
		{
			CriticalData cd = critical_data(5, Precision{60});
			PrecisionGuard guard{Precision{60}};
			for (int j = 0; j < 5; ++j)
				require_close(cd.p[j], Real(fixtures::shares5_limit[j]), tol(-6),
					"five-chain share at level " + std::to_string(j));
		}
		{
			CriticalData cd = critical_data(10, Precision{60});
			PrecisionGuard guard{Precision{60}};
			for (int j = 0; j < 10; ++j)
				require_close(cd.p[j], Real(fixtures::shares10_limit[j]), tol(-6),
					"ten-chain share at level " + std::to_string(j));
		}
	}

	// 9. The closed-form bottom share: equal to the iterated route for
	//    every m up to 50, and scaling like 1/m far beyond.
	void closed_bottom_share()
	{
		for (int m = 2; m <= 50; ++m)
		{
			CriticalData cd = critical_data(m, Precision{60});
			PrecisionGuard guard{Precision{60}};
			require_close(cd.p[0], p_bottom_closed(m, Precision{60}), tol(-40),
				"bottom share routes disagree at m = " + std::to_string(m));
		}
		PrecisionGuard guard{Precision{60}};
		Real scaled = Real(1000000) * p_bottom_closed(1000000, Precision{60});
		require(scaled > Real(0.99) && scaled < Real(1.01),
			"bottom share does not scale like 1/m: " + format_fixed(scaled, 6));
	}

	// 10. The limit measure is coherent: unit mass and the closed mean by
	//     quadrature to 1e-12, and survival approaches the atom at the
	//     right edge.
	void limit_measure_coherence()
	{
		LimitMeasure lm = limit_measure(Precision{60});
		PrecisionGuard guard{Precision{60}};
		require_close(mass_by_quadrature(Precision{60}), Real(1), tol(-12),
			"total mass by quadrature");
		require_close(mean_by_quadrature(Precision{60}), sqrt(Real(3)) - 1, tol(-12),
			"mean by quadrature");
		require_close(survival(1 - tol(-12)), lm.atom, tol(-12),
			"survival at the right edge");
	}

	// 11. Finite-size survival cuts converge along the ladder
	//     m = 100, 400, 1600 at three interior points, and the m = 1000
	//     cut at the midpoint is already within 5e-3.
	void survival_cut_ladder()
	{
		PrecisionGuard guard{Precision{60}};
		for (double td : {0.25, 0.5, 0.75})
		{
			Real t(td);
			Real s = survival(t);
			Real prev = -1;
			for (int m : {100, 400, 1600})
			{
				Real gap = abs(macroscopic_cut(m, t, Precision{60}) - s);
				require(prev < 0 || gap < prev,
					"cut gap fails to shrink at t = " + format_fixed(t, 2)
					+ ", m = " + std::to_string(m));
				prev = gap;
			}
		}
		Real mid_gap = abs(macroscopic_cut(1000, Real(0.5), Precision{60})
			- survival(Real(0.5)));
		require(mid_gap < Real(0.005),
			"midpoint cut at m = 1000 too far: " + format_fixed(mid_gap, 8));
	}

	// 12. First-order growth estimates against the exact counts: the
	//     relative deviation shrinks along n = 250, 500, 1000 and is
	//     within 2% at n = 1000, for the top level and the grand total.
	void growth_estimates_tighten()
	{
		CriticalData cd = critical_data(4, Precision{60});
		LevelCounts lc = level_counts(4, 1000);
		PrecisionGuard guard{Precision{60}};

		// Explicit return types below stop the deduced boost expression
		// templates from outliving their operands.
		auto deviation = [&](const ScaledReal& est, const BigInt& exact) -> Real
		{
			Real approx = est.mantissa * pow(Real(10), Real(est.exponent10));
			return abs(approx / Real(exact.str()) - 1);
		};

		Real prev_level = -1, prev_total = -1;
		for (int n : {250, 500, 1000})
		{
			Real dev_level = deviation(asymptotic_estimate(cd, 3, n), lc.at(n, 3));
			Real dev_total = deviation(asymptotic_total_estimate(4, n, Precision{60}),
				lc.total(n));
			require(prev_level < 0 || dev_level < prev_level,
				"top-level deviation fails to shrink at n = " + std::to_string(n));
			require(prev_total < 0 || dev_total < prev_total,
				"total deviation fails to shrink at n = " + std::to_string(n));
			prev_level = dev_level;
			prev_total = dev_total;
		}
		require(prev_level < Real(0.02),
			"top-level deviation at n = 1000: " + format_fixed(prev_level, 8));
		require(prev_total < Real(0.02),
			"total deviation at n = 1000: " + format_fixed(prev_total, 8));
	}

	// 13. Pair ratios extrapolate to their singular coefficients: the
	//     Richardson value 2 r(1000) - r(500) lands within 1% of twice the
	//     coefficient, for the top-top and top-bottom pairs.
	void pair_ratio_extrapolation()
	{
		CriticalData cd = critical_data(4, Precision{60});
		LevelCounts lc = level_counts(4, 1000);
		PrecisionGuard guard{Precision{60}};

		auto check_pair = [&](int i, int j)
		{
			std::vector<BigInt> seq = pair_sequence(lc, i, j);
			auto ratio = [&](int n) -> Real
			{
				return Real(seq[n].str()) / Real(lc.total(n).str());
			};
			Real extrapolated = 2 * ratio(1000) - ratio(500);
			Real target = 2 * pair_singular_coefficient(cd, i, j);
			require(abs(extrapolated / target - 1) < Real(0.01),
				"pair (" + std::to_string(i) + "," + std::to_string(j)
				+ ") extrapolation off: " + format_fixed(extrapolated, 10)
				+ " vs " + format_fixed(target, 10));
		};
		check_pair(3, 3);
		check_pair(3, 0);
	}

	// 14. The exact identity suite to depth 40 for chains of two through
	//     eight elements: totals against an independent Catalan route, the
	//     split recurrence recomputed from raw rows, tails, complements,
	//     pair symmetry, pair totals and level recovery.
	void exact_identity_suite()
	{
		for (int m = 2; m <= 8; ++m)
		{
			const int n_top = 40;
			LevelCounts lc = level_counts(m, n_top);
			PairCounts pc = pair_counts(lc);
			RecoveredLevels rec = recover_outputs_from_pairs(pc);

			// Independent multiplicative Catalan sequence.
			BigInt cat = 1, power_m = 1;
			for (int n = 1; n <= n_top; ++n)
			{
				power_m *= m;
				require(lc.total(n) == power_m * cat,
					"total breaks the Catalan form at m = " + std::to_string(m)
					+ ", n = " + std::to_string(n));
				cat = cat * 2 * (2 * (n - 1) + 1) / (n + 1);

				BigInt row_sum = 0;
				for (int j = 0; j < m; ++j)
					row_sum += lc.at(n, j);
				require(row_sum == lc.total(n), "row does not sum to the total");

				for (int k = 0; k <= m; ++k)
				{
					BigInt suffix = 0;
					for (int j = k; j < m; ++j)
						suffix += lc.at(n, j);
					require(lc.tail(n, k) == suffix, "tail is not the suffix sum");
				}

				if (n < 2)
					continue;

				// Split recurrence for the non-top levels, from raw rows only.
				for (int j = 0; j + 1 < m; ++j)
				{
					BigInt sum = 0;
					for (int i = 1; i < n; ++i)
					{
						BigInt above = 0;
						for (int p = j + 1; p < m; ++p)
							above += lc.at(i, p);
						sum += above * lc.at(n - i, j);
					}
					require(lc.at(n, j) == sum, "split recurrence fails at m = "
						+ std::to_string(m) + ", n = " + std::to_string(n)
						+ ", j = " + std::to_string(j));
				}

				BigInt pair_sum = 0;
				for (int i = 0; i < m; ++i)
					for (int j = 0; j < m; ++j)
					{
						require(pc.at(n, i, j) == pc.at(n, j, i), "pair symmetry fails");
						pair_sum += pc.at(n, i, j);
					}
				require(pair_sum == lc.total(n), "pairs do not sum to the total");

				for (int j = 0; j < m; ++j)
					require(rec.at(n, j) == lc.at(n, j), "level recovery fails");
			}
		}
	}

	struct Criterion
	{
		const char* name;
		std::function<void()> body;
		double budget_seconds; // 0 = no wall budget asserted
	};
}

int main()
{
	const std::vector<Criterion> criteria{
		{"four-element sweep tally at n = 2", sweep_tally_n2, 1.0},
		{"frozen count sequences to n = 10 with pair refinement", frozen_sequences, 0},
		{"recurrence engine matches brute force", oracle_equivalence, 60.0},
		{"frozen six-place share strings and limit row", frozen_share_strings, 30.0},
		{"eighteen-place radical share constants", radical_constants, 0},
		{"radical iterates and derivatives", radical_iterates, 0},
		{"frozen ten-place top shares to m = 10000", frozen_top_shares, 10.0},
		{"frozen six-place share vectors", frozen_share_vectors, 0},
		{"closed bottom share and its 1/m scaling", closed_bottom_share, 0},
		{"limit measure coherence by quadrature", limit_measure_coherence, 0},
		{"survival cuts converge along the size ladder", survival_cut_ladder, 0},
		{"growth estimates tighten with n", growth_estimates_tighten, 0},
		{"pair ratios extrapolate to their coefficients", pair_ratio_extrapolation, 0},
		{"exact identity suite to depth 40", exact_identity_suite, 0},
	};

	int failures = 0;
	for (std::size_t k = 0; k < criteria.size(); ++k)
	{
		const Criterion& c = criteria[k];
		auto start = std::chrono::steady_clock::now();
		std::string problem;
		try
		{
			c.body();
		}
		catch (const std::exception& e)
		{
			problem = e.what();
		}
		double seconds = std::chrono::duration<double>(
			std::chrono::steady_clock::now() - start).count();
		if (problem.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds)
			problem = "exceeded the " + std::to_string(c.budget_seconds)
				+ " s wall budget";

		const bool pass = problem.empty();
		failures += pass ? 0 : 1;
		std::printf("[%2zu] %s — %s (%.2f s)%s%s\n", k + 1, pass ? "PASS" : "FAIL",
			c.name, seconds, pass ? "" : ": ", problem.c_str());
	}
	std::printf("%zu of %zu criteria passed\n", criteria.size() - failures,
		criteria.size());
	return failures;
}
