#include <doctest.h>

#include <vector>

#include <godelcat/bracketing.hpp>
#include <godelcat/sequences.hpp>

#include "fixtures.hpp"

using namespace godelcat;

TEST_CASE("Catalan numbers match the multiplicative closed form")
{
	// Independent route: C_{k+1} = C_k * 2(2k+1) / (k+2), exact division.
	BigInt c = 1;
	for (int k = 0; k <= 60; ++k)
	{
		CHECK(catalan(k) == c);
		c = c * 2 * (2 * k + 1) / (k + 2);
	}
	CHECK(catalan(0) == 1);
	CHECK(catalan(4) == 14);
	CHECK(catalan(9) == 4862);

	std::vector<BigInt> row = catalan_numbers(12);
	REQUIRE(row.size() == 13);
	CHECK(row[12] == 208012);
	CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("level counts on the four-element chain reproduce the frozen table")
{
	LevelCounts lc = level_counts(4, 10);
	CHECK(lc.m() == 4);
	CHECK(lc.n_max() == 10);
	for (int n = 1; n <= 10; ++n)
	{
		CAPTURE(n);
		CHECK(lc.at(n, 0) == fixtures::g4_bottom[n - 1]);
		CHECK(lc.at(n, 1) == fixtures::g4_a[n - 1]);
		CHECK(lc.at(n, 2) == fixtures::g4_b[n - 1]);
		CHECK(lc.at(n, 3) == fixtures::g4_top[n - 1]);
		CHECK(lc.total(n) == fixtures::g4_total[n - 1]);
	}

	std::vector<BigInt> s = non_true_counts(lc);
	REQUIRE(s.size() == 11);
	CHECK(s[0] == 0);
	for (int n = 1; n <= 10; ++n)
		CHECK(s[n] == fixtures::g4_non_top[n - 1]);
	CHECK(s[2] == 6);
	CHECK(s[3] == 48);
}

TEST_CASE("level counts agree with the brute-force tally on small inputs")
{
	for (int m : {2, 3, 4, 5})
	{
		CAPTURE(m);
		Chain chain(m);
		LevelCounts lc = level_counts(m, 5);
		for (int n = 1; n <= 5; ++n)
		{
			CAPTURE(n);
			CountVector brutish = brute_counts(chain, n);
			for (int j = 0; j < m; ++j)
				CHECK(lc.at(n, j) == brutish.counts[j]);
			CHECK(lc.total(n) == brutish.total());
		}
	}
}

TEST_CASE("tails are suffix sums of the rows")
{
	LevelCounts lc = level_counts(5, 8);
	for (int n = 1; n <= 8; ++n)
	{
		for (int k = 0; k <= 5; ++k)
		{
			BigInt expect = 0;
			for (int j = k; j < 5; ++j)
				expect += lc.at(n, j);
			CHECK(lc.tail(n, k) == expect);
		}
		CHECK(lc.tail(n, 5) == 0);
		CHECK(lc.tail(n, 0) == lc.total(n));
	}
}

TEST_CASE("two-element counts are classical tautology counts at the start")
{
	LevelCounts lc = level_counts(2, 4);
	CHECK(lc.at(1, 0) == 1);
	CHECK(lc.at(1, 1) == 1);
	CHECK(lc.at(2, 0) == 1);
	CHECK(lc.at(2, 1) == 3);
	CHECK(lc.total(2) == 4);
}

TEST_CASE("pair counts match the frozen table and its symmetries")
{
	LevelCounts lc = level_counts(4, 10);
	PairCounts pc = pair_counts(lc);
	CHECK(pc.m() == 4);
	CHECK(pc.n_max() == 10);

	auto check_seq = [&](int i, int j, const fixtures::Seq10& want)
	{
		for (int n = 1; n <= 10; ++n)
		{
			CAPTURE(i);
			CAPTURE(j);
			CAPTURE(n);
			CHECK(pc.at(n, i, j) == want[n - 1]);
			CHECK(pc.at(n, j, i) == want[n - 1]);
		}
	};
	check_seq(1, 0, fixtures::p4_a0);
	check_seq(2, 0, fixtures::p4_b0);
	check_seq(3, 0, fixtures::p4_10);
	check_seq(2, 1, fixtures::p4_ba);
	check_seq(3, 1, fixtures::p4_1a);
	check_seq(3, 2, fixtures::p4_1b);
	check_seq(0, 0, fixtures::p4_00);
	check_seq(1, 1, fixtures::p4_aa);
	check_seq(2, 2, fixtures::p4_bb);
	check_seq(3, 3, fixtures::p4_11);

	// The single-sequence extractor agrees with the full cube.
	std::vector<BigInt> one = pair_sequence(lc, 3, 0);
	REQUIRE(one.size() == 11);
	CHECK(one[0] == 0);
	for (int n = 1; n <= 10; ++n)
		CHECK(one[n] == pc.at(n, 3, 0));
}

TEST_CASE("pair counts are symmetric and sum to the row total")
{
	for (int m : {2, 3, 4, 5})
	{
		CAPTURE(m);
		LevelCounts lc = level_counts(m, 12);
		PairCounts pc = pair_counts(lc);
		for (int n = 2; n <= 12; ++n)
		{
			CAPTURE(n);
			BigInt sum = 0;
			for (int i = 0; i < m; ++i)
				for (int j = 0; j < m; ++j)
				{
					CHECK(pc.at(n, i, j) == pc.at(n, j, i));
					sum += pc.at(n, i, j);
				}
			CHECK(sum == lc.total(n));
		}
		// No root split at n = 1.
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j)
				CHECK(pc.at(1, i, j) == 0);
	}
}

TEST_CASE("level counts are recoverable from pair counts alone")
{
	for (int m : {2, 3, 4, 5})
	{
		CAPTURE(m);
		LevelCounts lc = level_counts(m, 12);
		PairCounts pc = pair_counts(lc);
		RecoveredLevels rec = recover_outputs_from_pairs(pc);
		CHECK(rec.first_n == 2);
		for (int n = 2; n <= 12; ++n)
			for (int j = 0; j < m; ++j)
			{
				CAPTURE(n);
				CAPTURE(j);
				CHECK(rec.at(n, j) == lc.at(n, j));
			}
		CHECK_THROWS_AS(rec.at(1, 0), DomainError);
	}
}

TEST_CASE("pair tallies match brute force on the four-element chain")
{
	Chain chain(4);
	LevelCounts lc = level_counts(4, 4);
	PairCounts pc = pair_counts(lc);
	for (int n = 2; n <= 4; ++n)
	{
		std::vector<std::vector<BigInt>> brutish = brute_pair_counts(chain, n);
		for (int i = 0; i < 4; ++i)
			for (int j = 0; j < 4; ++j)
				CHECK(pc.at(n, i, j) == brutish[i][j]);
	}
}

TEST_CASE("shares print to the frozen six-place strings")
{
	LevelCounts lc = level_counts(4, 250);
	for (const fixtures::ShareRow& row : fixtures::shares4)
	{
		CAPTURE(row.n);
		std::vector<std::string> text = proportions(lc, row.n, 6).text();
		REQUIRE(text.size() == 4);
		for (int j = 0; j < 4; ++j)
			CHECK(text[j] == row.shares[j]);
	}
}

TEST_CASE("shares are uniform at n = 1 and sum to about one")
{
	LevelCounts lc = level_counts(4, 10);
	Proportions uniform = proportions(lc, 1, 6);
	for (const std::string& s : uniform.text())
		CHECK(s == "0.250000");

	for (int n = 1; n <= 10; ++n)
	{
		Proportions p = proportions(lc, n, 6);
		BigInt sum = 0;
		for (const BigInt& cell : p.scaled)
			sum += cell;
		// Half-up rounding can drift by at most half a unit per level.
		CHECK(abs(sum - BigInt(1000000)) <= 2);
	}
}

TEST_CASE("sequence accessors are one-based and validated")
{
	LevelCounts lc = level_counts(4, 6);
	CHECK_THROWS_AS(lc.at(0, 0), DomainError);
	CHECK_THROWS_AS(lc.at(7, 0), DomainError);
	CHECK_THROWS_AS(lc.at(1, 4), DomainError);
	CHECK_THROWS_AS(lc.at(1, -1), DomainError);
	CHECK_THROWS_AS(lc.tail(0, 0), DomainError);
	CHECK_THROWS_AS((void)level_counts(1, 5), DomainError);
	CHECK_THROWS_AS((void)level_counts(4, 0), DomainError);

	PairCounts pc = pair_counts(lc);
	CHECK_THROWS_AS(pc.at(0, 0, 0), DomainError);
	CHECK_THROWS_AS(pc.at(1, 4, 0), DomainError);
	CHECK_THROWS_AS((void)pair_sequence(lc, 4, 0), DomainError);
	CHECK_THROWS_AS((void)pair_sequence(lc, 0, -1), DomainError);

	CHECK_THROWS_AS((void)proportions(lc, 0, 6), DomainError);
	CHECK_THROWS_AS((void)proportions(lc, 7, 6), DomainError);
}
