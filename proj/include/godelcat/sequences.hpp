#ifndef GODELCAT_SEQUENCES_HPP
#define GODELCAT_SEQUENCES_HPP

#include <string>
#include <vector>

#include <godelcat/numeric.hpp>

namespace godelcat
{
	// Catalan number C_k (C_0 = 1, C_1 = 1, C_2 = 2, ...), built from the
	// convolution recurrence C_{k+1} = sum_i C_i C_{k-i}.
	BigInt catalan(int k);

	// The row C_0 .. C_k_max of Catalan numbers.
	std::vector<BigInt> catalan_numbers(int k_max);

	/**
	 * Exact output-level counts over all bracketings and valuations.
	 *
	 * at(n, j) is the number of (bracketing, valuation) pairs on n
	 * propositions whose truth table entry is level j; total(n) is the
	 * row sum m^n * Catalan(n-1); tail(n, k) is the partial sum over
	 * levels >= k. n is 1-based throughout: valid n is 1..n_max.
	 *
	 * Rows are filled by the split convolution
	 *     at(n, j) = sum_{i=1}^{n-1} tail(i, j+1) * at(n-i, j)
	 * for j < m-1, with the top level taken as total minus the rest and
	 * at(1, j) = 1 for every j. Tails are maintained incrementally, so a
	 * full table costs O(m * n_max^2) big-integer operations.
	 */
	class LevelCounts
	{
	public:
		LevelCounts(int m, int n_max);

		int m() const { return m_; }
		int n_max() const { return n_max_; }

		const BigInt& at(int n, int j) const;
		const BigInt& total(int n) const;
		const BigInt& tail(int n, int k) const; // sum over levels >= k
		const std::vector<BigInt>& row(int n) const;

	private:
		void check_n(int n) const;

		int m_, n_max_;
		std::vector<std::vector<BigInt>> rows_; // rows_[n][j], slot 0 unused
		std::vector<std::vector<BigInt>> tails_; // tails_[n][k]
		std::vector<BigInt> totals_; // totals_[n]
	};

	LevelCounts level_counts(int m, int n_max);

	/**
	 * Joint root-split counts: at(n, i, j) is the number of (bracketing,
	 * valuation) pairs whose root splits into a left part evaluating to
	 * v_i and a right part evaluating to v_j. Built from LevelCounts by
	 *     at(n, i, j) = sum_{t=1}^{n-1} lc.at(t, i) * lc.at(n-t, j),
	 * which is symmetric under swapping i and j; n = 1 is all zeros.
	 */
	class PairCounts
	{
	public:
		explicit PairCounts(const LevelCounts& lc);

		int m() const { return m_; }
		int n_max() const { return n_max_; }

		const BigInt& at(int n, int i, int j) const;

	private:
		int m_, n_max_;
		std::vector<std::vector<BigInt>> cells_; // [n][i*m+j], slot 0 unused
	};

	PairCounts pair_counts(const LevelCounts& lc);

	// Single (i, j) sequence n = 1..n_max without building the full cube;
	// entry [n] is the pair count, entry [0] is unused and zero.
	std::vector<BigInt> pair_sequence(const LevelCounts& lc, int i, int j);

	/**
	 * Output-level counts reconstructed from pair counts alone, valid for
	 * n >= 2: a non-top output j arises exactly from splits with left
	 * level above j and right level j, and a top output from splits with
	 * left level <= right level.
	 */
	class RecoveredLevels
	{
	public:
		explicit RecoveredLevels(const PairCounts& pc);

		int m() const { return m_; }
		int n_max() const { return n_max_; }
		static constexpr int first_n = 2;

		const BigInt& at(int n, int j) const;

	private:
		int m_, n_max_;
		std::vector<std::vector<BigInt>> rows_; // rows_[n], slots 0..1 unused
	};

	RecoveredLevels recover_outputs_from_pairs(const PairCounts& pc);

	/**
	 * Exact share of each output level at a fixed n, as round-half-up
	 * fixed-point decimals: scaled[j] = round(at(n, j) / total(n) * 10^places),
	 * computed purely in integers.
	 */
	struct Proportions
	{
		int m = 0;
		int n = 0;
		unsigned places = 6;
		std::vector<BigInt> scaled;

		// "0.153354"-style strings, one per level.
		std::vector<std::string> text() const;
	};

	Proportions proportions(const LevelCounts& lc, int n, unsigned places = 6);

	// Number of non-top outputs per n: total(n) - at(n, m-1). Entry [0]
	// is unused and zero.
	std::vector<BigInt> non_true_counts(const LevelCounts& lc);
}
#endif
