#include <godelcat/sequences.hpp>

namespace godelcat
{
	std::vector<BigInt> catalan_numbers(int k_max)
	{
		if (k_max < 0)
			throw DomainError("catalan_numbers needs k >= 0, got " + std::to_string(k_max));
		std::vector<BigInt> c(k_max + 1);
		c[0] = 1;
		for (int k = 1; k <= k_max; ++k)
			for (int i = 0; i < k; ++i)
				c[k] += c[i] * c[k - 1 - i];
		return c;
	}

	BigInt catalan(int k)
	{
		return catalan_numbers(k)[k];
	}

	LevelCounts::LevelCounts(int m, int n_max)
	: m_(m)
	, n_max_(n_max)
	{
		if (m < 2)
			throw DomainError("level counts need a chain of at least 2, got " + std::to_string(m));
		if (n_max < 1)
			throw DomainError("level counts need n_max >= 1, got " + std::to_string(n_max));

		rows_.resize(n_max + 1);
		tails_.resize(n_max + 1);
		totals_.resize(n_max + 1);

		std::vector<BigInt> cat = catalan_numbers(n_max - 1);
		BigInt m_power = 1;
		for (int n = 1; n <= n_max; ++n)
		{
			m_power *= m;
			totals_[n] = m_power * cat[n - 1];
		}

		// Suffix sums over levels, maintained row by row: the recurrence
		// for row n reads the tails of every earlier row.
		auto fill_tails = [&](int n)
		{
			tails_[n].assign(m + 1, 0);
			for (int k = m - 1; k >= 0; --k)
				tails_[n][k] = tails_[n][k + 1] + rows_[n][k];
		};

		// Base row: a lone proposition hits every level exactly once.
		rows_[1].assign(m, 1);
		fill_tails(1);

		for (int n = 2; n <= n_max; ++n)
		{
			rows_[n].assign(m, 0);
			// A level-j output of a compound arises from a root split with
			// the left part strictly above j and the right part exactly j.
			for (int j = 0; j + 1 < m; ++j)
			{
				BigInt sum = 0;
				for (int i = 1; i < n; ++i)
					sum += tails_[i][j + 1] * rows_[n - i][j];
				rows_[n][j] = sum;
			}
			// Everything else lands on the top level.
			BigInt rest = 0;
			for (int j = 0; j + 1 < m; ++j)
				rest += rows_[n][j];
			rows_[n][m - 1] = totals_[n] - rest;
			fill_tails(n);
		}
	}

	void LevelCounts::check_n(int n) const
	{
		if (n < 1 || n > n_max_)
			throw DomainError(
				"n = " + std::to_string(n) + " outside the computed range 1.."
				+ std::to_string(n_max_));
	}

	const BigInt& LevelCounts::at(int n, int j) const
	{
		check_n(n);
		if (j < 0 || j >= m_)
			throw DomainError("level " + std::to_string(j) + " outside a chain of " + std::to_string(m_));
		return rows_[n][j];
	}

	const BigInt& LevelCounts::total(int n) const
	{
		check_n(n);
		return totals_[n];
	}

	const BigInt& LevelCounts::tail(int n, int k) const
	{
		check_n(n);
		if (k < 0 || k > m_)
			throw DomainError("tail cut " + std::to_string(k) + " outside a chain of " + std::to_string(m_));
		return tails_[n][k];
	}

	const std::vector<BigInt>& LevelCounts::row(int n) const
	{
		check_n(n);
		return rows_[n];
	}

	LevelCounts level_counts(int m, int n_max)
	{
		return LevelCounts(m, n_max);
	}

	// The split convolution for one ordered pair of levels. Summing over
	// every split position makes the result symmetric in (i, j): the
	// substitution t -> n - t swaps the roles.
	static BigInt split_convolution(const LevelCounts& lc, int n, int i, int j)
	{
		BigInt sum = 0;
		for (int t = 1; t < n; ++t)
			sum += lc.at(t, i) * lc.at(n - t, j);
		return sum;
	}

	PairCounts::PairCounts(const LevelCounts& lc)
	: m_(lc.m())
	, n_max_(lc.n_max())
	{
		cells_.resize(n_max_ + 1);
		for (int n = 1; n <= n_max_; ++n)
		{
			cells_[n].assign((std::size_t)m_ * m_, 0);
			for (int i = 0; i < m_; ++i)
				for (int j = i; j < m_; ++j)
				{
					BigInt sum = split_convolution(lc, n, i, j);
					cells_[n][(std::size_t)i * m_ + j] = sum;
					cells_[n][(std::size_t)j * m_ + i] = sum;
				}
		}
	}

	const BigInt& PairCounts::at(int n, int i, int j) const
	{
		if (n < 1 || n > n_max_)
			throw DomainError(
				"n = " + std::to_string(n) + " outside the computed range 1.." + std::to_string(n_max_));
		if (i < 0 || i >= m_ || j < 0 || j >= m_)
			throw DomainError(
				"pair (" + std::to_string(i) + ", " + std::to_string(j)
				+ ") outside a chain of " + std::to_string(m_));
		return cells_[n][(std::size_t)i * m_ + j];
	}

	PairCounts pair_counts(const LevelCounts& lc)
	{
		return PairCounts(lc);
	}

	std::vector<BigInt> pair_sequence(const LevelCounts& lc, int i, int j)
	{
		const int m = lc.m();
		if (i < 0 || i >= m || j < 0 || j >= m)
			throw DomainError(
				"pair (" + std::to_string(i) + ", " + std::to_string(j)
				+ ") outside a chain of " + std::to_string(m));
		std::vector<BigInt> seq(lc.n_max() + 1, 0);
		for (int n = 2; n <= lc.n_max(); ++n)
			seq[n] = split_convolution(lc, n, i, j);
		return seq;
	}

	RecoveredLevels::RecoveredLevels(const PairCounts& pc)
	: m_(pc.m())
	, n_max_(pc.n_max())
	{
		if (n_max_ < first_n)
			throw DomainError("pair counts only determine outputs from n = 2 on");
		rows_.resize(n_max_ + 1);
		for (int n = first_n; n <= n_max_; ++n)
		{
			rows_[n].assign(m_, 0);
			// Output level j < top comes exactly from the splits whose
			// left part sits strictly above j and whose right part is j.
			for (int j = 0; j + 1 < m_; ++j)
			{
				BigInt sum = 0;
				for (int i = j + 1; i < m_; ++i)
					sum += pc.at(n, i, j);
				rows_[n][j] = sum;
			}
			// Top output comes from the splits with left level <= right.
			BigInt sum = 0;
			for (int i = 0; i < m_; ++i)
				for (int j = i; j < m_; ++j)
					sum += pc.at(n, i, j);
			rows_[n][m_ - 1] = sum;
		}
	}

	const BigInt& RecoveredLevels::at(int n, int j) const
	{
		if (n < first_n || n > n_max_)
			throw DomainError(
				"n = " + std::to_string(n) + " outside the recovered range "
				+ std::to_string(first_n) + ".." + std::to_string(n_max_));
		if (j < 0 || j >= m_)
			throw DomainError("level " + std::to_string(j) + " outside a chain of " + std::to_string(m_));
		return rows_[n][j];
	}

	RecoveredLevels recover_outputs_from_pairs(const PairCounts& pc)
	{
		return RecoveredLevels(pc);
	}

	Proportions proportions(const LevelCounts& lc, int n, unsigned places)
	{
		const BigInt& total = lc.total(n); // validates n
		Proportions out;
		out.m = lc.m();
		out.n = n;
		out.places = places;
		out.scaled.reserve(lc.m());
		BigInt scale = pow10(places);
		for (int j = 0; j < lc.m(); ++j)
			// Round half up, exactly in integers.
			out.scaled.push_back((2 * lc.at(n, j) * scale + total) / (2 * total));
		return out;
	}

	std::vector<std::string> Proportions::text() const
	{
		std::vector<std::string> out;
		out.reserve(scaled.size());
		BigInt scale = pow10(places);
		for (const BigInt& s : scaled)
		{
			if (places == 0)
			{
				out.push_back(s.str());
				continue;
			}
			BigInt whole = s / scale;
			BigInt rest = s % scale;
			std::string frac = rest.str();
			frac.insert(0, places - frac.size(), '0');
			out.push_back(whole.str() + "." + frac);
		}
		return out;
	}

	std::vector<BigInt> non_true_counts(const LevelCounts& lc)
	{
		std::vector<BigInt> seq(lc.n_max() + 1, 0);
		for (int n = 1; n <= lc.n_max(); ++n)
			seq[n] = lc.total(n) - lc.at(n, lc.m() - 1);
		return seq;
	}
}
