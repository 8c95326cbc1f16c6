#ifndef GODELCAT_CHAIN_HPP
#define GODELCAT_CHAIN_HPP

#include <compare>
#include <vector>

#include <godelcat/errors.hpp>

namespace godelcat
{
	// One element of a finite chain, identified by its 0-based position:
	// index 0 is the bottom (false), index m-1 the top (true).
	struct TruthValue
	{
		int index = 0;

		auto operator<=>(const TruthValue&) const = default;
	};

	/**
	 * Totally ordered set of m truth values v_0 < v_1 < ... < v_{m-1}.
	 *
	 * m must be at least 2 (bottom and top must be distinct). A configurable
	 * upper bound guards against accidentally huge chains; computations on a
	 * chain are O(m) or O(m^2) per step, so the default cap of 10,000 keeps
	 * everything interactive.
	 */
	class Chain
	{
	public:
		static constexpr int default_max_size = 10000;

		explicit Chain(int m, int max_size = default_max_size);

		int size() const { return m_; }

		TruthValue bottom() const { return TruthValue{0}; }
		TruthValue top() const { return TruthValue{m_ - 1}; }

		// v_j, validated: j outside [0, m) is a domain error.
		TruthValue value(int j) const;

		// True iff x is an element of this chain.
		bool contains(TruthValue x) const { return 0 <= x.index && x.index < m_; }

	private:
		int m_;
	};

	// Residuated implication on the chain: top when x <= y, else y.
	// Both arguments are validated against the chain.
	TruthValue goedel_implies(const Chain& chain, TruthValue x, TruthValue y);

	// Full m-by-m implication table; entry (x, y) is goedel_implies(x, y).
	class ImplicationTable
	{
	public:
		explicit ImplicationTable(const Chain& chain);

		int size() const { return m_; }
		TruthValue at(TruthValue x, TruthValue y) const;

	private:
		int m_;
		std::vector<TruthValue> cells_;
	};

	ImplicationTable implication_table(const Chain& chain);
}
#endif
