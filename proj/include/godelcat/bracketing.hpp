#ifndef GODELCAT_BRACKETING_HPP
#define GODELCAT_BRACKETING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <godelcat/chain.hpp>
#include <godelcat/numeric.hpp>

namespace godelcat
{
	// Default ceiling on the number of propositions a single enumeration
	// call will expand: the list of bracketings has Catalan(n-1) entries,
	// which at n = 12 is already 58,786 trees.
	inline constexpr int default_bracketing_cap = 12;

	// Default ceiling on brute-force work, counted in single truth-table
	// row evaluations (bracketings times valuations).
	inline constexpr std::uint64_t default_evaluation_budget = 100'000'000;

	/**
	 * One way of fully parenthesising p_1 => p_2 => ... => p_n: a full
	 * binary tree whose leaves are the propositions in left-to-right
	 * order. Leaves carry no labels; a leaf's proposition is determined
	 * by its position. Subtrees are immutable and shared freely.
	 */
	class Bracketing
	{
	public:
		struct Node
		{
			int leaves; // number of leaves under this node
			std::shared_ptr<const Node> left, right; // both null for a leaf

			bool is_leaf() const { return !left; }
		};

		// Single proposition.
		static Bracketing leaf();

		// left => right.
		static Bracketing join(const Bracketing& left, const Bracketing& right);

		int leaf_count() const { return root_ ? root_->leaves : 0; }
		const Node& root() const { return *root_; }

	private:
		explicit Bracketing(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

		std::shared_ptr<const Node> root_;
	};

	// Fully parenthesised rendering, e.g. "(p1=>p2)=>p3". The outermost
	// arrow is left bare; every nested compound is wrapped.
	std::string to_string(const Bracketing& b);

	// Assignment of one chain element to each proposition, in order
	// p_1, ..., p_n.
	using Valuation = std::vector<TruthValue>;

	// Advance `v` to the next valuation in mixed-radix order with p_1 the
	// most significant digit (so the last proposition cycles fastest).
	// Returns false when the valuation wraps back to all-bottom.
	bool next_valuation(Valuation& v, int m);

	/**
	 * All bracketings of n propositions in canonical order: sorted by the
	 * size of the left subtree, ascending, then recursively by the same
	 * rule on both subtrees. The list has Catalan(n-1) entries; n above
	 * `cap` is refused with a resource-limit error naming the cap.
	 */
	std::vector<Bracketing> enumerate_bracketings(int n, int cap = default_bracketing_cap);

	// Evaluate one bracketing under one valuation. The valuation length
	// must equal the bracketing's leaf count.
	TruthValue evaluate(const Bracketing& b, const Valuation& v, const Chain& chain);

	// How many truth values of each level a batch of truth tables contains.
	struct CountVector
	{
		int n = 0; // number of propositions
		int m = 0; // chain size
		std::vector<BigInt> counts; // counts[j] = occurrences of v_j

		BigInt total() const;
	};

	/**
	 * Reference tally: evaluate every bracketing of n propositions under
	 * every one of the m^n valuations and count output levels directly.
	 * Work is Catalan(n-1) * m^n row evaluations; if that exceeds
	 * `budget`, a resource-limit error naming the budget is raised before
	 * any evaluation happens.
	 */
	CountVector brute_counts(const Chain& chain, int n,
		std::uint64_t budget = default_evaluation_budget);

	/**
	 * Output distribution of a single bracketing over all valuations,
	 * computed bottom-up: a leaf contributes one occurrence of every
	 * level, and an internal node combines child distributions through
	 * the implication table in O(m^2). Independent of brute_counts.
	 */
	CountVector distribution_dp(const Bracketing& b, const Chain& chain);

	/**
	 * Joint tally over root splits: entry [i][j] counts, across every
	 * bracketing of n >= 2 propositions and every valuation, the pairs
	 * (left subtree evaluates to v_i, right subtree evaluates to v_j).
	 * n = 1 has no root split and returns an all-zero matrix. Subject to
	 * the same evaluation budget as brute_counts.
	 */
	std::vector<std::vector<BigInt>> brute_pair_counts(const Chain& chain, int n,
		std::uint64_t budget = default_evaluation_budget);
}
#endif
