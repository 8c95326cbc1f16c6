#include <godelcat/bracketing.hpp>

#include <godelcat/sequences.hpp>

namespace godelcat
{
	Bracketing Bracketing::leaf()
	{
		static const auto node = std::make_shared<const Node>(Node{1, nullptr, nullptr});
		return Bracketing(node);
	}

	Bracketing Bracketing::join(const Bracketing& left, const Bracketing& right)
	{
		if (!left.root_ || !right.root_)
			throw DomainError("cannot join an empty bracketing");
		return Bracketing(std::make_shared<const Node>(
			Node{left.leaf_count() + right.leaf_count(), left.root_, right.root_}));
	}

	static void render(const Bracketing::Node& node, int first_leaf, bool outermost,
		std::string& out)
	{
		if (node.is_leaf())
		{
			out += "p" + std::to_string(first_leaf + 1);
			return;
		}
		if (!outermost)
			out += "(";
		render(*node.left, first_leaf, false, out);
		out += "=>";
		render(*node.right, first_leaf + node.left->leaves, false, out);
		if (!outermost)
			out += ")";
	}

	std::string to_string(const Bracketing& b)
	{
		std::string out;
		render(b.root(), 0, true, out);
		return out;
	}

	bool next_valuation(Valuation& v, int m)
	{
		// Mixed-radix odometer, least significant digit last.
		for (auto it = v.rbegin(); it != v.rend(); ++it)
		{
			if (++it->index < m)
				return true;
			it->index = 0;
		}
		return false;
	}

	static std::vector<std::vector<Bracketing>> bracketings_up_to(int n)
	{
		std::vector<std::vector<Bracketing>> by_size(n + 1);
		if (n >= 1)
			by_size[1] = {Bracketing::leaf()};
		for (int size = 2; size <= n; ++size)
			for (int left = 1; left < size; ++left)
				for (const auto& l : by_size[left])
					for (const auto& r : by_size[size - left])
						by_size[size].push_back(Bracketing::join(l, r));
		return by_size;
	}

	std::vector<Bracketing> enumerate_bracketings(int n, int cap)
	{
		if (n < 1)
			throw DomainError("bracketings need at least one proposition, got " + std::to_string(n));
		if (n > cap)
			throw ResourceLimitError(
				"enumerating bracketings of " + std::to_string(n)
				+ " propositions exceeds the cap of " + std::to_string(cap)
				+ " (Catalan growth); raise the cap to proceed");
		return bracketings_up_to(n)[n];
	}

	static TruthValue evaluate_node(const Bracketing::Node& node, const Valuation& v,
		int first_leaf, const Chain& chain)
	{
		if (node.is_leaf())
			return v[first_leaf];
		TruthValue left = evaluate_node(*node.left, v, first_leaf, chain);
		TruthValue right = evaluate_node(*node.right, v, first_leaf + node.left->leaves, chain);
		return goedel_implies(chain, left, right);
	}

	TruthValue evaluate(const Bracketing& b, const Valuation& v, const Chain& chain)
	{
		if ((int)v.size() != b.leaf_count())
			throw DomainError(
				"valuation of " + std::to_string(v.size()) + " values does not fit a bracketing of "
				+ std::to_string(b.leaf_count()) + " propositions");
		for (TruthValue x : v)
			if (!chain.contains(x))
				throw DomainError("valuation contains index " + std::to_string(x.index)
					+ " outside a chain of " + std::to_string(chain.size()));
		return evaluate_node(b.root(), v, 0, chain);
	}

	BigInt CountVector::total() const
	{
		BigInt sum = 0;
		for (const BigInt& c : counts)
			sum += c;
		return sum;
	}

	// Work estimate for a full brute-force sweep: Catalan(n-1) * m^n rows.
	// Checked against the budget before any evaluation happens.
	static BigInt sweep_size(int m, int n)
	{
		BigInt rows = catalan(n - 1);
		for (int i = 0; i < n; ++i)
			rows *= m;
		return rows;
	}

	static void check_budget(const char* what, int m, int n, std::uint64_t budget)
	{
		BigInt rows = sweep_size(m, n);
		if (rows > BigInt(budget))
			throw ResourceLimitError(
				std::string(what) + " over " + std::to_string(n) + " propositions on a chain of "
				+ std::to_string(m) + " needs " + rows.str()
				+ " evaluations, over the budget of " + std::to_string(budget));
	}

	CountVector brute_counts(const Chain& chain, int n, std::uint64_t budget)
	{
		if (n < 1)
			throw DomainError("counts need at least one proposition, got " + std::to_string(n));
		check_budget("brute-force tally", chain.size(), n, budget);

		const int m = chain.size();
		// The enumeration cap does not apply here: the budget alone
		// limits brute-force work, and it already counts every tree.
		std::vector<Bracketing> all = enumerate_bracketings(n, n);
		std::vector<std::uint64_t> tally(m, 0);
		for (const Bracketing& b : all)
		{
			Valuation v(n, TruthValue{0});
			do
				++tally[evaluate(b, v, chain).index];
			while (next_valuation(v, m));
		}

		CountVector out;
		out.n = n;
		out.m = m;
		out.counts.assign(tally.begin(), tally.end());
		return out;
	}

	static std::vector<BigInt> distribution_node(const Bracketing::Node& node,
		const ImplicationTable& table)
	{
		const int m = table.size();
		if (node.is_leaf())
			return std::vector<BigInt>(m, 1);
		std::vector<BigInt> left = distribution_node(*node.left, table);
		std::vector<BigInt> right = distribution_node(*node.right, table);
		std::vector<BigInt> out(m, 0);
		for (int x = 0; x < m; ++x)
			for (int y = 0; y < m; ++y)
				out[table.at(TruthValue{x}, TruthValue{y}).index] += left[x] * right[y];
		return out;
	}

	CountVector distribution_dp(const Bracketing& b, const Chain& chain)
	{
		if (b.leaf_count() < 1)
			throw DomainError("cannot take the distribution of an empty bracketing");
		ImplicationTable table(chain);
		CountVector out;
		out.n = b.leaf_count();
		out.m = chain.size();
		out.counts = distribution_node(b.root(), table);
		return out;
	}

	std::vector<std::vector<BigInt>> brute_pair_counts(const Chain& chain, int n,
		std::uint64_t budget)
	{
		if (n < 1)
			throw DomainError("pair counts need at least one proposition, got " + std::to_string(n));
		const int m = chain.size();
		std::vector<std::vector<BigInt>> pairs(m, std::vector<BigInt>(m, 0));
		if (n == 1)
			return pairs; // a lone proposition has no root split

		check_budget("brute-force pair tally", m, n, budget);
		std::vector<std::uint64_t> tally((std::size_t)m * m, 0);
		for (const Bracketing& b : enumerate_bracketings(n, n))
		{
			const Bracketing::Node& root = b.root();
			const int left_leaves = root.left->leaves;
			Valuation v(n, TruthValue{0});
			do
			{
				TruthValue left = evaluate_node(*root.left, v, 0, chain);
				TruthValue right = evaluate_node(*root.right, v, left_leaves, chain);
				++tally[(std::size_t)left.index * m + right.index];
			}
			while (next_valuation(v, m));
		}
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j)
				pairs[i][j] = tally[(std::size_t)i * m + j];
		return pairs;
	}
}
