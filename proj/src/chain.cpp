#include <godelcat/chain.hpp>

#include <string>

namespace godelcat
{
	Chain::Chain(int m, int max_size)
	: m_(m)
	{
		if (m < 2)
			throw DomainError("chain needs at least 2 elements, got " + std::to_string(m));
		if (max_size < 2)
			throw DomainError("chain size cap must be at least 2, got " + std::to_string(max_size));
		if (m > max_size)
			throw ResourceLimitError(
				"chain of " + std::to_string(m) + " elements exceeds the size cap of "
				+ std::to_string(max_size));
	}

	TruthValue Chain::value(int j) const
	{
		if (j < 0 || j >= m_)
			throw DomainError(
				"no element with index " + std::to_string(j) + " in a chain of "
				+ std::to_string(m_));
		return TruthValue{j};
	}

	TruthValue goedel_implies(const Chain& chain, TruthValue x, TruthValue y)
	{
		if (!chain.contains(x) || !chain.contains(y))
			throw DomainError(
				"implication arguments (" + std::to_string(x.index) + ", "
				+ std::to_string(y.index) + ") outside a chain of "
				+ std::to_string(chain.size()));
		return x <= y ? chain.top() : y;
	}

	ImplicationTable::ImplicationTable(const Chain& chain)
	: m_(chain.size())
	, cells_((std::size_t)m_ * m_)
	{
		for (int x = 0; x < m_; ++x)
			for (int y = 0; y < m_; ++y)
				cells_[(std::size_t)x * m_ + y] =
					goedel_implies(chain, TruthValue{x}, TruthValue{y});
	}

	TruthValue ImplicationTable::at(TruthValue x, TruthValue y) const
	{
		if (x.index < 0 || x.index >= m_ || y.index < 0 || y.index >= m_)
			throw DomainError(
				"implication table lookup (" + std::to_string(x.index) + ", "
				+ std::to_string(y.index) + ") outside a chain of " + std::to_string(m_));
		return cells_[(std::size_t)x.index * m_ + y.index];
	}

	ImplicationTable implication_table(const Chain& chain)
	{
		return ImplicationTable(chain);
	}
}
