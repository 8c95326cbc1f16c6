#include <godelcat/table_io.hpp>

#include <algorithm>

namespace godelcat
{
	OutputFormat parse_format(const std::string& name)
	{
		if (name == "table")
			return OutputFormat::table;
		if (name == "csv")
			return OutputFormat::csv;
		if (name == "json")
			return OutputFormat::json;
		if (name == "bfile")
			return OutputFormat::bfile;
		throw UsageError("unknown format '" + name + "' (expected table, csv, json or bfile)");
	}

	std::string level_label(int m, int j)
	{
		if (j < 0 || j >= m)
			throw DomainError("level " + std::to_string(j) + " outside a chain of " + std::to_string(m));
		if (m == 4)
		{
			static const char* labels[] = {"0", "a", "b", "1"};
			return labels[j];
		}
		return std::to_string(j);
	}

	std::string sequence_label(int m, int j)
	{
		if (j < 0 || j >= m)
			throw DomainError("level " + std::to_string(j) + " outside a chain of " + std::to_string(m));
		if (m == 4)
		{
			static const char* labels[] = {"f", "a", "b", "t"};
			return labels[j];
		}
		return "g[" + std::to_string(j) + "]";
	}

	std::string pair_label(int m, int i, int j)
	{
		return "N[" + level_label(m, i) + "," + level_label(m, j) + "]";
	}

	std::vector<std::pair<int, int>> pair_display_order(int m)
	{
		std::vector<std::pair<int, int>> order;
		// Splits producing each non-top output level, lowest level first.
		for (int j = 0; j + 1 < m; ++j)
			for (int i = j + 1; i < m; ++i)
				order.emplace_back(i, j);
		// Splits producing the top output.
		for (int i = 0; i < m; ++i)
			for (int j = i; j < m; ++j)
				order.emplace_back(i, j);
		return order;
	}

	std::string render_table(const std::vector<std::string>& header,
		const std::vector<NamedRow>& rows)
	{
		// Column widths over header and every row.
		std::size_t columns = header.size();
		for (const NamedRow& r : rows)
			columns = std::max(columns, r.cells.size() + 1);
		std::vector<std::size_t> width(columns, 0);
		auto widen = [&](std::size_t c, const std::string& s)
		{
			width[c] = std::max(width[c], s.size());
		};
		for (std::size_t c = 0; c < header.size(); ++c)
			widen(c, header[c]);
		for (const NamedRow& r : rows)
		{
			widen(0, r.name);
			for (std::size_t c = 0; c < r.cells.size(); ++c)
				widen(c + 1, r.cells[c]);
		}

		std::string out;
		auto emit = [&](const std::string& name, const std::vector<std::string>& cells)
		{
			out += name;
			out.append(width[0] - name.size(), ' ');
			for (std::size_t c = 0; c < cells.size(); ++c)
			{
				out += "  ";
				out.append(width[c + 1] - cells[c].size(), ' ');
				out += cells[c];
			}
			out += "\n";
		};
		if (!header.empty())
			emit(header[0], std::vector<std::string>(header.begin() + 1, header.end()));
		for (const NamedRow& r : rows)
			emit(r.name, r.cells);
		return out;
	}

	static std::string join_csv(const std::vector<std::string>& cells)
	{
		std::string line;
		for (std::size_t i = 0; i < cells.size(); ++i)
		{
			if (i)
				line += ",";
			line += cells[i];
		}
		return line;
	}

	std::string render_csv(const std::vector<std::string>& header,
		const std::vector<std::vector<std::string>>& rows,
		const std::vector<std::string>& comments)
	{
		std::string out;
		for (const std::string& c : comments)
			out += "# " + c + "\n";
		out += join_csv(header) + "\n";
		for (const auto& r : rows)
			out += join_csv(r) + "\n";
		return out;
	}

	std::string render_bfile(const std::vector<BigInt>& seq)
	{
		std::string out;
		for (std::size_t n = 1; n < seq.size(); ++n)
			out += std::to_string(n) + " " + seq[n].str() + "\n";
		return out;
	}

	std::vector<NamedRow> counts_rows(const LevelCounts& lc, const PairCounts* pairs)
	{
		const int m = lc.m();
		const int n_max = lc.n_max();
		std::vector<NamedRow> rows;

		// Level sequences from the top of the chain down, then the total.
		for (int j = m - 1; j >= 0; --j)
		{
			NamedRow r{sequence_label(m, j), {}};
			for (int n = 1; n <= n_max; ++n)
				r.cells.push_back(lc.at(n, j).str());
			rows.push_back(std::move(r));
		}
		NamedRow total{"g", {}};
		for (int n = 1; n <= n_max; ++n)
			total.cells.push_back(lc.total(n).str());
		rows.push_back(std::move(total));

		if (pairs)
			for (auto [i, j] : pair_display_order(m))
			{
				NamedRow r{pair_label(m, i, j), {}};
				for (int n = 1; n <= n_max; ++n)
					r.cells.push_back(pairs->at(n, i, j).str());
				rows.push_back(std::move(r));
			}
		return rows;
	}

	std::vector<NamedRow> proportion_rows(const LevelCounts& lc,
		const std::vector<int>& ns, unsigned places, const CriticalData* limit)
	{
		std::vector<NamedRow> rows;
		for (int n : ns)
		{
			NamedRow r{std::to_string(n), proportions(lc, n, places).text()};
			rows.push_back(std::move(r));
		}
		if (limit)
		{
			NamedRow r{"limit", {}};
			for (int j = 0; j < limit->m; ++j)
				r.cells.push_back(format_fixed(limit->p[j], places));
			rows.push_back(std::move(r));
		}
		return rows;
	}

	std::string render_truth_table(const Bracketing& b, const Chain& chain)
	{
		const int n = b.leaf_count();
		const int m = chain.size();
		std::string out = to_string(b) + "\n";
		for (int i = 1; i <= n; ++i)
			out += "p" + std::to_string(i) + " ";
		out += " value\n";
		Valuation v(n, TruthValue{0});
		do
		{
			for (TruthValue x : v)
				out += level_label(m, x.index) + "  ";
			out += " " + level_label(m, evaluate(b, v, chain).index) + "\n";
		}
		while (next_valuation(v, m));
		return out;
	}

	std::string render_implication_table(const Chain& chain)
	{
		const int m = chain.size();
		ImplicationTable table(chain);
		std::vector<std::string> header{"=>"};
		for (int y = 0; y < m; ++y)
			header.push_back(level_label(m, y));
		std::vector<NamedRow> rows;
		for (int x = 0; x < m; ++x)
		{
			NamedRow r{level_label(m, x), {}};
			for (int y = 0; y < m; ++y)
				r.cells.push_back(level_label(m, table.at(TruthValue{x}, TruthValue{y}).index));
			rows.push_back(std::move(r));
		}
		return render_table(header, rows);
	}
}
