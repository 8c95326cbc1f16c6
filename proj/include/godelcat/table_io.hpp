#ifndef GODELCAT_TABLE_IO_HPP
#define GODELCAT_TABLE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <godelcat/analytic.hpp>
#include <godelcat/bracketing.hpp>
#include <godelcat/chain.hpp>
#include <godelcat/numeric.hpp>
#include <godelcat/sequences.hpp>

namespace godelcat
{
	enum class OutputFormat
	{
		table, // aligned human-readable columns
		csv, // header row, comma-separated, '#' comment lines for metadata
		json, // structured report, deterministic key order
		bfile // "n value" lines, sequence export only
	};

	// Parse a --format argument; unknown names are a usage error.
	OutputFormat parse_format(const std::string& name);

	// Display label of chain element j: the four-element chain uses the
	// traditional 0, a, b, 1; other sizes print the level index.
	std::string level_label(int m, int j);

	// Row name for the level-j count sequence ("t" for the top row of the
	// four-element chain, "g[j]" in general) and for a pair sequence.
	std::string sequence_label(int m, int j);
	std::string pair_label(int m, int i, int j);

	// Order in which pair sequences are displayed: for each non-top output
	// level j the splits (i, j) with i > j that produce it, then all
	// top-producing splits (i <= j) in lexicographic order.
	std::vector<std::pair<int, int>> pair_display_order(int m);

	// One labelled row of an output table.
	struct NamedRow
	{
		std::string name;
		std::vector<std::string> cells;
	};

	// Column-aligned text table. The header's first entry titles the row
	// name column.
	std::string render_table(const std::vector<std::string>& header,
		const std::vector<NamedRow>& rows);

	// CSV with optional '#' metadata lines above the header.
	std::string render_csv(const std::vector<std::string>& header,
		const std::vector<std::vector<std::string>>& rows,
		const std::vector<std::string>& comments = {});

	// OEIS-style b-file: one "n value" line per term, no header. seq[0]
	// is ignored; terms are seq[1..].
	std::string render_bfile(const std::vector<BigInt>& seq);

	// Count sequences as display rows, n ascending along the columns:
	// level rows from the top level down, the grand total, then pair rows
	// in display order when `pairs` is given.
	std::vector<NamedRow> counts_rows(const LevelCounts& lc, const PairCounts* pairs);

	// Proportion rows for the requested n values (round-half-up decimal
	// shares per level), with a final limit row from the critical table
	// when `limit` is given.
	std::vector<NamedRow> proportion_rows(const LevelCounts& lc,
		const std::vector<int>& ns, unsigned places, const CriticalData* limit);

	// Full truth table of one bracketing: a row per valuation, columns
	// p_1..p_n and the output, using level labels.
	std::string render_truth_table(const Bracketing& b, const Chain& chain);

	// The m-by-m implication table with row/column labels.
	std::string render_implication_table(const Chain& chain);
}
#endif
