// Command-line frontend: exact counts, limiting shares, asymptotics and
// self-verification for implication truth tables on finite chains.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or resource
// error, 3 precision failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include <godelcat/analytic.hpp>
#include <godelcat/bracketing.hpp>
#include <godelcat/chain.hpp>
#include <godelcat/limit_law.hpp>
#include <godelcat/numeric.hpp>
#include <godelcat/sequences.hpp>
#include <godelcat/table_io.hpp>
#include <godelcat/verify.hpp>

using namespace godelcat;
using ordered_json = nlohmann::ordered_json;
using steady_clock = std::chrono::steady_clock;

namespace
{
	struct GlobalOptions
	{
		unsigned digits = 60;
		std::string format_name = "table";
		bool format_given = false; // export defaults to bfile unless --format was explicit
		std::uint64_t budget = default_evaluation_budget;
		steady_clock::time_point start = steady_clock::now();

		OutputFormat format() const { return parse_format(format_name); }

		long wall_ms() const
		{
			return std::chrono::duration_cast<std::chrono::milliseconds>(
				steady_clock::now() - start).count();
		}
	};

	// Assemble and print the fixed-shape JSON report.
	void emit_json(const GlobalOptions& g, const std::string& command,
		ordered_json m, ordered_json parameters, ordered_json data)
	{
		ordered_json report;
		report["command"] = command;
		report["m"] = std::move(m);
		report["parameters"] = std::move(parameters);
		report["data"] = std::move(data);
		report["digits"] = g.digits;
		report["wall_ms"] = g.wall_ms();
		std::cout << report.dump(2) << "\n";
	}

	// Reals in JSON reports: quoted to the working digits minus the ten
	// guard digits, as decimal strings.
	std::string json_real(const Real& x, const GlobalOptions& g)
	{
		return format_fixed(x, g.digits - 10);
	}

	// ---- counts ---------------------------------------------------------

	struct CountsOptions
	{
		int m = 0;
		int n = 0;
		bool pairs = false;
	};

	int run_counts(const CountsOptions& o, const GlobalOptions& g)
	{
		LevelCounts lc = level_counts(o.m, o.n);
		std::optional<PairCounts> pc;
		if (o.pairs)
			pc.emplace(lc);
		const PairCounts* pairs = pc ? &*pc : nullptr;

		switch (g.format())
		{
			case OutputFormat::table:
			{
				std::vector<std::string> header{"seq"};
				for (int n = 1; n <= o.n; ++n)
					header.push_back(std::to_string(n));
				std::cout << render_table(header, counts_rows(lc, pairs));
				return 0;
			}
			case OutputFormat::csv:
			{
				std::vector<std::vector<std::string>> rows;
				for (const NamedRow& r : counts_rows(lc, pairs))
					for (int n = 1; n <= o.n; ++n)
						rows.push_back({r.name, std::to_string(n), r.cells[n - 1]});
				std::cout << render_csv({"series", "n", "value"}, rows,
					{"m=" + std::to_string(o.m)});
				return 0;
			}
			case OutputFormat::json:
			{
				ordered_json levels = ordered_json::array();
				for (int n = 1; n <= o.n; ++n)
				{
					ordered_json row;
					row["n"] = n;
					ordered_json counts = ordered_json::array();
					for (int j = 0; j < o.m; ++j)
						counts.push_back(lc.at(n, j).str());
					row["counts"] = std::move(counts);
					row["total"] = lc.total(n).str();
					levels.push_back(std::move(row));
				}
				ordered_json data;
				data["levels"] = std::move(levels);
				if (pairs)
				{
					ordered_json out = ordered_json::array();
					for (auto [i, j] : pair_display_order(o.m))
					{
						ordered_json row;
						row["i"] = i;
						row["j"] = j;
						row["label"] = pair_label(o.m, i, j);
						ordered_json values = ordered_json::array();
						for (int n = 1; n <= o.n; ++n)
							values.push_back(pairs->at(n, i, j).str());
						row["values"] = std::move(values);
						out.push_back(std::move(row));
					}
					data["pairs"] = std::move(out);
				}
				ordered_json parameters;
				parameters["n"] = o.n;
				parameters["pairs"] = o.pairs;
				emit_json(g, "counts", o.m, std::move(parameters), std::move(data));
				return 0;
			}
			case OutputFormat::bfile:
				throw UsageError("bfile output is for `export`; pick a sequence with --level or --i/--j");
		}
		return 2;
	}

	// ---- proportions ------------------------------------------------------

	struct ProportionsOptions
	{
		int m = 0;
		std::vector<int> ns{10, 20, 30, 40, 50, 75, 100, 150, 200, 250};
		unsigned places = 6;
		bool limit_only = false;
		bool no_limit = false;
	};

	int run_proportions(const ProportionsOptions& o, const GlobalOptions& g)
	{
		if (o.limit_only && o.no_limit)
			throw UsageError("--limit-only and --no-limit exclude each other");

		CriticalData cd;
		const bool with_limit = !o.no_limit;
		if (with_limit)
			cd = critical_data(o.m, Precision{g.digits});

		std::vector<int> ns = o.limit_only ? std::vector<int>{} : o.ns;
		if (!o.limit_only && ns.empty())
			throw UsageError("no n values requested");
		int n_max = 1;
		for (int n : ns)
		{
			if (n < 1)
				throw DomainError("proportions need n >= 1, got " + std::to_string(n));
			n_max = std::max(n_max, n);
		}

		LevelCounts lc = level_counts(o.m, o.limit_only ? 1 : n_max);
		std::vector<NamedRow> rows = proportion_rows(lc, ns, o.places,
			with_limit ? &cd : nullptr);

		switch (g.format())
		{
			case OutputFormat::table:
			case OutputFormat::csv:
			{
				std::vector<std::string> header{"n"};
				for (int j = 0; j < o.m; ++j)
					header.push_back(level_label(o.m, j));
				if (g.format() == OutputFormat::table)
					std::cout << render_table(header, rows);
				else
				{
					std::vector<std::vector<std::string>> cells;
					for (const NamedRow& r : rows)
					{
						std::vector<std::string> line{r.name};
						line.insert(line.end(), r.cells.begin(), r.cells.end());
						cells.push_back(std::move(line));
					}
					std::cout << render_csv(header, cells, {"m=" + std::to_string(o.m)});
				}
				return 0;
			}
			case OutputFormat::json:
			{
				ordered_json out = ordered_json::array();
				for (int n : ns)
				{
					ordered_json row;
					row["n"] = n;
					row["shares"] = proportions(lc, n, o.places).text();
					out.push_back(std::move(row));
				}
				ordered_json data;
				data["rows"] = std::move(out);
				if (with_limit)
				{
					ordered_json limit = ordered_json::array();
					for (int j = 0; j < o.m; ++j)
						limit.push_back(format_fixed(cd.p[j], o.places));
					data["limit"] = std::move(limit);
				}
				ordered_json parameters;
				parameters["n"] = ns;
				parameters["places"] = o.places;
				parameters["limit"] = with_limit;
				emit_json(g, "proportions", o.m, std::move(parameters), std::move(data));
				return 0;
			}
			case OutputFormat::bfile:
				throw UsageError("bfile output is for `export`");
		}
		return 2;
	}

	// ---- limits -----------------------------------------------------------

	struct LimitsOptions
	{
		std::vector<int> ms{2, 3, 4, 5, 6, 8, 10, 20};
		bool full_vector = false;
		bool exact_radicals = false;
	};

	int run_limits(const LimitsOptions& o, const GlobalOptions& g)
	{
		Precision prec{g.digits};
		std::vector<CriticalData> tables;
		tables.reserve(o.ms.size());
		for (int m : o.ms)
			tables.push_back(critical_data(m, prec));

		Godel4Radicals radicals;
		if (o.exact_radicals)
			radicals = godel4_exact(prec);

		switch (g.format())
		{
			case OutputFormat::table:
			{
				std::vector<NamedRow> rows;
				for (const CriticalData& cd : tables)
					rows.push_back(NamedRow{std::to_string(cd.m),
						{format_fixed(cd.q[cd.m - 1], 10), format_fixed(cd.p[0], 10)}});
				std::cout << render_table({"m", "p_top", "p_bottom"}, rows);
				if (o.full_vector)
				{
					std::vector<NamedRow> vectors;
					for (const CriticalData& cd : tables)
					{
						NamedRow r{"p(" + std::to_string(cd.m) + ")", {}};
						for (int j = 0; j < cd.m; ++j)
							r.cells.push_back(format_fixed(cd.p[j], 6));
						vectors.push_back(std::move(r));
					}
					std::cout << "\n" << render_table({"shares"}, vectors);
				}
				if (o.exact_radicals)
				{
					std::vector<NamedRow> rows4;
					auto put = [&](const char* name, const Real& x)
					{
						rows4.push_back(NamedRow{name, {format_fixed(x, 18)}});
					};
					put("beta", radicals.beta);
					put("alpha", radicals.alpha);
					put("gamma", radicals.gamma);
					put("d0", radicals.d0);
					put("d1", radicals.d1);
					put("d2", radicals.d2);
					put("w1", radicals.w1);
					put("w2", radicals.w2);
					put("w3", radicals.w3);
					put("p_bottom", radicals.p_bottom);
					put("p_a", radicals.p_a);
					put("p_b", radicals.p_b);
					put("p_top", radicals.p_top);
					std::cout << "\n" << render_table({"radicals(m=4)"}, rows4);
				}
				return 0;
			}
			case OutputFormat::csv:
			{
				std::vector<std::vector<std::string>> rows;
				for (const CriticalData& cd : tables)
					rows.push_back({std::to_string(cd.m),
						format_fixed(cd.q[cd.m - 1], 10), format_fixed(cd.p[0], 10)});
				std::vector<std::string> comments;
				if (o.full_vector || o.exact_radicals)
					comments.push_back("full vectors and radicals are table/json only");
				std::cout << render_csv({"m", "p_top", "p_bottom"}, rows, comments);
				return 0;
			}
			case OutputFormat::json:
			{
				ordered_json out = ordered_json::array();
				for (const CriticalData& cd : tables)
				{
					ordered_json row;
					row["m"] = cd.m;
					row["p_top"] = json_real(cd.q[cd.m - 1], g);
					row["p_bottom"] = json_real(cd.p[0], g);
					if (o.full_vector)
					{
						ordered_json p = ordered_json::array();
						for (int j = 0; j < cd.m; ++j)
							p.push_back(json_real(cd.p[j], g));
						row["p"] = std::move(p);
					}
					out.push_back(std::move(row));
				}
				ordered_json data;
				data["rows"] = std::move(out);
				if (o.exact_radicals)
				{
					ordered_json r;
					r["beta"] = json_real(radicals.beta, g);
					r["alpha"] = json_real(radicals.alpha, g);
					r["gamma"] = json_real(radicals.gamma, g);
					r["d0"] = json_real(radicals.d0, g);
					r["d1"] = json_real(radicals.d1, g);
					r["d2"] = json_real(radicals.d2, g);
					r["w1"] = json_real(radicals.w1, g);
					r["w2"] = json_real(radicals.w2, g);
					r["w3"] = json_real(radicals.w3, g);
					r["p_bottom"] = json_real(radicals.p_bottom, g);
					r["p_a"] = json_real(radicals.p_a, g);
					r["p_b"] = json_real(radicals.p_b, g);
					r["p_top"] = json_real(radicals.p_top, g);
					data["radicals"] = std::move(r);
				}
				ordered_json parameters;
				parameters["full_vector"] = o.full_vector;
				parameters["exact_radicals"] = o.exact_radicals;
				emit_json(g, "limits", o.ms, std::move(parameters), std::move(data));
				return 0;
			}
			case OutputFormat::bfile:
				throw UsageError("bfile output is for `export`");
		}
		return 2;
	}

	// ---- verify -------------------------------------------------------------

	struct VerifyCliOptions
	{
		std::vector<int> ms{2, 3, 4, 5};
		int oracle_n = 6;
		int identity_n = 40;
	};

	int run_verify(const VerifyCliOptions& o, const GlobalOptions& g)
	{
		VerifyOptions opt;
		opt.ms = o.ms;
		opt.oracle_n = o.oracle_n;
		opt.identity_n = o.identity_n;
		opt.budget = g.budget;
		opt.digits = g.digits;
		std::vector<CheckResult> results = run_verification(opt);

		switch (g.format())
		{
			case OutputFormat::table:
				for (const CheckResult& r : results)
				{
					std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
					if (!r.pass)
						std::cout << ": " << r.detail;
					std::cout << "\n";
				}
				break;
			case OutputFormat::csv:
			{
				std::vector<std::vector<std::string>> rows;
				for (const CheckResult& r : results)
					rows.push_back({r.name, r.pass ? "pass" : "fail", r.detail});
				std::cout << render_csv({"check", "result", "detail"}, rows);
				break;
			}
			case OutputFormat::json:
			{
				ordered_json checks = ordered_json::array();
				for (const CheckResult& r : results)
				{
					ordered_json row;
					row["name"] = r.name;
					row["pass"] = r.pass;
					row["detail"] = r.detail;
					checks.push_back(std::move(row));
				}
				ordered_json data;
				data["checks"] = std::move(checks);
				data["all_passed"] = all_passed(results);
				ordered_json parameters;
				parameters["oracle_n"] = o.oracle_n;
				parameters["identity_n"] = o.identity_n;
				parameters["budget"] = g.budget;
				emit_json(g, "verify", o.ms, std::move(parameters), std::move(data));
				break;
			}
			case OutputFormat::bfile:
				throw UsageError("bfile output is for `export`");
		}
		return all_passed(results) ? 0 : 1;
	}

	// ---- limit-law ------------------------------------------------------------

	struct LimitLawOptions
	{
		std::vector<double> ts{0.25, 0.5, 0.75};
		std::vector<int> ladder{100, 400, 1600};
	};

	int run_limit_law(const LimitLawOptions& o, const GlobalOptions& g)
	{
		Precision prec{g.digits};
		LimitMeasure lm = limit_measure(prec);
		Real mean_quad = mean_by_quadrature(prec);
		Real mass_quad = mass_by_quadrature(prec);

		std::vector<CriticalData> tables;
		for (int m : o.ladder)
			tables.push_back(critical_data(m, prec));

		const unsigned places = 15;
		auto cut_of = [&](const CriticalData& cd, double t)
		{
			PrecisionGuard guard(prec);
			Real pos = floor(Real(t) * (cd.m - 1));
			long k = pos.convert_to<long>();
			return cd.q[std::min<long>(k, cd.m - 1)];
		};

		switch (g.format())
		{
			case OutputFormat::table:
			{
				PrecisionGuard guard(prec);
				std::vector<std::string> header{"t", "survival"};
				for (int m : o.ladder)
				{
					header.push_back("cut@" + std::to_string(m));
					header.push_back("gap@" + std::to_string(m));
				}
				std::vector<NamedRow> rows;
				for (double t : o.ts)
				{
					Real tv(t);
					NamedRow r{format_fixed(tv, 4), {format_fixed(survival(tv), places)}};
					for (const CriticalData& cd : tables)
					{
						Real cut = cut_of(cd, t);
						r.cells.push_back(format_fixed(cut, places));
						r.cells.push_back(format_fixed(abs(cut - survival(tv)), places));
					}
					rows.push_back(std::move(r));
				}
				std::cout << render_table(header, rows);

				std::vector<NamedRow> summary;
				summary.push_back(NamedRow{"mean_closed", {format_fixed(lm.mean, places)}});
				summary.push_back(NamedRow{"mean_quadrature", {format_fixed(mean_quad, places)}});
				summary.push_back(NamedRow{"mean_gap", {format_fixed(abs(mean_quad - lm.mean), places)}});
				summary.push_back(NamedRow{"mass_quadrature", {format_fixed(mass_quad, places)}});
				summary.push_back(NamedRow{"mass_gap", {format_fixed(abs(mass_quad - 1), places)}});
				summary.push_back(NamedRow{"atom", {format_fixed(lm.atom, places)}});
				for (const CriticalData& cd : tables)
					summary.push_back(NamedRow{"atom_gap@" + std::to_string(cd.m),
						{format_fixed(abs(cd.q[cd.m - 1] - lm.atom), places)}});
				std::cout << "\n" << render_table({"summary"}, summary);
				return 0;
			}
			case OutputFormat::csv:
			{
				PrecisionGuard guard(prec);
				std::vector<std::string> header{"t", "survival"};
				for (int m : o.ladder)
				{
					header.push_back("cut_" + std::to_string(m));
					header.push_back("gap_" + std::to_string(m));
				}
				std::vector<std::vector<std::string>> rows;
				for (double t : o.ts)
				{
					Real tv(t);
					std::vector<std::string> r{format_fixed(tv, 4),
						format_fixed(survival(tv), places)};
					for (const CriticalData& cd : tables)
					{
						Real cut = cut_of(cd, t);
						r.push_back(format_fixed(cut, places));
						r.push_back(format_fixed(abs(cut - survival(tv)), places));
					}
					rows.push_back(std::move(r));
				}
				std::cout << render_csv(header, rows,
					{"mean_closed=" + format_fixed(lm.mean, places),
					 "mean_quadrature=" + format_fixed(mean_quad, places),
					 "mass_quadrature=" + format_fixed(mass_quad, places),
					 "atom=" + format_fixed(lm.atom, places)});
				return 0;
			}
			case OutputFormat::json:
			{
				PrecisionGuard guard(prec);
				ordered_json cuts = ordered_json::array();
				for (double t : o.ts)
				{
					Real tv(t);
					ordered_json row;
					row["t"] = format_fixed(tv, 4);
					row["survival"] = json_real(survival(tv), g);
					ordered_json per_m = ordered_json::array();
					for (const CriticalData& cd : tables)
					{
						ordered_json cell;
						cell["m"] = cd.m;
						Real cut = cut_of(cd, t);
						cell["cut"] = json_real(cut, g);
						cell["gap"] = json_real(abs(cut - survival(tv)), g);
						per_m.push_back(std::move(cell));
					}
					row["approximants"] = std::move(per_m);
					cuts.push_back(std::move(row));
				}
				ordered_json data;
				data["cuts"] = std::move(cuts);
				data["mean_closed"] = json_real(lm.mean, g);
				data["mean_quadrature"] = json_real(mean_quad, g);
				data["mass_quadrature"] = json_real(mass_quad, g);
				data["atom"] = json_real(lm.atom, g);
				ordered_json atoms = ordered_json::array();
				for (const CriticalData& cd : tables)
				{
					ordered_json cell;
					cell["m"] = cd.m;
					cell["p_top"] = json_real(cd.q[cd.m - 1], g);
					cell["gap"] = json_real(abs(cd.q[cd.m - 1] - lm.atom), g);
					atoms.push_back(std::move(cell));
				}
				data["atom_ladder"] = std::move(atoms);
				ordered_json parameters;
				parameters["t"] = o.ts;
				parameters["m_ladder"] = o.ladder;
				emit_json(g, "limit-law", o.ladder, std::move(parameters), std::move(data));
				return 0;
			}
			case OutputFormat::bfile:
				throw UsageError("bfile output is for `export`");
		}
		return 2;
	}

	// ---- export ----------------------------------------------------------------

	struct ExportOptions
	{
		int m = 0;
		int n = 0;
		int level = -1;
		int i = -1, j = -1;
		bool level_given = false, i_given = false, j_given = false;
	};

	int run_export(const ExportOptions& o, const GlobalOptions& g)
	{
		const bool pair_given = o.i_given || o.j_given;
		if (o.level_given == pair_given)
			throw UsageError("pick exactly one sequence: --level J, or --i I --j J");
		if (pair_given && (!o.i_given || !o.j_given))
			throw UsageError("a pair sequence needs both --i and --j");

		LevelCounts lc = level_counts(o.m, o.n);
		std::vector<BigInt> seq;
		std::string selector, generator;
		if (o.level_given)
		{
			if (o.level < 0 || o.level >= o.m)
				throw DomainError("level " + std::to_string(o.level) + " outside a chain of "
					+ std::to_string(o.m));
			seq.assign(o.n + 1, 0);
			for (int n = 1; n <= o.n; ++n)
				seq[n] = lc.at(n, o.level);
			selector = "level " + std::to_string(o.level);
			generator = "split recurrence over tail sums; top level by complement";
		}
		else
		{
			seq = pair_sequence(lc, o.i, o.j);
			selector = "pair (" + std::to_string(o.i) + "," + std::to_string(o.j) + ")";
			generator = "N[i,j](x) = G_i(x) * G_j(x)";
		}

		// Unless the caller asked for something else, sequences export as
		// b-file text.
		OutputFormat fmt = g.format_given ? g.format() : OutputFormat::bfile;
		switch (fmt)
		{
			case OutputFormat::bfile:
				std::cout << render_bfile(seq);
				return 0;
			case OutputFormat::csv:
			{
				std::vector<std::vector<std::string>> rows;
				for (int n = 1; n <= o.n; ++n)
					rows.push_back({std::to_string(n), seq[n].str()});
				std::cout << render_csv({"n", "value"}, rows,
					{"m=" + std::to_string(o.m), "selector=" + selector,
					 "generator=" + generator});
				return 0;
			}
			case OutputFormat::json:
			{
				ordered_json values = ordered_json::array();
				for (int n = 1; n <= o.n; ++n)
					values.push_back(seq[n].str());
				ordered_json data;
				data["values"] = std::move(values);
				ordered_json parameters;
				parameters["n"] = o.n;
				parameters["selector"] = selector;
				parameters["generator"] = generator;
				emit_json(g, "export", o.m, std::move(parameters), std::move(data));
				return 0;
			}
			case OutputFormat::table:
				throw UsageError("export emits bfile, csv or json");
		}
		return 2;
	}

	// ---- seed-tables --------------------------------------------------------------

	struct SeedOptions
	{
		std::string out = "docs";
	};

	int run_seed_tables(const SeedOptions& o, const GlobalOptions& g)
	{
		namespace fs = std::filesystem;
		fs::create_directories(o.out);
		Precision prec{g.digits};

		auto write = [&](const std::string& name, const std::string& text)
		{
			fs::path path = fs::path(o.out) / name;
			std::ofstream out(path);
			if (!out)
				throw Error("cannot write " + path.string());
			out << text;
			std::cout << "wrote " << path.string() << "\n";
		};

		Chain four(4);
		write("implication-4.txt", render_implication_table(four));

		// Truth tables for every bracketing on two and three propositions.
		{
			std::string text;
			for (const Bracketing& b : enumerate_bracketings(2))
				text += render_truth_table(b, four);
			write("truth-tables-n2-4.txt", text);
			text.clear();
			for (const Bracketing& b : enumerate_bracketings(3))
			{
				if (!text.empty())
					text += "\n";
				text += render_truth_table(b, four);
			}
			write("truth-tables-n3-4.txt", text);
		}

		// Count sequences with pair refinement, n = 1..10.
		{
			LevelCounts lc = level_counts(4, 10);
			PairCounts pc = pair_counts(lc);
			std::vector<std::string> header{"seq"};
			for (int n = 1; n <= 10; ++n)
				header.push_back(std::to_string(n));
			write("sequences-4.txt", render_table(header, counts_rows(lc, &pc)));
		}

		// Finite-n shares against the limit.
		{
			std::vector<int> ns{10, 20, 30, 40, 50, 75, 100, 150, 200, 250};
			LevelCounts lc = level_counts(4, 250);
			CriticalData cd = critical_data(4, prec);
			std::vector<std::string> header{"n", "0", "a", "b", "1"};
			write("proportions-4.txt", render_table(header, proportion_rows(lc, ns, 6, &cd)));
		}

		// Top-level share for small and large chains.
		{
			PrecisionGuard guard(prec);
			std::vector<NamedRow> rows;
			for (int m : {2, 3, 4, 5, 6, 8, 10, 20})
				rows.push_back(NamedRow{std::to_string(m), {format_fixed(p_top(m, prec), 10)}});
			write("top-share-small.txt", render_table({"m", "p_top"}, rows));
			rows.clear();
			for (int m : {100, 200, 1000, 10000})
				rows.push_back(NamedRow{std::to_string(m), {format_fixed(p_top(m, prec), 10)}});
			rows.push_back(NamedRow{"limit", {format_fixed(1 / sqrt(Real(3)), 10)}});
			write("top-share-large.txt", render_table({"m", "p_top"}, rows));
		}

		// Full share vectors for two mid-sized chains.
		for (int m : {5, 10})
		{
			CriticalData cd = critical_data(m, prec);
			PrecisionGuard guard(prec);
			std::vector<NamedRow> rows;
			for (int j = 0; j < m; ++j)
				rows.push_back(NamedRow{"p[" + std::to_string(j) + "]",
					{format_fixed(cd.p[j], 6)}});
			write("shares-" + std::to_string(m) + ".txt",
				render_table({"level", "share"}, rows));
		}

		// Exact radicals of the four-element chain.
		{
			Godel4Radicals r = godel4_exact(prec);
			PrecisionGuard guard(prec);
			std::vector<NamedRow> rows;
			auto put = [&](const char* name, const Real& x)
			{
				rows.push_back(NamedRow{name, {format_fixed(x, 18)}});
			};
			put("beta", r.beta);
			put("alpha", r.alpha);
			put("gamma", r.gamma);
			put("d0", r.d0);
			put("d1", r.d1);
			put("d2", r.d2);
			put("w1", r.w1);
			put("w2", r.w2);
			put("w3", r.w3);
			put("p_bottom", r.p_bottom);
			put("p_a", r.p_a);
			put("p_b", r.p_b);
			put("p_top", r.p_top);
			write("exact-radicals-4.txt", render_table({"radicals(m=4)"}, rows));
		}

		// Limit-law summary: survival vs finite-m cuts, moments, atom.
		{
			LimitMeasure lm = limit_measure(prec);
			Real mean_quad = mean_by_quadrature(prec);
			Real mass_quad = mass_by_quadrature(prec);
			PrecisionGuard guard(prec);
			std::vector<NamedRow> rows;
			for (double t : {0.0, 0.25, 0.5, 0.75})
				rows.push_back(NamedRow{"survival(" + format_fixed(Real(t), 2) + ")",
					{format_fixed(survival(Real(t)), 15)}});
			rows.push_back(NamedRow{"atom", {format_fixed(lm.atom, 15)}});
			rows.push_back(NamedRow{"mean_closed", {format_fixed(lm.mean, 15)}});
			rows.push_back(NamedRow{"mean_quadrature", {format_fixed(mean_quad, 15)}});
			rows.push_back(NamedRow{"mass_quadrature", {format_fixed(mass_quad, 15)}});
			write("limit-law.txt", render_table({"quantity", "value"}, rows));
		}
		return 0;
	}
}

int main(int argc, char** argv)
{
	GlobalOptions global;
	CLI::App app{"Truth-table statistics of chained implications: exact counts, "
		"limiting shares, and the scaled limit law"};
	app.require_subcommand(1);
	app.add_option("--digits", global.digits, "working precision in decimal digits")
		->capture_default_str();
	auto* format_opt = app.add_option("--format", global.format_name,
		"output format: table, csv, json, bfile")->capture_default_str();
	app.add_option("--budget", global.budget,
		"brute-force evaluation budget (truth table rows)")->capture_default_str();

	CountsOptions counts_opts;
	auto* counts_cmd = app.add_subcommand("counts",
		"exact output-level counts for n = 1..n_max");
	counts_cmd->fallthrough();
	counts_cmd->add_option("--m", counts_opts.m, "chain size")->required();
	counts_cmd->add_option("--n", counts_opts.n, "largest number of propositions")->required();
	counts_cmd->add_flag("--pairs", counts_opts.pairs, "include root-split pair sequences");

	ProportionsOptions prop_opts;
	auto* prop_cmd = app.add_subcommand("proportions",
		"per-level output shares at chosen n, with the limiting row");
	prop_cmd->fallthrough();
	prop_cmd->add_option("--m", prop_opts.m, "chain size")->required();
	prop_cmd->add_option("--n", prop_opts.ns, "n values (comma separated)")
		->delimiter(',')->capture_default_str();
	prop_cmd->add_option("--places", prop_opts.places, "decimal places")->capture_default_str();
	prop_cmd->add_flag("--limit-only", prop_opts.limit_only, "print only the limiting row");
	prop_cmd->add_flag("--no-limit", prop_opts.no_limit, "omit the limiting row");

	LimitsOptions limits_opts;
	auto* limits_cmd = app.add_subcommand("limits",
		"limiting level shares per chain size");
	limits_cmd->fallthrough();
	limits_cmd->add_option("--m", limits_opts.ms, "chain sizes (comma separated)")
		->delimiter(',')->capture_default_str();
	limits_cmd->add_flag("--full-vector", limits_opts.full_vector, "print the whole share vector");
	limits_cmd->add_flag("--exact-radicals", limits_opts.exact_radicals,
		"print the nested-radical forms for the four-element chain");

	VerifyCliOptions verify_opts;
	auto* verify_cmd = app.add_subcommand("verify",
		"cross-check the recurrence engine against brute force and exact identities");
	verify_cmd->fallthrough();
	verify_cmd->add_option("--m", verify_opts.ms, "chain sizes (comma separated)")
		->delimiter(',')->capture_default_str();
	verify_cmd->add_option("--n", verify_opts.oracle_n, "brute-force comparison depth")
		->capture_default_str();
	verify_cmd->add_option("--identities-n", verify_opts.identity_n, "exact-identity depth")
		->capture_default_str();

	LimitLawOptions law_opts;
	auto* law_cmd = app.add_subcommand("limit-law",
		"limit distribution of the scaled output level: cuts, moments, atom");
	law_cmd->fallthrough();
	law_cmd->add_option("--t", law_opts.ts, "cut positions in [0, 1] (comma separated)")
		->delimiter(',')->capture_default_str();
	law_cmd->add_option("--m-ladder", law_opts.ladder, "chain sizes (comma separated)")
		->delimiter(',')->capture_default_str();

	ExportOptions export_opts;
	auto* export_cmd = app.add_subcommand("export",
		"one count sequence as b-file, csv or json");
	export_cmd->fallthrough();
	export_cmd->add_option("--m", export_opts.m, "chain size")->required();
	export_cmd->add_option("--n", export_opts.n, "largest n")->required();
	auto* level_opt = export_cmd->add_option("--level", export_opts.level, "output level j");
	auto* i_opt = export_cmd->add_option("--i", export_opts.i, "left level of a pair sequence");
	auto* j_opt = export_cmd->add_option("--j", export_opts.j, "right level of a pair sequence");

	SeedOptions seed_opts;
	auto* seed_cmd = app.add_subcommand("seed-tables",
		"regenerate the reference tables under a docs directory");
	seed_cmd->fallthrough();
	seed_cmd->add_option("--out", seed_opts.out, "output directory")->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	global.format_given = format_opt->count() > 0;
	export_opts.level_given = level_opt->count() > 0;
	export_opts.i_given = i_opt->count() > 0;
	export_opts.j_given = j_opt->count() > 0;

	try
	{
		if (*counts_cmd)
			return run_counts(counts_opts, global);
		if (*prop_cmd)
			return run_proportions(prop_opts, global);
		if (*limits_cmd)
			return run_limits(limits_opts, global);
		if (*verify_cmd)
			return run_verify(verify_opts, global);
		if (*law_cmd)
			return run_limit_law(law_opts, global);
		if (*export_cmd)
			return run_export(export_opts, global);
		if (*seed_cmd)
			return run_seed_tables(seed_opts, global);
		std::cerr << "error: no command selected\n";
		return 2;
	}
	catch (const UsageError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const PrecisionError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch (const ResourceLimitError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const DomainError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
