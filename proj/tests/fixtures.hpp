#ifndef GODELCAT_TESTS_FIXTURES_HPP
#define GODELCAT_TESTS_FIXTURES_HPP

// Frozen reference data for the four-element chain and friends. Exact
// integer sequences were computed independently (brute-force truth-table
// sweeps for small n, a separately coded big-integer recurrence for the
// rest) before the library existed; decimal constants were frozen from
// a high-precision prototype. Tests compare against these literals, the
// literals never against the library.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fixtures
{
	// ---- exact count sequences, m = 4, n = 1..10 -------------------------

	using Seq10 = std::array<std::uint64_t, 10>;

	// Output-level counts g_n^(j): index 0 = bottom ... 3 = top.
	inline const Seq10 g4_top{1, 10, 80, 825, 9355, 113237, 1431976, 18696855, 250122284, 3410617188};
	inline const Seq10 g4_b{1, 1, 11, 101, 1116, 13186, 164093, 2116676, 28052479, 379673121};
	inline const Seq10 g4_a{1, 2, 15, 143, 1559, 18379, 228175, 2938786, 38902987, 526061137};
	inline const Seq10 g4_bottom{1, 3, 22, 211, 2306, 27230, 338444, 4362627, 57788170, 781825066};

	// Row totals m^n * Catalan(n-1) and non-top counts.
	inline const Seq10 g4_total{4, 16, 128, 1280, 14336, 172032, 2162688, 28114944, 374865920, 5098176512};
	inline const Seq10 g4_non_top{3, 6, 48, 455, 4981, 58795, 730712, 9418089, 124743636, 1687559324};

	// Root-split pair counts N_n^(i,j); zero at n = 1. Levels are written
	// 0, a, b, 1. The table is symmetric in (i, j).
	inline const Seq10 p4_a0{0, 1, 5, 43, 443, 5046, 61209, 775277, 10134321, 135696192};
	inline const Seq10 p4_b0{0, 1, 4, 36, 367, 4178, 50613, 640554, 8368030, 111992206};
	inline const Seq10 p4_10{0, 1, 13, 132, 1496, 18006, 226622, 2946796, 39285819, 534136668};
	inline const Seq10 p4_ba{0, 1, 3, 28, 281, 3185, 38444, 485351, 6328829, 84580645};
	inline const Seq10 p4_1a{0, 1, 12, 115, 1278, 15194, 189731, 2453435, 32574158, 441480492};
	inline const Seq10 p4_1b{0, 1, 11, 101, 1116, 13186, 164093, 2116676, 28052479, 379673121};
	inline const Seq10 p4_00{0, 1, 6, 53, 554, 6362, 77580, 986253, 12927170, 173452334};
	inline const Seq10 p4_aa{0, 1, 4, 34, 346, 3915, 47284, 597085, 7787516, 104093243};
	inline const Seq10 p4_bb{0, 1, 2, 23, 224, 2555, 30826, 389311, 5077062, 67857384};
	inline const Seq10 p4_11{0, 1, 20, 260, 3250, 41610, 545574, 7306117, 99586900, 1377654903};

	// ---- shares, m = 4, six places ---------------------------------------

	struct ShareRow
	{
		int n;
		std::array<const char*, 4> shares; // bottom, a, b, top
	};

	inline const std::vector<ShareRow> shares4{
		{10, {"0.153354", "0.103186", "0.074472", "0.668988"}},
		{20, {"0.149830", "0.100597", "0.072869", "0.676705"}},
		{30, {"0.148687", "0.099760", "0.072343", "0.679210"}},
		{40, {"0.148121", "0.099347", "0.072082", "0.680450"}},
		{50, {"0.147783", "0.099100", "0.071926", "0.681191"}},
		{75, {"0.147335", "0.098774", "0.071718", "0.682173"}},
		{100, {"0.147112", "0.098611", "0.071615", "0.682662"}},
		{150, {"0.146890", "0.098449", "0.071511", "0.683150"}},
		{200, {"0.146779", "0.098368", "0.071460", "0.683394"}},
		{250, {"0.146712", "0.098320", "0.071429", "0.683540"}},
	};
	inline const std::array<const char*, 4> shares4_limit{
		"0.146447", "0.098126", "0.071305", "0.684122"};

	// ---- limiting top share, ten places ------------------------------------

	struct TopShare
	{
		int m;
		const char* p_top;
	};

	inline const std::vector<TopShare> top_small{
		{2, "0.7886751346"},
		{3, "0.7190479224"},
		{4, "0.6841222107"},
		{5, "0.6630699362"},
		{6, "0.6489761394"},
		{8, "0.6312738082"},
		{10, "0.6205979134"},
		{20, "0.5990962874"},
	};
	inline const std::vector<TopShare> top_large{
		{100, "0.5817218321"},
		{200, "0.5795375421"},
		{1000, "0.5777879655"},
		{10000, "0.5773940443"},
	};
	inline const char* inv_sqrt3_10 = "0.5773502692";

	// ---- full share vectors, six places -----------------------------------

	inline const std::array<const char*, 5> shares5_limit{
		"0.127322", "0.089600", "0.067242", "0.052766", "0.663070"};
	inline const std::array<const char*, 10> shares10_limit{
		"0.077423", "0.062152", "0.051275", "0.043214", "0.037050",
		"0.032213", "0.028338", "0.025177", "0.022560", "0.620598"};

	// ---- four-element chain, eighteen places --------------------------------

	inline const char* p_top4_18 = "0.684122210733017786";
	inline const char* p_non_top4_18 = "0.315877789266982214";

	// ---- truth-table fixtures, m = 4 ----------------------------------------
	//
	// Output symbols 0 < a < b < 1; rows sweep valuations with the first
	// proposition outermost and the last cycling fastest. Strings read
	// row-major through the sweep.

	// n = 2, the single bracketing p1=>p2 (16 outputs).
	inline const std::string outputs_n2 =
		"1111"
		"0111"
		"0a11"
		"0ab1";

	// n = 3, right-nested p1=>(p2=>p3) (64 outputs).
	inline const std::string outputs_n3_right =
		"1111111111111111"
		"1111011101110111"
		"111101110a110a11"
		"111101110a110ab1";

	// n = 3, left-nested (p1=>p2)=>p3 (64 outputs).
	inline const std::string outputs_n3_left =
		"0ab10ab10ab10ab1"
		"11110ab10ab10ab1"
		"111101110ab10ab1"
		"111101110a110ab1";

	// Level tallies (bottom, a, b, top) for the sweeps above.
	inline const std::array<std::uint64_t, 4> tally_n2{3, 2, 1, 10};
	inline const std::array<std::uint64_t, 4> tally_n3{22, 15, 11, 80};
}
#endif
