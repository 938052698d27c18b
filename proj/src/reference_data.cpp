#include "crr/reference_data.hpp"
#include <array>
#include <stdexcept>

namespace crr::golden {
namespace {

int idx(AffineType t) { return static_cast<int>(t); }

std::vector<Coeffs> decode(const std::vector<const char*>& enc) {
    std::vector<Coeffs> out;
    out.reserve(enc.size());
    for (const char* s : enc) {
        Coeffs a;
        for (const char* p = s; *p; ++p) a.push_back(*p - '0');
        out.push_back(std::move(a));
    }
    return out;
}

const std::vector<const char*> kLong_G2_1 = {
    "10", "13", "23"
};
const std::vector<const char*> kShort_G2_1 = {
    "01", "11", "12"
};
const std::vector<const char*> kLong_D4_3 = {
    "01", "31", "32"
};
const std::vector<const char*> kShort_D4_3 = {
    "10", "11", "21"
};
const std::vector<const char*> kLong_F4_1 = {
    "1000", "0100", "1100", "0120", "1120", "1220", "0122", "1122", "1222", "1242", "1342",
    "2342"
};
const std::vector<const char*> kShort_F4_1 = {
    "0010", "0110", "1110", "1232", "0001", "0011", "0111", "0121", "1111", "1121", "1221",
    "1231"
};
const std::vector<const char*> kLong_E6_2 = {
    "0001", "0010", "0011", "0210", "0211", "0221", "2210", "2211", "2221", "2421", "2431",
    "2432"
};
const std::vector<const char*> kShort_E6_2 = {
    "0100", "0110", "0111", "2321", "1000", "1100", "1110", "1210", "1111", "1211", "1221",
    "1321"
};
const std::vector<const char*> kLong_E6_1 = {
    "100000", "010000", "001000", "000100", "000010", "000001", "101000", "010100", "001100",
    "000110", "000011", "101100", "011100", "010110", "001110", "000111", "111100", "101110",
    "011110", "010111", "001111", "111110", "101111", "011210", "011111", "111210", "111111",
    "011211", "112210", "111211", "011221", "112211", "111221", "112221", "112321", "122321"
};
const std::vector<const char*> kShort_E6_1 = {
};
const std::vector<const char*> kLong_E7_1 = {
    "1000000", "0100000", "0010000", "0001000", "0000100", "0000010", "0000001", "1010000",
    "0101000", "0011000", "0001100", "0000110", "0000011", "1011000", "0111000", "0101100",
    "0011100", "0001110", "0000111", "1111000", "1011100", "0111100", "0101110", "0011110",
    "0001111", "1111100", "1011110", "0112100", "0111110", "0101111", "0011111", "1112100",
    "1111110", "1011111", "0112110", "0111111", "1122100", "1112110", "1111111", "0112210",
    "0112111", "1122110", "1112210", "1112111", "0112211", "1122210", "1122111", "1112211",
    "0112221", "1123210", "1122211", "1112221", "1223210", "1123211", "1122221", "1223211",
    "1123221", "1223221", "1123321", "1223321", "1224321", "1234321", "2234321"
};
const std::vector<const char*> kShort_E7_1 = {
};
const std::vector<const char*> kLong_E8_1 = {
    "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010",
    "00000001", "10100000", "01010000", "00110000", "00011000", "00001100", "00000110",
    "00000011", "10110000", "01110000", "01011000", "00111000", "00011100", "00001110",
    "00000111", "11110000", "10111000", "01111000", "01011100", "00111100", "00011110",
    "00001111", "11111000", "10111100", "01121000", "01111100", "01011110", "00111110",
    "00011111", "11121000", "11111100", "10111110", "01121100", "01111110", "01011111",
    "00111111", "11221000", "11121100", "11111110", "10111111", "01122100", "01121110",
    "01111111", "11221100", "11122100", "11121110", "11111111", "01122110", "01121111",
    "11222100", "11221110", "11122110", "11121111", "01122210", "01122111", "11232100",
    "11222110", "11221111", "11122210", "11122111", "01122211", "12232100", "11232110",
    "11222210", "11222111", "11122211", "01122221", "12232110", "11232210", "11232111",
    "11222211", "11122221", "12232210", "12232111", "11233210", "11232211", "11222221",
    "12233210", "12232211", "11233211", "11232221", "12243210", "12233211", "12232221",
    "11233221", "12343210", "12243211", "12233221", "11233321", "22343210", "12343211",
    "12243221", "12233321", "22343211", "12343221", "12243321", "22343221", "12343321",
    "12244321", "22343321", "12344321", "22344321", "12354321", "22354321", "13354321",
    "23354321", "22454321", "23454321", "23464321", "23465321", "23465421", "23465431",
    "23465432"
};
const std::vector<const char*> kShort_E8_1 = {
};
const std::vector<long long> kCoeffs_G2_1 = {
    1, 1, 1, 1, 2, 4, 5, 5, 6, 7, 10, 15, 18, 20, 23, 27, 35, 47, 56, 63, 73, 85, 105, 133,
    156, 177, 203, 235, 282, 343, 399, 452, 516, 593, 698, 829, 954, 1079, 1225, 1398, 1622,
    1892, 2161, 2436, 2753, 3123, 3583, 4126, 4680, 5258, 5914, 6672, 7588, 8650, 9755, 10920,
    12232, 13732, 15506, 17537
};
const std::vector<long long> kCoeffs_D4_3 = {
    1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14, 17, 19, 23, 30, 36, 41, 49, 61, 72, 82, 97, 119, 139,
    158, 184, 220, 256, 291, 337, 397, 457, 518, 596, 695, 796, 899, 1027, 1186, 1351, 1523,
    1731, 1982, 2246, 2524, 2856, 3252, 3669, 4111, 4630, 5240, 5891, 6584, 7389, 8322, 9319,
    10388, 11618, 13032
};
const std::vector<long long> kCoeffs_F4_1 = {
    1, 1, 1, 1, 2, 2, 3, 4, 4, 5, 6, 9, 11, 12, 14, 16, 20, 23, 28, 33, 37, 43, 50, 62, 72, 81,
    92, 105, 123, 140, 162, 186, 209, 237, 270, 314, 357, 400, 450, 507, 576, 648, 733, 825,
    921, 1031, 1157, 1310, 1467, 1632, 1817, 2025, 2265, 2521, 2812, 3129, 3466, 3843, 4266,
    4754
};
const std::vector<long long> kCoeffs_E6_2 = {
    1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 19, 22, 25, 28, 32, 38, 43, 50, 56,
    65, 74, 84, 95, 107, 122, 136, 154, 173, 198, 222, 248, 276, 308, 347, 386, 432, 479, 536,
    596, 662, 734, 813, 903, 996, 1103, 1218, 1352, 1492, 1643, 1807, 1988, 2193, 2409
};
const std::vector<long long> kCoeffs_E6_1 = {
    1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14, 17, 19, 23, 30, 36, 41, 49, 61, 72, 82, 97, 119, 139,
    158, 184, 220, 256, 291, 337, 397, 457, 518, 596, 695, 796, 899, 1027, 1186, 1351, 1523,
    1731, 1982, 2246, 2524, 2856, 3252, 3669, 4111, 4630, 5240, 5891, 6584, 7389, 8322, 9319,
    10388, 11618, 13032
};
const std::vector<long long> kCoeffs_E7_1 = {
    1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 19, 22, 25, 28, 32, 38, 43, 50, 56,
    65, 74, 84, 95, 107, 122, 136, 154, 173, 198, 222, 248, 276, 308, 347, 386, 432, 479, 536,
    596, 662, 734, 813, 903, 996, 1103, 1218, 1352, 1492, 1643, 1807, 1988, 2193, 2409
};
const std::vector<long long> kCoeffs_E8_1 = {
    1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 5, 5, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 17, 18, 20,
    22, 26, 29, 31, 34, 37, 40, 44, 50, 54, 58, 63, 70, 76, 84, 92, 99, 106, 116, 127, 138,
    150, 162, 175, 189, 206, 222, 240, 258, 278, 300, 328
};
const std::vector<std::vector<std::string>> kCcon_G2_1 = {
    {"phi", "r1", "r2"},
    {"+23", "-01", "-10"},
    {"+13", "-11"},
    {"+12", "-12"},
    {"+11", "-13"},
    {"+01", "+10", "-23"}
};
const std::vector<std::vector<std::string>> kCcon_D4_3 = {
    {"phi", "r1"},
    {"+21", "-10"},
    {"+11", "-11"},
    {"+10", "-21"}
};
const std::vector<std::vector<std::string>> kCcon_F4_1 = {
    {"phi", "r1", "r2", "r3", "r4"},
    {"+2342", "-0001", "-0010", "-0100", "-1000"},
    {"+1342", "-0011", "-0110", "-1100"},
    {"+1242", "-0111", "-0120", "-1110"},
    {"+1232", "-0121", "-1111", "-1120"},
    {"+1222", "+1231", "-0122", "-1121", "-1220"},
    {"+1122", "+1221", "-1122", "-1221"},
    {"+0122", "+1121", "+1220", "-1222", "-1231"},
    {"+0121", "+1111", "+1120", "-1232"},
    {"+0111", "+0120", "+1110", "-1242"},
    {"+0011", "+0110", "+1100", "-1342"},
    {"+0001", "+0010", "+0100", "+1000", "-2342"}
};
const std::vector<std::vector<std::string>> kCcon_E6_2 = {
    {"phi", "r1", "r2"},
    {"+2321", "-0100", "-1000"},
    {"+1321", "-0110", "-1100"},
    {"+1221", "-0111", "-1110"},
    {"+1211", "-1111", "-1210"},
    {"+1111", "+1210", "-1211"},
    {"+0111", "+1110", "-1221"},
    {"+0110", "+1100", "-1321"},
    {"+0100", "+1000", "-2321"}
};
const std::vector<std::vector<std::string>> kCcon_E6_1 = {
    {"phi", "r1", "r2", "r3", "r4", "r5", "r6"},
    {"+122321", "-000001", "-000010", "-000100", "-001000", "-010000", "-100000"},
    {"+112321", "-000011", "-000110", "-001100", "-010100", "-101000"},
    {"+112221", "-000111", "-001110", "-010110", "-011100", "-101100"},
    {"+111221", "+112211", "-001111", "-010111", "-011110", "-101110", "-111100"},
    {"+011221", "+111211", "+112210", "-011111", "-011210", "-101111", "-111110"},
    {"+011211", "+111111", "+111210", "-011211", "-111111", "-111210"},
    {"+011111", "+011210", "+101111", "+111110", "-011221", "-111211", "-112210"},
    {"+001111", "+010111", "+011110", "+101110", "+111100", "-111221", "-112211"},
    {"+000111", "+001110", "+010110", "+011100", "+101100", "-112221"},
    {"+000011", "+000110", "+001100", "+010100", "+101000", "-112321"},
    {"+000001", "+000010", "+000100", "+001000", "+010000", "+100000", "-122321"}
};
const std::vector<std::vector<std::string>> kCcon_E7_1 = {
    {"phi", "r1", "r2", "r3", "r4", "r5", "r6", "r7"},
    {"+2234321", "-0000001", "-0000010", "-0000100", "-0001000", "-0010000", "-0100000", "-1000000"},
    {"+1234321", "-0000011", "-0000110", "-0001100", "-0011000", "-0101000", "-1010000"},
    {"+1224321", "-0000111", "-0001110", "-0011100", "-0101100", "-0111000", "-1011000"},
    {"+1223321", "-0001111", "-0011110", "-0101110", "-0111100", "-1011100", "-1111000"},
    {"+1123321", "+1223221", "-0011111", "-0101111", "-0111110", "-0112100", "-1011110", "-1111100"},
    {"+1123221", "+1223211", "-0111111", "-0112110", "-1011111", "-1111110", "-1112100"},
    {"+1122221", "+1123211", "+1223210", "-0112111", "-0112210", "-1111111", "-1112110", "-1122100"},
    {"+1112221", "+1122211", "+1123210", "-0112211", "-1112111", "-1112210", "-1122110"},
    {"+0112221", "+1112211", "+1122111", "+1122210", "-0112221", "-1112211", "-1122111", "-1122210"},
    {"+0112211", "+1112111", "+1112210", "+1122110", "-1112221", "-1122211", "-1123210"},
    {"+0112111", "+0112210", "+1111111", "+1112110", "+1122100", "-1122221", "-1123211", "-1223210"},
    {"+0111111", "+0112110", "+1011111", "+1111110", "+1112100", "-1123221", "-1223211"},
    {"+0011111", "+0101111", "+0111110", "+0112100", "+1011110", "+1111100", "-1123321", "-1223221"},
    {"+0001111", "+0011110", "+0101110", "+0111100", "+1011100", "+1111000", "-1223321"},
    {"+0000111", "+0001110", "+0011100", "+0101100", "+0111000", "+1011000", "-1224321"},
    {"+0000011", "+0000110", "+0001100", "+0011000", "+0101000", "+1010000", "-1234321"},
    {"+0000001", "+0000010", "+0000100", "+0001000", "+0010000", "+0100000", "+1000000", "-2234321"}
};
const std::vector<std::vector<std::string>> kCcon_E8_1 = {
    {"phi", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"},
    {"+23465432", "-00000001", "-00000010", "-00000100", "-00001000", "-00010000", "-00100000", "-01000000", "-10000000"},
    {"+23465431", "-00000011", "-00000110", "-00001100", "-00011000", "-00110000", "-01010000", "-10100000"},
    {"+23465421", "-00000111", "-00001110", "-00011100", "-00111000", "-01011000", "-01110000", "-10110000"},
    {"+23465321", "-00001111", "-00011110", "-00111100", "-01011100", "-01111000", "-10111000", "-11110000"},
    {"+23464321", "-00011111", "-00111110", "-01011110", "-01111100", "-01121000", "-10111100", "-11111000"},
    {"+23454321", "-00111111", "-01011111", "-01111110", "-01121100", "-10111110", "-11111100", "-11121000"},
    {"+22454321", "+23354321", "-01111111", "-01121110", "-01122100", "-10111111", "-11111110", "-11121100", "-11221000"},
    {"+13354321", "+22354321", "-01121111", "-01122110", "-11111111", "-11121110", "-11122100", "-11221100"},
    {"+12354321", "+22344321", "-01122111", "-01122210", "-11121111", "-11122110", "-11221110", "-11222100"},
    {"+12344321", "+22343321", "-01122211", "-11122111", "-11122210", "-11221111", "-11222110", "-11232100"},
    {"+12244321", "+12343321", "+22343221", "-01122221", "-11122211", "-11222111", "-11222210", "-11232110", "-12232100"},
    {"+12243321", "+12343221", "+22343211", "-11122221", "-11222211", "-11232111", "-11232210", "-12232110"},
    {"+12233321", "+12243221", "+12343211", "+22343210", "-11222221", "-11232211", "-11233210", "-12232111", "-12232210"},
    {"+11233321", "+12233221", "+12243211", "+12343210", "-11232221", "-11233211", "-12232211", "-12233210"},
    {"+11233221", "+12232221", "+12233211", "+12243210", "-11233221", "-12232221", "-12233211", "-12243210"},
    {"+11232221", "+11233211", "+12232211", "+12233210", "-11233321", "-12233221", "-12243211", "-12343210"},
    {"+11222221", "+11232211", "+11233210", "+12232111", "+12232210", "-12233321", "-12243221", "-12343211", "-22343210"},
    {"+11122221", "+11222211", "+11232111", "+11232210", "+12232110", "-12243321", "-12343221", "-22343211"},
    {"+01122221", "+11122211", "+11222111", "+11222210", "+11232110", "+12232100", "-12244321", "-12343321", "-22343221"},
    {"+01122211", "+11122111", "+11122210", "+11221111", "+11222110", "+11232100", "-12344321", "-22343321"},
    {"+01122111", "+01122210", "+11121111", "+11122110", "+11221110", "+11222100", "-12354321", "-22344321"},
    {"+01121111", "+01122110", "+11111111", "+11121110", "+11122100", "+11221100", "-13354321", "-22354321"},
    {"+01111111", "+01121110", "+01122100", "+10111111", "+11111110", "+11121100", "+11221000", "-22454321", "-23354321"},
    {"+00111111", "+01011111", "+01111110", "+01121100", "+10111110", "+11111100", "+11121000", "-23454321"},
    {"+00011111", "+00111110", "+01011110", "+01111100", "+01121000", "+10111100", "+11111000", "-23464321"},
    {"+00001111", "+00011110", "+00111100", "+01011100", "+01111000", "+10111000", "+11110000", "-23465321"},
    {"+00000111", "+00001110", "+00011100", "+00111000", "+01011000", "+01110000", "+10110000", "-23465421"},
    {"+00000011", "+00000110", "+00001100", "+00011000", "+00110000", "+01010000", "+10100000", "-23465431"},
    {"+00000001", "+00000010", "+00000100", "+00001000", "+00010000", "+00100000", "+01000000", "+10000000", "-23465432"}
};
const std::vector<std::pair<int, std::string>> kIcon_G2_1 = {
    {1, "-01"}, {1, "-10"}, {2, "-11"}, {3, "-12"}, {4, "-13"}, {5, "-23"}
};
const std::vector<std::pair<int, std::string>> kIcon_D4_3 = {
    {1, "-10"}, {2, "-11"}, {3, "-21"}
};
const std::vector<std::pair<int, std::string>> kIcon_F4_1 = {
    {1, "-0001"}, {1, "-0010"}, {1, "-0100"}, {1, "-1000"}, {2, "-0011"}, {2, "-0110"},
    {2, "-1100"}, {3, "-0111"}, {3, "-0120"}, {3, "-1110"}, {4, "-0121"}, {4, "-1111"},
    {4, "-1120"}, {5, "-0122"}, {5, "-1121"}, {5, "-1220"}, {6, "-1122"}, {6, "-1221"},
    {7, "-1222"}, {7, "-1231"}, {8, "-1232"}, {9, "-1242"}, {10, "-1342"}, {11, "-2342"}
};
const std::vector<std::pair<int, std::string>> kIcon_E6_2 = {
    {1, "-0100"}, {1, "-1000"}, {2, "-0110"}, {2, "-1100"}, {3, "-0111"}, {3, "-1110"},
    {4, "-1111"}, {4, "-1210"}, {5, "-1211"}, {6, "-1221"}, {7, "-1321"}, {8, "-2321"}
};
const std::vector<std::pair<int, std::string>> kIcon_E6_1 = {
    {1, "-000001"}, {1, "-000010"}, {1, "-000100"}, {1, "-001000"}, {1, "-010000"},
    {1, "-100000"}, {2, "-000011"}, {2, "-000110"}, {2, "-001100"}, {2, "-010100"},
    {2, "-101000"}, {3, "-000111"}, {3, "-001110"}, {3, "-010110"}, {3, "-011100"},
    {3, "-101100"}, {4, "-001111"}, {4, "-010111"}, {4, "-011110"}, {4, "-101110"},
    {4, "-111100"}, {5, "-011111"}, {5, "-011210"}, {5, "-101111"}, {5, "-111110"},
    {6, "-011211"}, {6, "-111111"}, {6, "-111210"}, {7, "-011221"}, {7, "-111211"},
    {7, "-112210"}, {8, "-111221"}, {8, "-112211"}, {9, "-112221"}, {10, "-112321"},
    {11, "-122321"}
};
const std::vector<std::pair<int, std::string>> kIcon_E7_1 = {
    {1, "-0000001"}, {1, "-0000010"}, {1, "-0000100"}, {1, "-0001000"}, {1, "-0010000"},
    {1, "-0100000"}, {1, "-1000000"}, {2, "-0000011"}, {2, "-0000110"}, {2, "-0001100"},
    {2, "-0011000"}, {2, "-0101000"}, {2, "-1010000"}, {3, "-0000111"}, {3, "-0001110"},
    {3, "-0011100"}, {3, "-0101100"}, {3, "-0111000"}, {3, "-1011000"}, {4, "-0001111"},
    {4, "-0011110"}, {4, "-0101110"}, {4, "-0111100"}, {4, "-1011100"}, {4, "-1111000"},
    {5, "-0011111"}, {5, "-0101111"}, {5, "-0111110"}, {5, "-0112100"}, {5, "-1011110"},
    {5, "-1111100"}, {6, "-0111111"}, {6, "-0112110"}, {6, "-1011111"}, {6, "-1111110"},
    {6, "-1112100"}, {7, "-0112111"}, {7, "-0112210"}, {7, "-1111111"}, {7, "-1112110"},
    {7, "-1122100"}, {8, "-0112211"}, {8, "-1112111"}, {8, "-1112210"}, {8, "-1122110"},
    {9, "-0112221"}, {9, "-1112211"}, {9, "-1122111"}, {9, "-1122210"}, {10, "-1112221"},
    {10, "-1122211"}, {10, "-1123210"}, {11, "-1122221"}, {11, "-1123211"}, {11, "-1223210"},
    {12, "-1123221"}, {12, "-1223211"}, {13, "-1123321"}, {13, "-1223221"}, {14, "-1223321"},
    {15, "-1224321"}, {16, "-1234321"}, {17, "-2234321"}
};
const std::vector<std::pair<int, std::string>> kIcon_E8_1 = {
    {1, "-00000001"}, {1, "-00000010"}, {1, "-00000100"}, {1, "-00001000"}, {1, "-00010000"},
    {1, "-00100000"}, {1, "-01000000"}, {1, "-10000000"}, {2, "-00000011"}, {2, "-00000110"},
    {2, "-00001100"}, {2, "-00011000"}, {2, "-00110000"}, {2, "-01010000"}, {2, "-10100000"},
    {3, "-00000111"}, {3, "-00001110"}, {3, "-00011100"}, {3, "-00111000"}, {3, "-01011000"},
    {3, "-01110000"}, {3, "-10110000"}, {4, "-00001111"}, {4, "-00011110"}, {4, "-00111100"},
    {4, "-01011100"}, {4, "-01111000"}, {4, "-10111000"}, {4, "-11110000"}, {5, "-00011111"},
    {5, "-00111110"}, {5, "-01011110"}, {5, "-01111100"}, {5, "-01121000"}, {5, "-10111100"},
    {5, "-11111000"}, {6, "-00111111"}, {6, "-01011111"}, {6, "-01111110"}, {6, "-01121100"},
    {6, "-10111110"}, {6, "-11111100"}, {6, "-11121000"}, {7, "-01111111"}, {7, "-01121110"},
    {7, "-01122100"}, {7, "-10111111"}, {7, "-11111110"}, {7, "-11121100"}, {7, "-11221000"},
    {8, "-01121111"}, {8, "-01122110"}, {8, "-11111111"}, {8, "-11121110"}, {8, "-11122100"},
    {8, "-11221100"}, {9, "-01122111"}, {9, "-01122210"}, {9, "-11121111"}, {9, "-11122110"},
    {9, "-11221110"}, {9, "-11222100"}, {10, "-01122211"}, {10, "-11122111"},
    {10, "-11122210"}, {10, "-11221111"}, {10, "-11222110"}, {10, "-11232100"},
    {11, "-01122221"}, {11, "-11122211"}, {11, "-11222111"}, {11, "-11222210"},
    {11, "-11232110"}, {11, "-12232100"}, {12, "-11122221"}, {12, "-11222211"},
    {12, "-11232111"}, {12, "-11232210"}, {12, "-12232110"}, {13, "-11222221"},
    {13, "-11232211"}, {13, "-11233210"}, {13, "-12232111"}, {13, "-12232210"},
    {14, "-11232221"}, {14, "-11233211"}, {14, "-12232211"}, {14, "-12233210"},
    {15, "-11233221"}, {15, "-12232221"}, {15, "-12233211"}, {15, "-12243210"},
    {16, "-11233321"}, {16, "-12233221"}, {16, "-12243211"}, {16, "-12343210"},
    {17, "-12233321"}, {17, "-12243221"}, {17, "-12343211"}, {17, "-22343210"},
    {18, "-12243321"}, {18, "-12343221"}, {18, "-22343211"}, {19, "-12244321"},
    {19, "-12343321"}, {19, "-22343221"}, {20, "-12344321"}, {20, "-22343321"},
    {21, "-12354321"}, {21, "-22344321"}, {22, "-13354321"}, {22, "-22354321"},
    {23, "-22454321"}, {23, "-23354321"}, {24, "-23454321"}, {25, "-23464321"},
    {26, "-23465321"}, {27, "-23465421"}, {28, "-23465431"}, {29, "-23465432"}
};
const ReferenceMatrix kMatrix_D4_3 = {
    {"phi", "+21", "+11", "+10", "r1", "-10", "-11", "-21"},
    {
        {0, 1, 2, 3, 4, 5, 6, 7},
        {7, 8, 5, 6, 3, 4, 5, 6},
        {6, 7, 8, 5, 6, 7, 4, 5},
        {5, 6, 7, 8, 5, 6, 7, 4},
        {4, 5, 6, 7, 4, 5, 6, 3},
        {3, 4, 5, 6, 7, 8, 5, 6},
        {2, 3, 4, 5, 6, 7, 8, 5},
        {1, 2, 3, 4, 5, 6, 7, 8},
    }
};
const ReferenceMatrix kMatrix_G2_1 = {
    {"phi", "+23", "+13", "+12", "+11", "+10", "+01", "r1", "r2", "-01", "-10", "-11", "-12", "-13", "-23"},
    {
        {0, 1, 2, 3, 4, 5, 5, 6, 6, 7, 7, 8, 9, 10, 11},
        {11, 12, 7, 8, 9, 10, 4, 5, 5, 6, 6, 7, 8, 9, 10},
        {10, 11, 12, 7, 8, 9, 9, 10, 4, 5, 11, 6, 7, 8, 9},
        {9, 10, 11, 6, 7, 8, 8, 9, 3, 4, 10, 5, 6, 7, 8},
        {8, 9, 10, 5, 6, 7, 7, 8, 2, 3, 9, 4, 5, 6, 7},
        {7, 8, 9, 10, 11, 12, 6, 7, 7, 8, 8, 9, 10, 11, 6},
        {7, 8, 9, 4, 5, 6, 6, 7, 1, 2, 8, 3, 4, 5, 6},
        {6, 7, 8, 9, 10, 11, 5, 6, 6, 7, 7, 8, 9, 10, 5},
        {6, 7, 8, 3, 4, 5, 5, 6, 0, 1, 7, 2, 3, 4, 5},
        {5, 6, 7, 8, 9, 10, 4, 5, 5, 6, 6, 7, 8, 9, 4},
        {5, 6, 7, 8, 9, 10, 10, 11, 5, 6, 12, 7, 8, 9, 10},
        {4, 5, 6, 7, 8, 9, 9, 10, 4, 5, 11, 6, 7, 8, 9},
        {3, 4, 5, 6, 7, 8, 8, 9, 3, 4, 10, 5, 6, 7, 8},
        {2, 3, 4, 5, 6, 7, 7, 8, 8, 9, 9, 10, 11, 12, 7},
        {1, 2, 3, 4, 5, 6, 6, 7, 7, 8, 8, 9, 10, 11, 12},
    }
};
const ReferenceMatrix kMatrix_E6_2 = {
    {"phi", "+2321", "+1321", "+1221", "+1211", "+1210", "+1111", "+1110", "+1100", "+1000", "+0111", "+0110", "+0100", "r1", "r2", "-0100", "-0110", "-0111", "-1000", "-1100", "-1110", "-1111", "-1210", "-1211", "-1221", "-1321", "-2321"},
    {
        {0, 1, 2, 3, 4, 5, 5, 6, 7, 8, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 17},
        {17, 18, 10, 11, 12, 13, 13, 14, 15, 16, 5, 6, 7, 8, 8, 9, 10, 11, 9, 10, 11, 12, 12, 13, 14, 15, 16},
        {16, 17, 18, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 7, 8, 9, 10, 17, 9, 10, 11, 11, 12, 13, 14, 15},
        {15, 16, 17, 18, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 8, 9, 16, 17, 9, 10, 10, 11, 12, 13, 14},
        {14, 15, 16, 17, 18, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 8, 15, 16, 17, 9, 9, 10, 11, 12, 13},
        {13, 14, 15, 16, 17, 18, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 17, 8, 9, 10, 11, 12},
        {13, 14, 15, 16, 17, 9, 18, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 7, 14, 15, 16, 8, 17, 9, 10, 11, 12},
        {12, 13, 14, 15, 16, 17, 17, 18, 10, 11, 9, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 16, 17, 9, 10, 11},
        {11, 12, 13, 14, 15, 16, 16, 17, 18, 10, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 9, 10},
        {10, 11, 12, 13, 14, 15, 15, 16, 17, 18, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 17, 9},
        {12, 13, 14, 15, 16, 8, 17, 9, 10, 11, 18, 10, 11, 12, 12, 13, 14, 6, 13, 14, 15, 7, 16, 8, 9, 10, 11},
        {11, 12, 13, 14, 15, 16, 16, 17, 9, 10, 17, 18, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 8, 9, 10},
        {10, 11, 12, 13, 14, 15, 15, 16, 17, 9, 16, 17, 18, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 8, 9},
        {9, 10, 11, 12, 13, 14, 14, 15, 16, 17, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 8},
        {9, 10, 11, 12, 13, 14, 14, 15, 16, 8, 15, 16, 17, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 7, 8},
        {8, 9, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 8, 17, 18, 10, 11, 9, 10, 11, 12, 12, 13, 14, 15, 7},
        {7, 8, 9, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 7, 16, 17, 18, 10, 8, 9, 10, 11, 11, 12, 13, 14, 6},
        {6, 7, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 6, 15, 16, 17, 18, 7, 8, 9, 10, 10, 11, 12, 13, 5},
        {8, 9, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 17, 8, 9, 10, 11, 18, 10, 11, 12, 12, 13, 14, 15, 16},
        {7, 8, 9, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 16, 17, 9, 10, 17, 18, 10, 11, 11, 12, 13, 14, 15},
        {6, 7, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 9, 16, 17, 18, 10, 10, 11, 12, 13, 14},
        {5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 17, 15, 16, 17, 18, 9, 10, 11, 12, 13},
        {5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 8, 15, 16, 17, 9, 18, 10, 11, 12, 13},
        {4, 5, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 17, 17, 18, 10, 11, 12},
        {3, 4, 5, 6, 7, 8, 8, 9, 10, 11, 9, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 16, 17, 18, 10, 11},
        {2, 3, 4, 5, 6, 7, 7, 8, 9, 10, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 18, 10},
        {1, 2, 3, 4, 5, 6, 6, 7, 8, 9, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 17, 18},
    }
};
const std::vector<PochFactor> kD1_G2_1 = {{1, 1, 2}, {1, 6, 1}, {5, 6, 1}};
const std::vector<PochFactor> kD1_D4_3 = {{1, 1, 2}, {1, 6, 1}, {5, 6, 1}};
const std::vector<PochFactor> kD1_F4_1 = {{1, 1, 4}, {5, 6, 1}, {1, 6, 1}};
const std::vector<PochFactor> kD1_E6_2 = {{1, 1, 4}, {5, 6, 1}, {1, 6, 1}};
const std::vector<PochFactor> kD1_E6_1 = {{1, 1, 6}, {1, 6, 1}, {5, 6, 1}, {4, 12, 1}, {8, 12, 1}};
const std::vector<PochFactor> kD1_E7_1 = {{1, 1, 7}, {1, 6, 1}, {5, 6, 1}, {9, 18, 1}};
const std::vector<PochFactor> kD1_E8_1 = {{1, 1, 8}, {1, 6, 1}, {5, 6, 1}, {5, 30, -1}, {25, 30, -1}};
const std::vector<PochFactor> kD2_G2_1 = {{1, 1, 2}, {6, 15, -1}, {9, 15, -1}};
const std::vector<PochFactor> kD2_D4_3 = {{1, 1, 2}};
const std::vector<PochFactor> kD2_F4_1 = {{1, 1, 4}, {8, 20, -1}, {12, 20, -1}};
const std::vector<PochFactor> kD2_E6_2 = {{1, 1, 4}};
const std::vector<PochFactor> kD2_E6_1 = {{1, 1, 6}};
const std::vector<PochFactor> kD2_E7_1 = {{1, 1, 7}};
const std::vector<PochFactor> kD2_E8_1 = {{1, 1, 8}};
const std::vector<PochFactor> kChi_G2_1 = {{1, 6, -1}, {5, 6, -1}, {6, 15, -1}, {9, 15, -1}};
const std::vector<PochFactor> kChi_D4_3 = {{5, 6, -1}, {1, 6, -1}};
const std::vector<PochFactor> kChi_F4_1 = {{8, 20, -1}, {12, 20, -1}, {1, 6, -1}, {5, 6, -1}};
const std::vector<PochFactor> kChi_E6_2 = {{5, 6, -1}, {1, 6, -1}};
const std::vector<PochFactor> kChi_E6_1 = {{1, 6, -1}, {5, 6, -1}, {4, 12, -1}, {8, 12, -1}};
const std::vector<PochFactor> kChi_E7_1 = {{1, 6, -1}, {5, 6, -1}, {9, 18, -1}};
const std::vector<PochFactor> kChi_E8_1 = {{1, 30, -1}, {7, 30, -1}, {11, 30, -1}, {13, 30, -1}, {17, 30, -1}, {19, 30, -1}, {23, 30, -1}, {29, 30, -1}};

}  // namespace

namespace {
const std::vector<const char*>& long_enc(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kLong_G2_1;
        case AffineType::D4_3: return kLong_D4_3;
        case AffineType::F4_1: return kLong_F4_1;
        case AffineType::E6_2: return kLong_E6_2;
        case AffineType::E6_1: return kLong_E6_1;
        case AffineType::E7_1: return kLong_E7_1;
        case AffineType::E8_1: return kLong_E8_1;
    }
    throw std::logic_error("unknown type");
}

const std::vector<const char*>& short_enc(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kShort_G2_1;
        case AffineType::D4_3: return kShort_D4_3;
        case AffineType::F4_1: return kShort_F4_1;
        case AffineType::E6_2: return kShort_E6_2;
        case AffineType::E6_1: return kShort_E6_1;
        case AffineType::E7_1: return kShort_E7_1;
        case AffineType::E8_1: return kShort_E8_1;
    }
    throw std::logic_error("unknown type");
}
}  // namespace

const std::vector<Coeffs>& long_roots(AffineType t) {
    static const auto cache = [] {
        std::array<std::vector<Coeffs>, 7> a;
        a[idx(AffineType::G2_1)] = decode(long_enc(AffineType::G2_1));
        a[idx(AffineType::D4_3)] = decode(long_enc(AffineType::D4_3));
        a[idx(AffineType::F4_1)] = decode(long_enc(AffineType::F4_1));
        a[idx(AffineType::E6_2)] = decode(long_enc(AffineType::E6_2));
        a[idx(AffineType::E6_1)] = decode(long_enc(AffineType::E6_1));
        a[idx(AffineType::E7_1)] = decode(long_enc(AffineType::E7_1));
        a[idx(AffineType::E8_1)] = decode(long_enc(AffineType::E8_1));
        return a;
    }();
    return cache[idx(t)];
}

const std::vector<Coeffs>& short_roots(AffineType t) {
    static const auto cache = [] {
        std::array<std::vector<Coeffs>, 7> a;
        a[idx(AffineType::G2_1)] = decode(short_enc(AffineType::G2_1));
        a[idx(AffineType::D4_3)] = decode(short_enc(AffineType::D4_3));
        a[idx(AffineType::F4_1)] = decode(short_enc(AffineType::F4_1));
        a[idx(AffineType::E6_2)] = decode(short_enc(AffineType::E6_2));
        a[idx(AffineType::E6_1)] = decode(short_enc(AffineType::E6_1));
        a[idx(AffineType::E7_1)] = decode(short_enc(AffineType::E7_1));
        a[idx(AffineType::E8_1)] = decode(short_enc(AffineType::E8_1));
        return a;
    }();
    return cache[idx(t)];
}

std::vector<Coeffs> all_roots(AffineType t) {
    std::vector<Coeffs> out = long_roots(t);
    const auto& s = short_roots(t);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

const std::vector<long long>& coefficient_row(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kCoeffs_G2_1;
        case AffineType::D4_3: return kCoeffs_D4_3;
        case AffineType::F4_1: return kCoeffs_F4_1;
        case AffineType::E6_2: return kCoeffs_E6_2;
        case AffineType::E6_1: return kCoeffs_E6_1;
        case AffineType::E7_1: return kCoeffs_E7_1;
        case AffineType::E8_1: return kCoeffs_E8_1;
    }
    throw std::logic_error("unknown type");
}

const std::vector<std::vector<std::string>>& congruence_rows(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kCcon_G2_1;
        case AffineType::D4_3: return kCcon_D4_3;
        case AffineType::F4_1: return kCcon_F4_1;
        case AffineType::E6_2: return kCcon_E6_2;
        case AffineType::E6_1: return kCcon_E6_1;
        case AffineType::E7_1: return kCcon_E7_1;
        case AffineType::E8_1: return kCcon_E8_1;
    }
    throw std::logic_error("unknown type");
}

const std::vector<std::pair<int, std::string>>& initial_parts(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kIcon_G2_1;
        case AffineType::D4_3: return kIcon_D4_3;
        case AffineType::F4_1: return kIcon_F4_1;
        case AffineType::E6_2: return kIcon_E6_2;
        case AffineType::E6_1: return kIcon_E6_1;
        case AffineType::E7_1: return kIcon_E7_1;
        case AffineType::E8_1: return kIcon_E8_1;
    }
    throw std::logic_error("unknown type");
}

const ReferenceMatrix* printed_matrix(AffineType t) {
    switch (t) {
        case AffineType::D4_3: return &kMatrix_D4_3;
        case AffineType::G2_1: return &kMatrix_G2_1;
        case AffineType::E6_2: return &kMatrix_E6_2;
        default: return nullptr;
    }
}

const std::vector<PochFactor>& principal_d_factors(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kD1_G2_1;
        case AffineType::D4_3: return kD1_D4_3;
        case AffineType::F4_1: return kD1_F4_1;
        case AffineType::E6_2: return kD1_E6_2;
        case AffineType::E6_1: return kD1_E6_1;
        case AffineType::E7_1: return kD1_E7_1;
        case AffineType::E8_1: return kD1_E8_1;
    }
    throw std::logic_error("unknown type");
}

const std::vector<PochFactor>& shifted_d_factors(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kD2_G2_1;
        case AffineType::D4_3: return kD2_D4_3;
        case AffineType::F4_1: return kD2_F4_1;
        case AffineType::E6_2: return kD2_E6_2;
        case AffineType::E6_1: return kD2_E6_1;
        case AffineType::E7_1: return kD2_E7_1;
        case AffineType::E8_1: return kD2_E8_1;
    }
    throw std::logic_error("unknown type");
}

const std::vector<PochFactor>& character_factors(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return kChi_G2_1;
        case AffineType::D4_3: return kChi_D4_3;
        case AffineType::F4_1: return kChi_F4_1;
        case AffineType::E6_2: return kChi_E6_2;
        case AffineType::E6_1: return kChi_E6_1;
        case AffineType::E7_1: return kChi_E7_1;
        case AffineType::E8_1: return kChi_E8_1;
    }
    throw std::logic_error("unknown type");
}

}  // namespace crr::golden
