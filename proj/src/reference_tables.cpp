#include <cstdio>
#include <stdexcept>
#include <vector>

#include "cdd/bench.hpp"

namespace cdd {

namespace {

// Single-machine reference values, transcribed row by row:
// n, k, then (APSA, BR) for h = 0.2, 0.4, 0.6, 0.8.
constexpr Int kSingle[][10] = {
    {10, 1, 1936, 1936, 1025, 1025, 841, 841, 818, 818},
    {10, 2, 1042, 1042, 615, 615, 615, 615, 615, 615},
    {10, 3, 1586, 1586, 917, 917, 793, 793, 793, 793},
    {10, 4, 2139, 2139, 1230, 1230, 815, 815, 803, 803},
    {10, 5, 1187, 1187, 630, 630, 521, 521, 521, 521},
    {10, 6, 1521, 1521, 908, 908, 755, 755, 755, 755},
    {10, 7, 2170, 2170, 1374, 1374, 1101, 1101, 1083, 1083},
    {10, 8, 1720, 1720, 1020, 1020, 610, 610, 540, 540},
    {10, 9, 1574, 1574, 876, 876, 582, 582, 554, 554},
    {10, 10, 1869, 1869, 1136, 1136, 710, 710, 671, 671},
    {20, 1, 4394, 4431, 3066, 3066, 2986, 2986, 2986, 2986},
    {20, 2, 8430, 8567, 4847, 4897, 3206, 3260, 2980, 2980},
    {20, 3, 6210, 6331, 3838, 3883, 3583, 3600, 3583, 3600},
    {20, 4, 9188, 9478, 5118, 5122, 3317, 3336, 3040, 3040},
    {20, 5, 4215, 4340, 2495, 2571, 2173, 2206, 2173, 2206},
    {20, 6, 6527, 6766, 3582, 3601, 3010, 3016, 3010, 3016},
    {20, 7, 10455, 11101, 6279, 6357, 4126, 4175, 3878, 3900},
    {20, 8, 3920, 4203, 2145, 2151, 1638, 1638, 1638, 1638},
    {20, 9, 3465, 3530, 2096, 2097, 1965, 1992, 1965, 1992},
    {20, 10, 4979, 5545, 3012, 3192, 2110, 2116, 1995, 1995},
    {50, 1, 40936, 42363, 24146, 24868, 17970, 17990, 17982, 17990},
    {50, 2, 31174, 33637, 18451, 19279, 14217, 14231, 14067, 14132},
    {50, 3, 35552, 37641, 20996, 21353, 16497, 16497, 16517, 16497},
    {50, 4, 28037, 30166, 17137, 17495, 14088, 14105, 14101, 14105},
    {50, 5, 32347, 32604, 18049, 18441, 14615, 14650, 14615, 14650},
    {50, 6, 35628, 36920, 20790, 21497, 14328, 14251, 14075, 14075},
    {50, 7, 43203, 44277, 23076, 23883, 17715, 17715, 17699, 17715},
    {50, 8, 43961, 46065, 25111, 25402, 21345, 21367, 21351, 21367},
    {50, 9, 34600, 36397, 20302, 21929, 14202, 14298, 14064, 13952},
    {50, 10, 33643, 35797, 19564, 20048, 14367, 14377, 14374, 14377},
    {100, 1, 148316, 156103, 89537, 89588, 72017, 72019, 72017, 72019},
    {100, 2, 129379, 132605, 73828, 74854, 59350, 59351, 59348, 59351},
    {100, 3, 136385, 137463, 83963, 85363, 68671, 68537, 68670, 68537},
    {100, 4, 134338, 137265, 87255, 87730, 69192, 69231, 69039, 69231},
    {100, 5, 129057, 136761, 74626, 76424, 55291, 55291, 55275, 55277},
    {100, 6, 145927, 151938, 81182, 86724, 62507, 62519, 62410, 62519},
    {100, 7, 138574, 141613, 79482, 79854, 62302, 62213, 62208, 62213},
    {100, 8, 164281, 168086, 95197, 95361, 80722, 80844, 80841, 80844},
    {100, 9, 121189, 125153, 72817, 73605, 58769, 58771, 58771, 58771},
    {100, 10, 121425, 124446, 72741, 72399, 61416, 61419, 61416, 61419},
    {200, 1, 523042, 526666, 300079, 301449, 254268, 254268, 254362, 254268},
    {200, 2, 557884, 566643, 333930, 335714, 266105, 266028, 266549, 266028},
    {200, 3, 510959, 529919, 303924, 308278, 254647, 254647, 254572, 254647},
    {200, 4, 596719, 603709, 359966, 360852, 297305, 297269, 297729, 297269},
    {200, 5, 543709, 547953, 317707, 322268, 260703, 260455, 260423, 260455},
    {200, 6, 500354, 502276, 287916, 292453, 235947, 236160, 236013, 236160},
    {200, 7, 477734, 479651, 279487, 279576, 246910, 247555, 247521, 247555},
    {200, 8, 522470, 530896, 287932, 288746, 225519, 225572, 225897, 225572},
    {200, 9, 561956, 575353, 324475, 331107, 254953, 255029, 254956, 255029},
    {200, 10, 560632, 572866, 328964, 332808, 269172, 269236, 269208, 269236},
};

// Parallel-machine upper bounds (k = 1): n, m, value at h = 0.4, value at h = 0.8.
constexpr Int kParallel[][4] = {
    {10, 2, 612, 398},    {10, 3, 507, 256},    {10, 4, 364, 197},
    {20, 2, 1527, 1469},  {20, 3, 1085, 957},   {20, 4, 848, 686},
    {50, 2, 12911, 9020}, {50, 3, 8913, 6010},  {50, 4, 7097, 4551},
    {100, 2, 45451, 37195}, {100, 3, 31133, 25097}, {100, 4, 23904, 19001},
    {200, 2, 154094, 133848}, {200, 3, 103450, 96649}, {200, 4, 81437, 71263},
};

// FNV-1a over every field of the expanded table, frozen at transcription time.
constexpr std::uint64_t kExpectedChecksum = 0x6609561b764716bcULL;

std::uint64_t fnv1a(std::uint64_t hash, Int value) {
  auto v = static_cast<std::uint64_t>(value);
  for (int byte = 0; byte < 8; ++byte) {
    hash ^= (v >> (byte * 8)) & 0xFF;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::vector<ReferenceRecord> expand() {
  std::vector<ReferenceRecord> records;
  records.reserve(430);
  for (const auto& row : kSingle) {
    const int n = static_cast<int>(row[0]);
    const int k = static_cast<int>(row[1]);
    for (int hi = 0; hi < 4; ++hi) {
      const int h_tenths = 2 * (hi + 1);
      records.push_back({n, k, h_tenths, 1, RefSource::apsa, row[2 + 2 * hi]});
      records.push_back({n, k, h_tenths, 1, RefSource::br, row[3 + 2 * hi]});
    }
  }
  for (const auto& row : kParallel) {
    const int n = static_cast<int>(row[0]);
    const int m = static_cast<int>(row[1]);
    records.push_back({n, 1, 4, m, RefSource::parallel_ub, row[2]});
    records.push_back({n, 1, 8, m, RefSource::parallel_ub, row[3]});
  }
  return records;
}

std::uint64_t table_checksum(const std::vector<ReferenceRecord>& records) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const ReferenceRecord& rec : records) {
    hash = fnv1a(hash, rec.n);
    hash = fnv1a(hash, rec.k);
    hash = fnv1a(hash, rec.h_tenths);
    hash = fnv1a(hash, rec.machines);
    hash = fnv1a(hash, static_cast<Int>(rec.source));
    hash = fnv1a(hash, rec.value);
  }
  return hash;
}

}  // namespace

std::span<const ReferenceRecord> reference_table() {
  static const std::vector<ReferenceRecord> records = [] {
    std::vector<ReferenceRecord> expanded = expand();
    const std::uint64_t got = table_checksum(expanded);
    if (got != kExpectedChecksum) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "reference table corrupted: checksum %016llx, expected %016llx",
                    static_cast<unsigned long long>(got),
                    static_cast<unsigned long long>(kExpectedChecksum));
      throw std::logic_error(buf);
    }
    return expanded;
  }();
  return records;
}

}  // namespace cdd
