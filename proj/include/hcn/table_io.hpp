#ifndef HCN_TABLE_IO_HPP
#define HCN_TABLE_IO_HPP

#include <filesystem>

#include "hcn/class_numbers.hpp"

namespace hcn {

// On-disk table format, all little-endian:
//   bytes 0..3   magic "HCN1"
//   bytes 4..7   u32 version = 1
//   bytes 8..15  u64 limit X
//   then X u32 cells holding 12*H(n) for n = 1..X.
// n = 0 is not stored; load reconstructs H(0) = -1/12 by convention.
inline constexpr char kTableMagic[4] = {'H', 'C', 'N', '1'};
inline constexpr std::uint32_t kTableVersion = 1;

void save_table(const ClassNumberTable& table, const std::filesystem::path& path);

// Throws CorruptHeaderError / VersionMismatchError / TruncatedPayloadError; a file
// whose size disagrees with the header's limit is reported as truncated.
ClassNumberTable load_table(const std::filesystem::path& path);

} // namespace hcn

#endif
