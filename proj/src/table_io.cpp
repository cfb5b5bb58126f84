#include "hcn/table_io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

constexpr std::size_t kHeaderBytes = 16;
constexpr std::size_t kChunkCells = 1 << 20;

void put_u32le(unsigned char* p, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}
void put_u64le(unsigned char* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}
std::uint32_t get_u32le(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}
std::uint64_t get_u64le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

} // namespace

void save_table(const ClassNumberTable& table, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw TableIoError("cannot open " + path.string() + " for writing");

    unsigned char header[kHeaderBytes];
    std::memcpy(header, kTableMagic, 4);
    put_u32le(header + 4, kTableVersion);
    put_u64le(header + 8, table.limit());
    os.write(reinterpret_cast<const char*>(header), kHeaderBytes);

    const auto cells = table.raw();
    std::vector<unsigned char> buf(4 * kChunkCells);
    std::uint64_t n = 1; // n = 0 not stored
    while (n <= table.limit()) {
        const std::uint64_t count = std::min<std::uint64_t>(kChunkCells, table.limit() - n + 1);
        for (std::uint64_t i = 0; i < count; ++i) put_u32le(&buf[4 * i], cells[n + i]);
        os.write(reinterpret_cast<const char*>(buf.data()),
                 static_cast<std::streamsize>(4 * count));
        n += count;
    }
    os.flush();
    if (!os) throw TableIoError("write failed for " + path.string());
}

ClassNumberTable load_table(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw TableIoError("cannot open " + path.string() + " for reading");

    unsigned char header[kHeaderBytes];
    is.read(reinterpret_cast<char*>(header), kHeaderBytes);
    if (is.gcount() != static_cast<std::streamsize>(kHeaderBytes) ||
        std::memcmp(header, kTableMagic, 4) != 0)
        throw CorruptHeaderError("bad table header in " + path.string());
    const std::uint32_t version = get_u32le(header + 4);
    if (version != kTableVersion)
        throw VersionMismatchError("table version " + std::to_string(version) +
                                   " != " + std::to_string(kTableVersion) + " in " +
                                   path.string());
    const std::uint64_t limit = get_u64le(header + 8);

    std::error_code ec;
    const auto file_size = std::filesystem::file_size(path, ec);
    if (!ec && file_size != kHeaderBytes + 4 * limit)
        throw TruncatedPayloadError("payload size mismatch in " + path.string() +
                                    " (expected " + std::to_string(4 * limit) +
                                    " bytes after header)");

    std::vector<std::uint32_t> cells(limit + 1, 0);
    std::vector<unsigned char> buf(4 * kChunkCells);
    std::uint64_t n = 1;
    while (n <= limit) {
        const std::uint64_t count = std::min<std::uint64_t>(kChunkCells, limit - n + 1);
        is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(4 * count));
        if (is.gcount() != static_cast<std::streamsize>(4 * count))
            throw TruncatedPayloadError("table payload truncated in " + path.string());
        for (std::uint64_t i = 0; i < count; ++i) cells[n + i] = get_u32le(&buf[4 * i]);
        n += count;
    }
    return ClassNumberTable(limit, std::move(cells));
}

} // namespace hcn
