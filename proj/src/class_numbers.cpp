#include "hcn/class_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcn/arith.hpp"
#include "hcn/errors.hpp"
#include "hcn/parallel.hpp"

namespace hcn {

namespace {

// Cells processed per sieve block. 4 MB of table keeps a block's scattered writes
// inside cache while the per-block (a,b) re-enumeration overhead stays negligible.
constexpr std::uint64_t kBlockCells = std::uint64_t{1} << 20;

// 12*H(n) stays below 2^32 for every n <= 1e12; past that the u32 cells could wrap.
constexpr std::uint64_t kCellWidthLimit = 1'000'000'000'000ull;

void check_capacity(std::uint64_t limit) {
    if (limit > kCellWidthLimit)
        throw CapacityError("table limit " + std::to_string(limit) +
                            " exceeds the 32-bit cell guarantee (max 1e12)");
    if (limit >= std::numeric_limits<std::size_t>::max() / 4 - 4)
        throw CapacityError("table limit " + std::to_string(limit) +
                            " exceeds addressable memory for 4-byte cells");
}

// Largest a with 3a^2 < hi; every reduced form satisfies n = 4ac - b^2 >= 3a^2.
std::uint64_t max_a_below(std::uint64_t hi) {
    if (hi == 0) return 0;
    std::uint64_t a = isqrt((hi - 1) / 3);
    while (3 * (a + 1) * (a + 1) < hi) ++a;
    while (a > 0 && 3 * a * a >= hi) --a;
    return a;
}

} // namespace

ClassNumberTable::ClassNumberTable(std::uint64_t limit, std::vector<std::uint32_t> cells)
    : limit_(limit), cells_(std::move(cells)) {
    if (cells_.size() != limit_ + 1)
        throw RangeError("class number table cell count does not match its limit");
}

std::int64_t ClassNumberTable::twelve_times(std::uint64_t n) const {
    if (n > limit_)
        throw RangeError("H(" + std::to_string(n) + ") beyond table limit " +
                         std::to_string(limit_));
    if (n == 0) return -1;
    return cells_[n];
}

ClassNumberTable sieve_hurwitz(std::uint64_t limit, unsigned threads) {
    check_capacity(limit);
    std::vector<std::uint32_t> cells(limit + 1, 0);
    const std::uint64_t n_blocks = limit / kBlockCells + 1;
    parallel_blocks(n_blocks, resolve_thread_count(threads), [&](std::uint64_t blk) {
        const std::uint64_t lo = blk * kBlockCells;
        const std::uint64_t hi = std::min(limit + 1, lo + kBlockCells);
        if (lo >= hi) return;
        const std::uint64_t a_max = max_a_below(hi);
        for (std::uint64_t a = 1; a <= a_max; ++a) {
            const std::uint64_t fa = 4 * a;
            for (std::uint64_t b = 0; b <= a; ++b) {
                const std::uint64_t bb = b * b;
                std::uint64_t c = a;
                if (lo + bb > fa * a) c = (lo + bb + fa - 1) / fa;
                const std::uint64_t c_end = (hi - 1 + bb) / fa; // inclusive
                if (c > c_end) continue;
                std::uint64_t n = fa * c - bb;
                if (c == a) {
                    // a = c edge of the reduced domain: only b >= 0 representatives
                    cells[n] += b == 0 ? 6u : (b == a ? 4u : 12u);
                    ++c;
                    n += fa;
                }
                const std::uint32_t w = (b == 0 || b == a) ? 12u : 24u; // +-b twins
                for (; c <= c_end; ++c, n += fa) cells[n] += w;
            }
        }
    });
    cells[0] = 0; // H(0) = -1/12 lives in the accessor, not the cells
    return ClassNumberTable(limit, std::move(cells));
}

HurwitzValue hurwitz_single(std::uint64_t n) {
    if (n == 0) return {0, -1};
    const std::uint64_t r = n % 4;
    if (r == 1 || r == 2) return {n, 0};
    std::int64_t twelve = 0;
    // 4 | n + b^2 forces b even for n = 0 mod 4 and b odd for n = 3 mod 4
    for (std::uint64_t b = (r == 0) ? 0 : 1; 3 * b * b <= n; b += 2) {
        const std::uint64_t m = (n + b * b) / 4; // = ac
        for (std::uint64_t a = std::max<std::uint64_t>(b, 1), a_hi = isqrt(m); a <= a_hi;
             ++a) {
            if (m % a != 0) continue;
            if (m / a == a)
                twelve += b == 0 ? 6 : (b == a ? 4 : 12);
            else
                twelve += (b == 0 || b == a) ? 12 : 24;
        }
    }
    return {n, twelve};
}

std::uint64_t primitive_class_number(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t r = n % 4;
    if (r == 1 || r == 2) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t b = (r == 0) ? 0 : 1; 3 * b * b <= n; b += 2) {
        const std::uint64_t m = (n + b * b) / 4;
        for (std::uint64_t a = std::max<std::uint64_t>(b, 1), a_hi = isqrt(m); a <= a_hi;
             ++a) {
            if (m % a != 0) continue;
            const std::uint64_t c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            if (c == a)
                count += 1;
            else
                count += (b == 0 || b == a) ? 1 : 2;
        }
    }
    return count;
}

std::uint64_t total_class_number(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t total = 0;
    for (std::uint64_t f = 1; f * f <= n; ++f)
        if (n % (f * f) == 0) total += primitive_class_number(n / (f * f));
    return total;
}

PrimitiveClassTable::PrimitiveClassTable(std::uint64_t limit, std::vector<std::uint32_t> cells)
    : limit_(limit), cells_(std::move(cells)) {
    if (cells_.size() != limit_ + 1)
        throw RangeError("primitive class table cell count does not match its limit");
}

std::uint64_t PrimitiveClassTable::count(std::uint64_t n) const {
    if (n > limit_)
        throw RangeError("htilde(-" + std::to_string(n) + ") beyond table limit " +
                         std::to_string(limit_));
    return cells_[n];
}

PrimitiveClassTable sieve_primitive(std::uint64_t limit, unsigned threads) {
    check_capacity(limit);
    std::vector<std::uint32_t> cells(limit + 1, 0);
    const std::uint64_t n_blocks = limit / kBlockCells + 1;
    parallel_blocks(n_blocks, resolve_thread_count(threads), [&](std::uint64_t blk) {
        const std::uint64_t lo = blk * kBlockCells;
        const std::uint64_t hi = std::min(limit + 1, lo + kBlockCells);
        if (lo >= hi) return;
        const std::uint64_t a_max = max_a_below(hi);
        for (std::uint64_t a = 1; a <= a_max; ++a) {
            const std::uint64_t fa = 4 * a;
            for (std::uint64_t b = 0; b <= a; ++b) {
                const std::uint64_t bb = b * b;
                std::uint64_t c = a;
                if (lo + bb > fa * a) c = (lo + bb + fa - 1) / fa;
                const std::uint64_t c_end = (hi - 1 + bb) / fa;
                if (c > c_end) continue;
                std::uint64_t n = fa * c - bb;
                const std::uint64_t gab = std::gcd(a, b);
                const std::uint32_t twin = (b != 0 && b != a) ? 2u : 1u;
                if (gab == 1) {
                    if (c == a) {
                        cells[n] += 1;
                        ++c;
                        n += fa;
                    }
                    for (; c <= c_end; ++c, n += fa) cells[n] += twin;
                } else {
                    // gcd(a,b) > 1: primitivity now depends on c; c = a can never
                    // qualify since gcd(a,b,a) = gab
                    if (c == a) {
                        ++c;
                        n += fa;
                    }
                    for (; c <= c_end; ++c, n += fa)
                        if (std::gcd(gab, c) == 1) cells[n] += twin;
                }
            }
        }
    });
    cells[0] = 0;
    return PrimitiveClassTable(limit, std::move(cells));
}

std::vector<std::uint32_t> r2_table(std::uint64_t limit) {
    check_capacity(limit);
    std::vector<std::uint32_t> r2(limit + 1, 0);
    for (std::uint64_t x = 0; x * x <= limit; ++x) {
        const std::uint32_t wx = x == 0 ? 1 : 2;
        for (std::uint64_t y = 0; x * x + y * y <= limit; ++y)
            r2[x * x + y * y] += wx * (y == 0 ? 1 : 2);
    }
    return r2;
}

std::vector<std::uint32_t> r3_table(std::uint64_t limit) {
    const std::vector<std::uint32_t> r2 = r2_table(limit);
    std::vector<std::uint32_t> r3(limit + 1, 0);
    for (std::uint64_t n = 0; n <= limit; ++n) {
        std::uint64_t acc = r2[n];
        for (std::uint64_t k = 1; k * k <= n; ++k) acc += 2 * r2[n - k * k];
        r3[n] = static_cast<std::uint32_t>(acc);
    }
    return r3;
}

double hurwitz_growth_constant(const ClassNumberTable& table) {
    const auto cells = table.raw();
    double best = 0;
    for (std::uint64_t n = 1; n < cells.size(); ++n) {
        if (cells[n] == 0) continue;
        const double h = cells[n] / 12.0;
        const double ratio = h / (std::sqrt(double(n)) * (1.0 + std::log(double(n))));
        if (ratio > best) best = ratio;
    }
    return best;
}

} // namespace hcn
