#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace nudcode::gf256 {

// Field of order 256 modulo x^8 + x^4 + x^3 + x + 1.
inline constexpr unsigned polynomial = 0x11B;

using Element = std::uint8_t;

namespace detail {

struct Tables {
    std::array<Element, 512> exp{};
    std::array<int, 256> log{};
};

// 0x03 generates the multiplicative group for this polynomial.
constexpr Tables make_tables() {
    Tables t;
    unsigned x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[i] = static_cast<Element>(x);
        t.log[x] = i;
        unsigned y = x << 1;
        if (y & 0x100) y ^= polynomial;
        x ^= y;
    }
    for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
    t.log[0] = -1;
    return t;
}

inline constexpr Tables tables = make_tables();

}  // namespace detail

constexpr Element add(Element a, Element b) noexcept { return a ^ b; }
constexpr Element sub(Element a, Element b) noexcept { return a ^ b; }

constexpr Element mul(Element a, Element b) noexcept {
    if (a == 0 || b == 0) return 0;
    return detail::tables.exp[detail::tables.log[a] + detail::tables.log[b]];
}

// Shift-and-reduce multiply, independent of the tables.
constexpr Element mul_slow(Element a, Element b) noexcept {
    unsigned r = 0, x = a;
    for (unsigned y = b; y; y >>= 1) {
        if (y & 1) r ^= x;
        x <<= 1;
        if (x & 0x100) x ^= polynomial;
    }
    return static_cast<Element>(r);
}

// ZeroInverseError for 0.
Element inv(Element a);
Element div(Element a, Element b);

using Matrix = std::vector<std::vector<Element>>;

std::size_t rank(Matrix m);
bool invertible(const Matrix& m);
// ZeroInverseError when singular.
Matrix inverse(const Matrix& m);
std::vector<Element> multiply(const Matrix& m, const std::vector<Element>& x);

}  // namespace nudcode::gf256
