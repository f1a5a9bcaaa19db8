#pragma once

// Arithmetic in Z4 and Z4^2. A Z4^2 element "ab" is packed as the integer
// 4*a+b in 0..15, so sets of Shrikhande vertices fit in 16-bit masks.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace doob {

using Z4 = uint8_t;     // value in 0..3
using Z4Pair = uint8_t; // 4*a+b, value in 0..15

inline Z4 z4_add(Z4 x, Z4 y) { return static_cast<Z4>((x + y) & 3); }
inline Z4 z4_neg(Z4 x) { return static_cast<Z4>((4 - x) & 3); }

inline Z4Pair make_pair(Z4 a, Z4 b) { return static_cast<Z4Pair>((a << 2) | b); }
inline Z4 pair_a(Z4Pair x) { return static_cast<Z4>(x >> 2); }
inline Z4 pair_b(Z4Pair x) { return static_cast<Z4>(x & 3); }

inline Z4Pair pair_add(Z4Pair x, Z4Pair y) {
    return make_pair(z4_add(pair_a(x), pair_a(y)), z4_add(pair_b(x), pair_b(y)));
}
inline Z4Pair pair_neg(Z4Pair x) {
    return make_pair(z4_neg(pair_a(x)), z4_neg(pair_b(x)));
}
inline Z4Pair pair_sub(Z4Pair x, Z4Pair y) { return pair_add(x, pair_neg(y)); }

// Smallest t >= 1 with t*x = 00. Always 1, 2 or 4 in Z4^2.
inline int pair_order(Z4Pair x) {
    if (x == 0) return 1;
    Z4 a = pair_a(x), b = pair_b(x);
    if ((a == 0 || a == 2) && (b == 0 || b == 2)) return 2;
    return 4;
}

// The named difference sets: A is the Shrikhande connecting set, B the three
// involutions, C the remaining order-4 elements.
enum class DiffClass { Zero, A, B, C };

// 16-bit membership masks, indexed by the packed encoding.
inline constexpr uint16_t kSetA =
    (1u << 0x1) | (1u << 0x3) | (1u << 0x4) | (1u << 0xC) | (1u << 0x5) | (1u << 0xF);
inline constexpr uint16_t kSetB = (1u << 0x2) | (1u << 0x8) | (1u << 0xA);
inline constexpr uint16_t kSetC =
    (1u << 0x6) | (1u << 0xE) | (1u << 0x7) | (1u << 0xD) | (1u << 0x9) | (1u << 0xB);

inline DiffClass classify_element(Z4Pair x) {
    if (x == 0) return DiffClass::Zero;
    if (kSetA & (1u << x)) return DiffClass::A;
    if (kSetB & (1u << x)) return DiffClass::B;
    return DiffClass::C;
}

inline DiffClass classify_difference(Z4Pair x, Z4Pair y) {
    return classify_element(pair_sub(x, y));
}

// Display format: two decimal digits "ab".
inline std::string pair_to_string(Z4Pair x) {
    std::string s(2, '0');
    s[0] = static_cast<char>('0' + pair_a(x));
    s[1] = static_cast<char>('0' + pair_b(x));
    return s;
}

inline Z4Pair pair_from_string(const std::string& s) {
    if (s.size() != 2 || s[0] < '0' || s[0] > '3' || s[1] < '0' || s[1] > '3')
        throw std::invalid_argument("bad Z4^2 element: '" + s + "'");
    return make_pair(static_cast<Z4>(s[0] - '0'), static_cast<Z4>(s[1] - '0'));
}

inline std::string z4_to_string(Z4 x) { return std::string(1, static_cast<char>('0' + x)); }

inline Z4 z4_from_string(const std::string& s) {
    if (s.size() != 1 || s[0] < '0' || s[0] > '3')
        throw std::invalid_argument("bad Z4 element: '" + s + "'");
    return static_cast<Z4>(s[0] - '0');
}

} // namespace doob
