#ifndef PMOD4_RINGS_HPP
#define PMOD4_RINGS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmod4 {

enum class RingTag { Integers, Mod2, Mod4 };

inline const char* ring_name(RingTag t) {
    switch (t) {
        case RingTag::Integers: return "Z";
        case RingTag::Mod2: return "Z/2";
        case RingTag::Mod4: return "Z/4";
    }
    throw std::logic_error("ring_name: bad tag");
}

// Canonically reduced residues.  Mixed-ring arithmetic cannot be expressed:
// the element types are distinct and never coerce.
struct Mod2 {
    std::uint8_t v = 0;
    friend Mod2 operator+(Mod2 a, Mod2 b) { return {std::uint8_t((a.v + b.v) & 1u)}; }
    friend Mod2 operator-(Mod2 a, Mod2 b) { return {std::uint8_t((a.v - b.v) & 1u)}; }
    friend Mod2 operator*(Mod2 a, Mod2 b) { return {std::uint8_t((a.v * b.v) & 1u)}; }
    Mod2 operator-() const { return {std::uint8_t(v & 1u)}; }
    Mod2& operator+=(Mod2 o) { v = (v + o.v) & 1u; return *this; }
    Mod2& operator-=(Mod2 o) { v = (v - o.v) & 1u; return *this; }
    friend bool operator==(Mod2 a, Mod2 b) { return a.v == b.v; }
};

struct Mod4 {
    std::uint8_t v = 0;
    friend Mod4 operator+(Mod4 a, Mod4 b) { return {std::uint8_t((a.v + b.v) & 3u)}; }
    friend Mod4 operator-(Mod4 a, Mod4 b) { return {std::uint8_t((a.v - b.v) & 3u)}; }
    friend Mod4 operator*(Mod4 a, Mod4 b) { return {std::uint8_t((a.v * b.v) & 3u)}; }
    Mod4 operator-() const { return {std::uint8_t((-v) & 3u)}; }
    Mod4& operator+=(Mod4 o) { v = (v + o.v) & 3u; return *this; }
    Mod4& operator-=(Mod4 o) { v = (v - o.v) & 3u; return *this; }
    friend bool operator==(Mod4 a, Mod4 b) { return a.v == b.v; }
};

template <class R>
struct ring_traits;

template <>
struct ring_traits<mpz_class> {
    static constexpr RingTag tag = RingTag::Integers;
    static mpz_class from_long(long long n) { return mpz_class(static_cast<long>(n)); }
    static bool is_zero(const mpz_class& x) { return x == 0; }
    static bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
    static mpz_class unit_inverse(const mpz_class& x) {
        if (!is_unit(x)) throw std::domain_error("unit_inverse: not a unit in Z");
        return x;
    }
    static std::string to_string(const mpz_class& x) { return x.get_str(); }
    static mpz_class from_string(const std::string& s) { return mpz_class(s); }
};

template <>
struct ring_traits<Mod2> {
    static constexpr RingTag tag = RingTag::Mod2;
    static Mod2 from_long(long long n) { return {std::uint8_t(n & 1)}; }
    static bool is_zero(Mod2 x) { return x.v == 0; }
    static bool is_unit(Mod2 x) { return x.v == 1; }
    static Mod2 unit_inverse(Mod2 x) {
        if (!is_unit(x)) throw std::domain_error("unit_inverse: not a unit in Z/2");
        return x;
    }
    static std::string to_string(Mod2 x) { return std::to_string(int(x.v)); }
    static Mod2 from_string(const std::string& s) { return from_long(std::stoll(s)); }
};

template <>
struct ring_traits<Mod4> {
    static constexpr RingTag tag = RingTag::Mod4;
    static Mod4 from_long(long long n) { return {std::uint8_t(n & 3)}; }
    static bool is_zero(Mod4 x) { return x.v == 0; }
    static bool is_unit(Mod4 x) { return (x.v & 1u) != 0; }
    static Mod4 unit_inverse(Mod4 x) {
        if (!is_unit(x)) throw std::domain_error("unit_inverse: not a unit in Z/4");
        return x;  // 1 and 3 are self-inverse
    }
    static std::string to_string(Mod4 x) { return std::to_string(int(x.v)); }
    static Mod4 from_string(const std::string& s) { return from_long(std::stoll(s)); }
};

}  // namespace pmod4

#endif
