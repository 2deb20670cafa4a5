#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ecom/exactla/int_matrix.hpp"

namespace ecom::coinv {

using exactla::Integer;
using exactla::Rational;

/// Element of F_P.
template <std::uint32_t P>
struct Zp {
    std::uint32_t v = 0;

    Zp() = default;
    Zp(long x) : v(static_cast<std::uint32_t>(((x % long(P)) + long(P)) % long(P))) {}

    friend Zp operator+(Zp a, Zp b) { return Zp(long(a.v) + long(b.v)); }
    friend Zp operator-(Zp a, Zp b) { return Zp(long(a.v) - long(b.v)); }
    friend Zp operator*(Zp a, Zp b) { return Zp(long(std::uint64_t(a.v) * b.v % P)); }
    Zp operator-() const { return Zp(-long(v)); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }
    friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
    friend bool operator!=(Zp a, Zp b) { return a.v != b.v; }
    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v; }
};

/// Per-ring conversions used by the quotient arithmetic.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
    static constexpr bool is_field_of_char_zero = false;
    static Integer from_integer(const Integer& x) { return x; }
    static bool is_zero(const Integer& x) { return sgn(x) == 0; }
    static std::string str(const Integer& x) { return x.get_str(); }
    static const char* ring_name() { return "Z"; }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_field_of_char_zero = true;
    static Rational from_integer(const Integer& x) { return Rational(x); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::string str(const Rational& x) { return x.get_str(); }
    static const char* ring_name() { return "Q"; }
};

template <std::uint32_t P>
struct ScalarTraits<Zp<P>> {
    static constexpr bool is_field_of_char_zero = false;
    static Zp<P> from_integer(const Integer& x) {
        return Zp<P>(static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), P)));
    }
    static bool is_zero(const Zp<P>& x) { return x.v == 0; }
    static std::string str(const Zp<P>& x) { return std::to_string(x.v); }
    static const char* ring_name() { return P == 2 ? "F2" : P == 3 ? "F3" : "Fp"; }
};

}  // namespace ecom::coinv
