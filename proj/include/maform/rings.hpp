// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "maform/errors.hpp"

namespace maform {

using Integer = boost::multiprecision::cpp_int;

// Single bit of Z_2.
using Bit = std::uint8_t;

inline Bit int_parity(const Integer& x) { return static_cast<Bit>(x % 2 != 0); }

// ---------------------------------------------------------------------------
// Residue: an element of Z_2[omega], written as the digit string pqrs for
// p*w^3 + q*w^2 + r*w + s. Packed p..s from the high bit down.
// ---------------------------------------------------------------------------
class Residue {
  public:
    constexpr Residue() noexcept : bits_(0) {}
    constexpr explicit Residue(std::uint8_t bits) noexcept : bits_(bits & 0xF) {}
    constexpr Residue(Bit p, Bit q, Bit r, Bit s) noexcept
        : bits_(static_cast<std::uint8_t>((p << 3) | (q << 2) | (r << 1) | s)) {}

    constexpr std::uint8_t bits() const noexcept { return bits_; }
    constexpr Bit p() const noexcept { return (bits_ >> 3) & 1; }
    constexpr Bit q() const noexcept { return (bits_ >> 2) & 1; }
    constexpr Bit r() const noexcept { return (bits_ >> 1) & 1; }
    constexpr Bit s() const noexcept { return bits_ & 1; }

    constexpr bool operator==(const Residue&) const noexcept = default;

    constexpr Residue operator+(Residue o) const noexcept {
        return Residue(static_cast<std::uint8_t>(bits_ ^ o.bits_));
    }

    // Product in Z_2[omega], using w^4 = -1 = 1 (mod 2).
    constexpr Residue operator*(Residue o) const noexcept {
        std::uint8_t acc = 0;
        for (int i = 0; i < 4; ++i) {
            if (!((bits_ >> i) & 1)) continue;
            for (int j = 0; j < 4; ++j) {
                if (!((o.bits_ >> j) & 1)) continue;
                acc ^= static_cast<std::uint8_t>(1u << ((i + j) % 4));
            }
        }
        return Residue(acc);
    }

    // Multiplication by omega: the digit string rotates left.
    constexpr Residue times_omega() const noexcept {
        return Residue(static_cast<std::uint8_t>(((bits_ << 1) | (bits_ >> 3)) & 0xF));
    }

    constexpr Residue shifted(int n) const noexcept {
        Residue r = *this;
        for (int i = 0; i < (n & 3); ++i) r = r.times_omega();
        return r;
    }

    // A residue is reducible when it is sqrt(2) times another residue.
    constexpr bool reducible() const noexcept {
        return bits_ == 0b0000 || bits_ == 0b0101 || bits_ == 0b1010 || bits_ == 0b1111;
    }

    std::string str() const {
        std::string out(4, '0');
        out[0] = static_cast<char>('0' + p());
        out[1] = static_cast<char>('0' + q());
        out[2] = static_cast<char>('0' + r());
        out[3] = static_cast<char>('0' + s());
        return out;
    }

  private:
    std::uint8_t bits_;
};

// ---------------------------------------------------------------------------
// ZRoot2: quadratic integers a + b*sqrt(2).
// ---------------------------------------------------------------------------
class ZRoot2 {
  public:
    ZRoot2() : a_(0), b_(0) {}
    ZRoot2(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }

    bool operator==(const ZRoot2&) const = default;

    ZRoot2 operator+(const ZRoot2& o) const { return {a_ + o.a_, b_ + o.b_}; }
    ZRoot2 operator-(const ZRoot2& o) const { return {a_ - o.a_, b_ - o.b_}; }
    ZRoot2 operator-() const { return {-a_, -b_}; }
    ZRoot2 operator*(const ZRoot2& o) const {
        return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    Bit parity() const { return int_parity(a_); }

    // sqrt(2) * (a + b*sqrt(2)) = 2b + a*sqrt(2)
    ZRoot2 times_sqrt2() const { return {2 * b_, a_}; }

    bool divisible_by_sqrt2() const { return a_ % 2 == 0; }

    ZRoot2 div_sqrt2() const {
        if (!divisible_by_sqrt2()) throw DivisibilityError("ZRoot2: not divisible by sqrt(2)");
        return {b_, a_ / 2};
    }

    std::string str() const { return "(" + a_.str() + "," + b_.str() + ")"; }

  private:
    Integer a_, b_;
};

// ---------------------------------------------------------------------------
// ZOmega: cyclotomic integers of degree 8, a*w^3 + b*w^2 + c*w + d with
// w = exp(i*pi/4). sqrt(2) = w - w^3 inside this ring.
// ---------------------------------------------------------------------------
class ZOmega {
  public:
    ZOmega() : a_(0), b_(0), c_(0), d_(0) {}
    ZOmega(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static ZOmega from_int(Integer x) { return {0, 0, 0, std::move(x)}; }
    static ZOmega omega_power(int n);

    // Embedding of Z[sqrt(2)]: a + b*sqrt(2) -> b(w - w^3) + a.
    static ZOmega from_zroot2(const ZRoot2& x) { return {-x.b(), 0, x.b(), x.a()}; }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }

    bool operator==(const ZOmega&) const = default;

    ZOmega operator+(const ZOmega& o) const {
        return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
    }
    ZOmega operator-(const ZOmega& o) const {
        return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
    }
    ZOmega operator-() const { return {-a_, -b_, -c_, -d_}; }

    ZOmega operator*(const ZOmega& o) const {
        // Convolution reduced by w^4 = -1.
        return {a_ * o.d_ + b_ * o.c_ + c_ * o.b_ + d_ * o.a_,
                b_ * o.d_ + c_ * o.c_ + d_ * o.b_ - a_ * o.a_,
                c_ * o.d_ + d_ * o.c_ - a_ * o.b_ - b_ * o.a_,
                d_ * o.d_ - a_ * o.c_ - b_ * o.b_ - c_ * o.a_};
    }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

    // Complex conjugate: w^j -> w^-j.
    ZOmega conj() const { return {-c_, -b_, -a_, d_}; }

    Residue residue() const {
        return Residue(int_parity(a_), int_parity(b_), int_parity(c_), int_parity(d_));
    }

    // t * (w - w^3)
    ZOmega times_sqrt2() const { return {b_ - d_, a_ + c_, b_ + d_, c_ - a_}; }

    bool divisible_by_sqrt2() const { return residue().reducible(); }

    ZOmega div_sqrt2() const {
        // t / sqrt(2) = t * sqrt(2) / 2
        ZOmega s = times_sqrt2();
        if (s.a_ % 2 != 0 || s.b_ % 2 != 0 || s.c_ % 2 != 0 || s.d_ % 2 != 0)
            throw DivisibilityError("ZOmega: not divisible by sqrt(2)");
        return {s.a_ / 2, s.b_ / 2, s.c_ / 2, s.d_ / 2};
    }

    // (t + conj(t)) / sqrt(2), always defined; equals -d*w^3 + d*w + (c - a).
    ZOmega symm_div() const { return {-d_, 0, d_, c_ - a_}; }

    std::string str() const {
        return "(" + a_.str() + "," + b_.str() + "," + c_.str() + "," + d_.str() + ")";
    }

  private:
    Integer a_, b_, c_, d_;
};

inline ZOmega ZOmega::omega_power(int n) {
    n = ((n % 8) + 8) % 8;
    Integer sign = (n < 4) ? 1 : -1;
    switch (n % 4) {
        case 0: return {0, 0, 0, sign};
        case 1: return {0, 0, sign, 0};
        case 2: return {0, sign, 0, 0};
        default: return {sign, 0, 0, 0};
    }
}

// ---------------------------------------------------------------------------
// DRoot2: num / sqrt(2)^k with num in Z[sqrt(2)]. Always stored reduced,
// so equality is structural and lde() is a field read.
// ---------------------------------------------------------------------------
class DRoot2 {
  public:
    DRoot2() : num_(), k_(0) {}
    DRoot2(ZRoot2 num, unsigned k) : num_(std::move(num)), k_(k) { reduce(); }
    static DRoot2 from_int(Integer x) { return DRoot2(ZRoot2(std::move(x), 0), 0); }

    const ZRoot2& num() const noexcept { return num_; }
    unsigned lde() const noexcept { return k_; }

    bool operator==(const DRoot2&) const = default;

    DRoot2 operator+(const DRoot2& o) const {
        unsigned k = std::max(k_, o.k_);
        return DRoot2(lifted(k) + o.lifted(k), k);
    }
    DRoot2 operator-(const DRoot2& o) const {
        unsigned k = std::max(k_, o.k_);
        return DRoot2(lifted(k) - o.lifted(k), k);
    }
    DRoot2 operator-() const { return DRoot2(-num_, k_); }
    DRoot2 operator*(const DRoot2& o) const { return DRoot2(num_ * o.num_, k_ + o.k_); }

    bool is_zero() const noexcept { return num_.is_zero(); }

    // Parity of sqrt(2)^k * this; requires k to be a denominator exponent.
    Bit k_parity(unsigned k) const { return numerator_at(k).parity(); }

    // sqrt(2)^k * this as a quadratic integer; k must be a denominator exponent.
    ZRoot2 numerator_at(unsigned k) const {
        if (k < k_) throw ExponentError("DRoot2: k below least denominator exponent");
        return lifted(k);
    }

    std::string str() const { return num_.str() + "/s2^" + std::to_string(k_); }

  private:
    void reduce() {
        while (k_ > 0 && num_.divisible_by_sqrt2()) {
            num_ = num_.div_sqrt2();
            --k_;
        }
    }

    // sqrt(2)^k * this, as a quadratic integer (k >= k_).
    ZRoot2 lifted(unsigned k) const {
        ZRoot2 x = num_;
        for (unsigned i = k_; i < k; ++i) x = x.times_sqrt2();
        return x;
    }

    ZRoot2 num_;
    unsigned k_;
};

// ---------------------------------------------------------------------------
// DOmega: num / sqrt(2)^k with num in Z[omega], stored reduced.
// ---------------------------------------------------------------------------
class DOmega {
  public:
    DOmega() : num_(), k_(0) {}
    DOmega(ZOmega num, unsigned k) : num_(std::move(num)), k_(k) { reduce(); }
    static DOmega from_int(Integer x) { return DOmega(ZOmega::from_int(std::move(x)), 0); }

    const ZOmega& num() const noexcept { return num_; }
    unsigned lde() const noexcept { return k_; }

    bool operator==(const DOmega&) const = default;

    DOmega operator+(const DOmega& o) const {
        unsigned k = std::max(k_, o.k_);
        return DOmega(lifted(k) + o.lifted(k), k);
    }
    DOmega operator-(const DOmega& o) const {
        unsigned k = std::max(k_, o.k_);
        return DOmega(lifted(k) - o.lifted(k), k);
    }
    DOmega operator-() const { return DOmega(-num_, k_); }
    DOmega operator*(const DOmega& o) const { return DOmega(num_ * o.num_, k_ + o.k_); }

    DOmega conj() const { return DOmega(num_.conj(), k_); }

    bool is_zero() const noexcept { return num_.is_zero(); }

    // Residue of sqrt(2)^k * this; requires k to be a denominator exponent.
    Residue k_residue(unsigned k) const { return numerator_at(k).residue(); }

    ZOmega numerator_at(unsigned k) const {
        if (k < k_) throw ExponentError("DOmega: k below least denominator exponent");
        return lifted(k);
    }

    // Exact conversion to Z[1/sqrt(2)]; requires the value to be real,
    // i.e. num = a*w^3 + c*w + d with c = -a. Then a*w^3 + c*w = c*sqrt(2).
    DRoot2 to_real() const {
        if (num_.b() != 0 || num_.a() != -num_.c())
            throw NotRealError("DOmega::to_real: value has a nonzero imaginary part");
        return DRoot2(ZRoot2(num_.d(), num_.c()), k_);
    }

    std::string str() const { return num_.str() + "/s2^" + std::to_string(k_); }

  private:
    void reduce() {
        while (k_ > 0 && num_.divisible_by_sqrt2()) {
            num_ = num_.div_sqrt2();
            --k_;
        }
    }

    ZOmega lifted(unsigned k) const {
        ZOmega x = num_;
        for (unsigned i = k_; i < k; ++i) x = x.times_sqrt2();
        return x;
    }

    ZOmega num_;
    unsigned k_;
};

}  // namespace maform
