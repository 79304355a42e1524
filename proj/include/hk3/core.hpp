#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hk3 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a caller violates a documented precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant that the mathematics guarantees fails.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool cond, const char* what)
{
    if (!cond)
        throw InvariantViolation(what);
}

/// Small dense matrix with value semantics. Only the ring operations the
/// library needs are provided.
template <class T, std::size_t R, std::size_t C>
struct Mat {
    std::array<std::array<T, C>, R> a{};

    static constexpr std::size_t rows = R;
    static constexpr std::size_t cols = C;

    T& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

    static Mat zero()
    {
        Mat m;
        for (auto& row : m.a)
            for (auto& x : row)
                x = T(0);
        return m;
    }

    static Mat identity()
    {
        static_assert(R == C);
        Mat m = zero();
        for (std::size_t i = 0; i < R; ++i)
            m.a[i][i] = T(1);
        return m;
    }

    Mat<T, C, R> transpose() const
    {
        Mat<T, C, R> t;
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j)
                t.a[j][i] = a[i][j];
        return t;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }

    friend Mat operator+(const Mat& x, const Mat& y)
    {
        Mat s;
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j)
                s.a[i][j] = x.a[i][j] + y.a[i][j];
        return s;
    }

    friend Mat operator-(const Mat& x, const Mat& y)
    {
        Mat s;
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j)
                s.a[i][j] = x.a[i][j] - y.a[i][j];
        return s;
    }

    friend Mat operator-(const Mat& x)
    {
        Mat s;
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j)
                s.a[i][j] = -x.a[i][j];
        return s;
    }

    template <std::size_t K>
    friend Mat<T, R, K> operator*(const Mat& x, const Mat<T, C, K>& y)
    {
        Mat<T, R, K> p = Mat<T, R, K>::zero();
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t k = 0; k < C; ++k) {
                if (x.a[i][k] == T(0))
                    continue;
                for (std::size_t j = 0; j < K; ++j)
                    p.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        return p;
    }
};

/// Deterministic generator: mt19937_64 is bit-specified by the standard,
/// unlike the standard distributions, so draws are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// n / d in lowest terms; throws Error for d = 0.
Rational ratio(const Integer& n, const Integer& d);

/// "p/q" or "p" rendering; the inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

/// Nearest integer to q, halves rounded toward zero.
Integer round_half_to_zero(const Rational& q);

} // namespace hk3
