#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk3/core.hpp"

namespace hk3 {

/// Sparse polynomial in N variables with integer coefficients. Monomials are
/// packed into a 64-bit key, so each exponent is bounded by 2^(64/N) - 1.
template <std::size_t N>
class Poly {
public:
    static_assert(N >= 1 && N <= 10);
    static constexpr unsigned kBits = 64 / N;
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;

    using Exponents = std::array<unsigned, N>;
    using Point = std::array<Rational, N>;

    Poly() = default;

    static Poly constant(const Integer& c)
    {
        Poly p;
        if (c != 0)
            p.terms_.emplace(0, c);
        return p;
    }

    static Poly var(std::size_t i)
    {
        Exponents e{};
        e.at(i) = 1;
        return monomial(e, 1);
    }

    static Poly monomial(const Exponents& e, const Integer& c)
    {
        Poly p;
        if (c != 0)
            p.terms_.emplace(pack(e), c);
        return p;
    }

    static std::uint64_t pack(const Exponents& e)
    {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (e[i] > kMask)
                throw Error("Poly: exponent overflow");
            k |= std::uint64_t{e[i]} << (kBits * i);
        }
        return k;
    }

    static Exponents unpack(std::uint64_t k)
    {
        Exponents e{};
        for (std::size_t i = 0; i < N; ++i)
            e[i] = static_cast<unsigned>((k >> (kBits * i)) & kMask);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : unpack(k))
                s += x;
            d = std::max(d, s);
        }
        return d;
    }

    Integer coeff(const Exponents& e) const
    {
        auto it = terms_.find(pack(e));
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Terms sorted by packed key, for deterministic output.
    std::vector<std::pair<Exponents, Integer>> terms() const
    {
        std::vector<std::pair<std::uint64_t, Integer>> raw(terms_.begin(), terms_.end());
        std::sort(raw.begin(), raw.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<Exponents, Integer>> out;
        out.reserve(raw.size());
        for (auto& [k, c] : raw)
            out.emplace_back(unpack(k), std::move(c));
        return out;
    }

    Rational eval(const Point& x) const
    {
        Rational s = 0;
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            const auto e = unpack(k);
            for (std::size_t i = 0; i < N; ++i)
                for (unsigned j = 0; j < e[i]; ++j)
                    t *= x[i];
            s += t;
        }
        return s;
    }

    /// Rebuild with every monomial passed through f; coefficients of
    /// colliding images are added.
    Poly map_monomials(const std::function<Exponents(const Exponents&)>& f) const
    {
        Poly p;
        for (const auto& [k, c] : terms_)
            p.add_term(pack(f(unpack(k))), c);
        return p;
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly& operator+=(const Poly& y)
    {
        for (const auto& [k, c] : y.terms_)
            add_term(k, c);
        return *this;
    }
    Poly& operator-=(const Poly& y)
    {
        for (const auto& [k, c] : y.terms_)
            add_term(k, -c);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator-(const Poly& x)
    {
        Poly p = x;
        for (auto& [k, c] : p.terms_)
            c = -c;
        return p;
    }
    friend Poly operator*(const Integer& s, const Poly& x)
    {
        if (s == 0)
            return {};
        Poly p = x;
        for (auto& [k, c] : p.terms_)
            c *= s;
        return p;
    }

    friend Poly operator*(const Poly& x, const Poly& y)
    {
        Poly p;
        p.terms_.reserve(x.terms_.size() * 4);
        Integer t;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                // packed keys add componentwise as long as no field overflows;
                // the overflow check is done on the degree bound below
                t = cx * cy;
                p.add_term(kx + ky, t);
            }
        p.check_packing(x, y);
        return p;
    }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    Poly pow(unsigned e) const
    {
        Poly r = constant(1);
        for (unsigned i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

private:
    std::unordered_map<std::uint64_t, Integer> terms_;

    void add_term(std::uint64_t k, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    static unsigned max_exponent(const Poly& p)
    {
        unsigned m = 0;
        for (const auto& [k, c] : p.terms_)
            for (unsigned x : unpack(k))
                m = std::max(m, x);
        return m;
    }

    void check_packing(const Poly& x, const Poly& y) const
    {
        if (max_exponent(x) + max_exponent(y) > kMask)
            throw Error("Poly: exponent overflow in product");
    }
};

using PolyZ = Poly<5>;

} // namespace hk3
