/**
 * @file scalar.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are stored as a common denominator over an integer numerator
 * vector on the power basis 1, z, ..., z^(phi(N)-1) reduced modulo the
 * N-th cyclotomic polynomial. Small values live in int64 slots; anything
 * that would overflow is promoted to GMP integers and demoted again as
 * soon as it fits, so the representation is canonical.
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace z3z3 {

using Rational = mpq_class;

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

constexpr int mobius(int n) {
    int k = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++k;
        }
    }
    if (n > 1) ++k;
    return (k % 2) ? -1 : 1;
}

inline u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

inline u128 gcd_u128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    // binary gcd; both operands fit comfortably so no overflow concerns
    int shift = 0;
    while (((a | b) & 1) == 0) { a >>= 1; b >>= 1; ++shift; }
    while ((a & 1) == 0) a >>= 1;
    while (b != 0) {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) { u128 t = a; a = b; b = t; }
        b -= a;
    }
    return a << shift;
}

inline int bit_length(u128 x) {
    int n = 0;
    while (x) { x >>= 1; ++n; }
    return n;
}

inline bool fits_i64(i128 x) {
    return x >= i128(INT64_MIN) && x <= i128(INT64_MAX);
}

inline mpz_class to_mpz(i128 x) {
    bool neg = x < 0;
    u128 u = uabs(x);
    mpz_class hi = static_cast<unsigned long>(uint64_t(u >> 64));
    mpz_class lo = static_cast<unsigned long>(uint64_t(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

inline mpz_class to_mpz(int64_t x) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(x));
    return r;
}

// Integer tables for Q(zeta_N): the cyclotomic polynomial and the reductions
// z^m mod Phi_N for 0 <= m < max(N, 2 phi - 1).
template <int N>
struct CycTables {
    static constexpr int D = euler_phi(N);
    std::vector<long long> poly;                // degree D, monic
    std::vector<std::array<long long, D>> pow;  // z^m reduced
    std::array<std::array<long long, D>, D> conj_mat{};  // column k = image of z^k
    int growth_bits = 0;  // bound on coefficient growth during product reduction

    CycTables() {
        std::vector<long long> p{1};
        std::vector<int> denom;
        for (int d = 1; d <= N; ++d) {
            if (N % d) continue;
            int mu = mobius(N / d);
            if (mu == 1) {
                std::vector<long long> q(p.size() + d, 0);
                for (size_t i = 0; i < p.size(); ++i) { q[i + d] += p[i]; q[i] -= p[i]; }
                p = q;
            } else if (mu == -1) {
                denom.push_back(d);
            }
        }
        for (int d : denom) {
            // exact division by z^d - 1, from the top
            std::vector<long long> q(p.size() - d, 0);
            for (size_t i = p.size() - 1; i + 1 > size_t(d); --i) {
                q[i - d] = p[i];
                p[i - d] += p[i];
                p[i] = 0;
                if (i == size_t(d)) break;
            }
            for (long long c : p)
                if (c != 0) throw std::logic_error("cyclotomic division not exact");
            // sign: (z^d-1) factors carry -1 constants; q is correct up to the
            // loop above which divides p by (z^d - 1) exactly
            p = q;
        }
        if (int(p.size()) != D + 1 || p[D] != 1) throw std::logic_error("bad cyclotomic polynomial");
        poly = p;

        int top = std::max(N, 2 * D - 1);
        pow.resize(top);
        std::array<long long, D> cur{};
        cur[0] = 1;
        for (int m = 0; m < top; ++m) {
            pow[m] = cur;
            // multiply by z and reduce
            long long carry = cur[D - 1];
            for (int j = D - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (int j = 0; j < D; ++j) cur[j] -= carry * poly[j];
        }
        for (int k = 0; k < D; ++k) {
            const auto& img = pow[(N - k) % N];
            for (int j = 0; j < D; ++j) conj_mat[j][k] = img[j];
        }
        u128 worst = 0;
        for (int j = 0; j < D; ++j) {
            u128 s = 1;
            for (int k = D; k < 2 * D - 1; ++k) s += uabs(pow[k][j]);
            if (s > worst) worst = s;
        }
        u128 cw = 0;
        for (int j = 0; j < D; ++j) {
            u128 s = 0;
            for (int k = 0; k < D; ++k) s += uabs(conj_mat[j][k]);
            if (s > cw) cw = s;
        }
        growth_bits = std::max(bit_length(worst), bit_length(cw)) + bit_length(u128(D));
    }

    static const CycTables& get() {
        static const CycTables t;
        return t;
    }
};

}  // namespace detail

/// Element of Q(zeta_N). Value semantics, immutable, thread-safe to share.
template <int N>
class Cyc {
public:
    static constexpr int conductor = N;
    static constexpr int degree = detail::euler_phi(N);

private:
    static constexpr int D = degree;
    using i128 = detail::i128;
    using u128 = detail::u128;
    using Tables = detail::CycTables<N>;

    struct Big {
        std::array<mpz_class, D> num;
        mpz_class den;
    };

    // invariant: when big_ is null the value is num_/den_ with gcd 1, den_ > 0;
    // big_ is set only when some entry does not fit int64
    std::array<int64_t, D> num_{};
    int64_t den_ = 1;
    std::shared_ptr<const Big> big_;

    Big as_big() const {
        if (big_) return *big_;
        Big b;
        for (int k = 0; k < D; ++k) b.num[k] = detail::to_mpz(num_[k]);
        b.den = detail::to_mpz(den_);
        return b;
    }

    static Cyc from_big(Big b) {
        if (b.den == 0) throw std::domain_error("zero denominator");
        if (b.den < 0) {
            b.den = -b.den;
            for (auto& c : b.num) c = -c;
        }
        mpz_class g = b.den;
        for (auto& c : b.num) {
            if (g == 1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (g != 1) {
            b.den /= g;
            for (auto& c : b.num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        bool small = b.den.fits_slong_p();
        for (auto& c : b.num) small = small && c.fits_slong_p();
        Cyc r;
        if (small) {
            for (int k = 0; k < D; ++k) r.num_[k] = b.num[k].get_si();
            r.den_ = b.den.get_si();
        } else {
            r.big_ = std::make_shared<const Big>(std::move(b));
        }
        return r;
    }

    // numerators in i128 over a positive i128 denominator
    static Cyc from_wide(std::array<i128, D>& num, i128 den) {
        if (den < 0) {
            den = -den;
            for (auto& c : num) c = -c;
        }
        if (den != 1) {
            u128 g = detail::uabs(den);
            for (int k = 0; k < D && g != 1; ++k)
                if (num[k] != 0) g = detail::gcd_u128(g, detail::uabs(num[k]));
            if (g != 1) {
                den /= i128(g);
                for (auto& c : num) c /= i128(g);
            }
        }
        bool small = detail::fits_i64(den);
        for (int k = 0; k < D && small; ++k) small = detail::fits_i64(num[k]);
        if (small) {
            Cyc r;
            for (int k = 0; k < D; ++k) r.num_[k] = int64_t(num[k]);
            r.den_ = int64_t(den);
            return r;
        }
        Big b;
        for (int k = 0; k < D; ++k) b.num[k] = detail::to_mpz(num[k]);
        b.den = detail::to_mpz(den);
        return from_big(std::move(b));
    }

    int max_bits() const {
        u128 m = 0;
        for (auto c : num_) {
            u128 a = detail::uabs(c);
            if (a > m) m = a;
        }
        return detail::bit_length(m);
    }

    static Cyc add_sub(const Cyc& a, const Cyc& b, bool sub) {
        if (!a.big_ && !b.big_) {
            std::array<i128, D> num;
            if (a.den_ == b.den_) {
                for (int k = 0; k < D; ++k)
                    num[k] = sub ? i128(a.num_[k]) - b.num_[k] : i128(a.num_[k]) + b.num_[k];
                return from_wide(num, a.den_);
            }
            i128 g = i128(detail::gcd_u128(u128(a.den_), u128(b.den_)));
            i128 fa = b.den_ / g, fb = a.den_ / g;
            i128 den = fa * a.den_;
            if (detail::bit_length(u128(den)) < 126) {
                for (int k = 0; k < D; ++k) {
                    i128 x = a.num_[k] * fa, y = b.num_[k] * fb;
                    num[k] = sub ? x - y : x + y;
                }
                return from_wide(num, den);
            }
        }
        Big x = a.as_big(), y = b.as_big(), r;
        r.den = x.den * y.den;
        for (int k = 0; k < D; ++k)
            r.num[k] = sub ? mpz_class(x.num[k] * y.den - y.num[k] * x.den)
                           : mpz_class(x.num[k] * y.den + y.num[k] * x.den);
        return from_big(std::move(r));
    }

    static Cyc mul_impl(const Cyc& a, const Cyc& b) {
        const Tables& t = Tables::get();
        if (!a.big_ && !b.big_ && a.max_bits() + b.max_bits() + t.growth_bits < 124) {
            std::array<i128, 2 * D - 1> raw{};
            for (int i = 0; i < D; ++i) {
                if (a.num_[i] == 0) continue;
                i128 ai = a.num_[i];
                for (int j = 0; j < D; ++j) raw[i + j] += ai * b.num_[j];
            }
            std::array<i128, D> num;
            for (int j = 0; j < D; ++j) num[j] = raw[j];
            for (int k = D; k < 2 * D - 1; ++k) {
                if (raw[k] == 0) continue;
                const auto& red = t.pow[k];
                for (int j = 0; j < D; ++j)
                    if (red[j]) num[j] += raw[k] * red[j];
            }
            return from_wide(num, i128(a.den_) * b.den_);
        }
        Big x = a.as_big(), y = b.as_big();
        std::vector<mpz_class> raw(2 * D - 1);
        for (int i = 0; i < D; ++i) {
            if (x.num[i] == 0) continue;
            for (int j = 0; j < D; ++j) raw[i + j] += x.num[i] * y.num[j];
        }
        Big r;
        for (int j = 0; j < D; ++j) r.num[j] = raw[j];
        for (int k = D; k < 2 * D - 1; ++k) {
            if (raw[k] == 0) continue;
            for (int j = 0; j < D; ++j)
                if (t.pow[k][j]) r.num[j] += raw[k] * static_cast<long>(t.pow[k][j]);
        }
        r.den = x.den * y.den;
        return from_big(std::move(r));
    }

public:
    Cyc() = default;
    Cyc(long long v) { num_[0] = v; }  // NOLINT: implicit integer embedding is intended
    explicit Cyc(const Rational& q) {
        Big b;
        b.num[0] = q.get_num();
        b.den = q.get_den();
        *this = from_big(std::move(b));
    }

    /// zeta_N^k
    static Cyc zeta(long long k) {
        const Tables& t = Tables::get();
        long long m = ((k % N) + N) % N;
        Cyc r;
        for (int j = 0; j < D; ++j) r.num_[j] = t.pow[m][j];
        return r;
    }

    /// Coefficients on the power basis; length must be phi(N).
    static Cyc from_coeffs(const std::vector<Rational>& c) {
        if (int(c.size()) != D) throw std::invalid_argument("coefficient count must equal phi(N)");
        mpz_class den = 1;
        for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        Big b;
        b.den = den;
        for (int k = 0; k < D; ++k) b.num[k] = c[k].get_num() * (den / c[k].get_den());
        return from_big(std::move(b));
    }

    [[nodiscard]] Rational coeff(int k) const {
        if (k < 0 || k >= D) throw std::out_of_range("coefficient index");
        if (big_) {
            Rational q(big_->num[k], big_->den);
            q.canonicalize();
            return q;
        }
        Rational q(detail::to_mpz(num_[k]), detail::to_mpz(den_));
        q.canonicalize();
        return q;
    }

    [[nodiscard]] bool is_zero() const {
        if (big_) return false;  // zero always fits the small form
        for (auto c : num_)
            if (c) return false;
        return true;
    }

    [[nodiscard]] bool is_one() const {
        if (big_ || den_ != 1 || num_[0] != 1) return false;
        for (int k = 1; k < D; ++k)
            if (num_[k]) return false;
        return true;
    }

    /// Rough size measure used for pivot selection.
    [[nodiscard]] int height() const {
        if (big_) {
            size_t m = mpz_sizeinbase(big_->den.get_mpz_t(), 2);
            for (const auto& c : big_->num) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
            return int(m) + 64;
        }
        int nz = 0;
        for (auto c : num_) nz += (c != 0);
        return max_bits() + detail::bit_length(u128(den_)) + nz;
    }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (!a.big_ && !b.big_) return a.den_ == b.den_ && a.num_ == b.num_;
        if (a.big_ && b.big_) return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
        return false;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) { return add_sub(a, b, false); }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return add_sub(a, b, true); }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        if (a.is_zero() || b.is_zero()) return Cyc();
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        return mul_impl(a, b);
    }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }
    Cyc operator-() const {
        if (big_) {
            Big b = *big_;
            for (auto& c : b.num) c = -c;
            return from_big(std::move(b));
        }
        Cyc r = *this;
        for (auto& c : r.num_) {
            if (c == INT64_MIN) return Cyc() - *this;
            c = -c;
        }
        return r;
    }
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
    Cyc& operator/=(const Cyc& b) { return *this = *this / b; }

    /// Complex conjugation zeta -> zeta^-1; a field automorphism.
    [[nodiscard]] Cyc conj() const {
        const Tables& t = Tables::get();
        if (!big_ && max_bits() + t.growth_bits < 124) {
            std::array<i128, D> num{};
            for (int k = 0; k < D; ++k) {
                if (!num_[k]) continue;
                for (int j = 0; j < D; ++j)
                    if (t.conj_mat[j][k]) num[j] += i128(num_[k]) * t.conj_mat[j][k];
            }
            return from_wide(num, den_);
        }
        Big x = as_big(), r;
        for (int k = 0; k < D; ++k) {
            if (x.num[k] == 0) continue;
            for (int j = 0; j < D; ++j)
                if (t.conj_mat[j][k]) r.num[j] += x.num[k] * static_cast<long>(t.conj_mat[j][k]);
        }
        r.den = x.den;
        return from_big(std::move(r));
    }

    [[nodiscard]] bool is_real() const { return conj() == *this; }

    /// Multiplicative inverse via the phi(N) x phi(N) multiplication-by-x system.
    [[nodiscard]] Cyc inv() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta_N)");
        // single-term fast path: c z^k
        int nz = 0, pos = -1;
        for (int k = 0; k < D; ++k) {
            bool z = big_ ? big_->num[k] == 0 : num_[k] == 0;
            if (!z) { ++nz; pos = k; }
        }
        if (nz == 1) {
            Rational c = coeff(pos);
            Cyc r(Rational(1) / c);
            return pos == 0 ? r : r * zeta(-pos);
        }
        // columns: coefficients of x * z^j
        std::vector<std::vector<Rational>> m(D, std::vector<Rational>(D + 1));
        for (int j = 0; j < D; ++j) {
            Cyc col = *this * zeta(j);
            for (int i = 0; i < D; ++i) m[i][j] = col.coeff(i);
        }
        m[0][D] = 1;
        for (int c = 0; c < D; ++c) {
            int p = c;
            while (p < D && m[p][c] == 0) ++p;
            if (p == D) throw std::logic_error("singular multiplication matrix");
            std::swap(m[p], m[c]);
            Rational piv = m[c][c];
            for (int j = c; j <= D; ++j) m[c][j] /= piv;
            for (int r = 0; r < D; ++r) {
                if (r == c || m[r][c] == 0) continue;
                Rational f = m[r][c];
                for (int j = c; j <= D; ++j) m[r][j] -= f * m[c][j];
            }
        }
        std::vector<Rational> y(D);
        for (int i = 0; i < D; ++i) y[i] = m[i][D];
        return from_coeffs(y);
    }

    /// Numerical embedding zeta -> exp(2 pi i / N). Diagnostics only.
    [[nodiscard]] std::complex<double> to_complex() const {
        std::complex<long double> s = 0;
        long double den = big_ ? big_->den.get_d() : static_cast<long double>(den_);
        for (int k = 0; k < D; ++k) {
            long double c = big_ ? big_->num[k].get_d() : static_cast<long double>(num_[k]);
            if (c == 0) continue;
            long double ang = 2.0L * std::numbers::pi_v<long double> * k / N;
            s += c * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        s /= den;
        return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }

    [[nodiscard]] std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < D; ++k) {
            Rational c = coeff(k);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rational a = abs(c);
            if (k == 0 || a != 1) os << a.get_str();
            if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << "z^" << k;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

using CycScalar = Cyc<36>;
using Cyc180 = Cyc<180>;

/// zeta_M^k inside Q(zeta_N); M must divide N.
template <class F>
F root_of_unity(long long k, int m) {
    if (m <= 0 || F::conductor % m != 0)
        throw std::invalid_argument("root_of_unity: conductor " + std::to_string(m) +
                                    " does not divide " + std::to_string(F::conductor));
    return F::zeta(k * (F::conductor / m));
}

template <class F>
F conj(const F& x) { return x.conj(); }

template <class F>
std::complex<double> to_float(const F& x) { return x.to_complex(); }

template <class F>
F pow(F x, long long e) {
    if (e < 0) { x = x.inv(); e = -e; }
    F r(1);
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

/// Named constants of the field. Require 36 | N.
template <class F>
struct K {
    static F i() { return root_of_unity<F>(1, 4); }
    static F omega() { return root_of_unity<F>(1, 3); }
    static F nu() { return root_of_unity<F>(1, 9); }
    static F half() { return F(Rational(1, 2)); }
    /// sqrt(3) = zeta_12 + zeta_12^-1
    static F sqrt3() { return root_of_unity<F>(1, 12) + root_of_unity<F>(-1, 12); }
    /// cos(2 pi k / 36) and sin(2 pi k / 36)
    static F cos36(long long k) { return (root_of_unity<F>(k, 36) + root_of_unity<F>(-k, 36)) * half(); }
    static F sin36(long long k) {
        return (root_of_unity<F>(k, 36) - root_of_unity<F>(-k, 36)) * (i() * F(2)).inv();
    }
};

}  // namespace z3z3
