#pragma once

// Exact arithmetic in Q(i).

#include "twistor/integer.hpp"

#include <optional>
#include <random>
#include <string>

namespace twistor {

class GaussianScalar {
public:
    GaussianScalar() = default;
    GaussianScalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianScalar(long re) : GaussianScalar(Rational(re), Rational(0)) {}

    static GaussianScalar i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    GaussianScalar conj() const { return {re_, -im_}; }
    /// |x|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    friend GaussianScalar operator+(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianScalar operator-(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianScalar operator-(const GaussianScalar& a) { return {-a.re_, -a.im_}; }
    friend GaussianScalar operator*(const GaussianScalar& a, const GaussianScalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianScalar operator/(const GaussianScalar& a, const GaussianScalar& b) {
        Rational n = b.norm();
        if (n == 0)
            throw Error("GaussianScalar: division by zero");
        GaussianScalar p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }
    GaussianScalar& operator+=(const GaussianScalar& o) { return *this = *this + o; }
    GaussianScalar& operator*=(const GaussianScalar& o) { return *this = *this * o; }

    friend bool operator==(const GaussianScalar& a, const GaussianScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// "3/5+4/5i" style.
inline std::string to_string(const GaussianScalar& x) {
    if (x.im() == 0)
        return x.re().get_str();
    std::string im = abs(x.im()) == 1 ? "i" : Rational(abs(x.im())).get_str() + "i";
    if (x.re() == 0)
        return (x.im() < 0 ? "-" : "") + im;
    return x.re().get_str() + (x.im() < 0 ? "-" : "+") + im;
}

/// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0)
        return std::nullopt;
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

/// Both square roots of c in Q(i), or nothing if c is not a square there. Ordered by imaginary part, then real part.
inline std::vector<GaussianScalar> gaussian_sqrt(const GaussianScalar& c) {
    if (c.is_zero())
        return {GaussianScalar()};
    // t = x+iy: x^2 - y^2 = re, 2xy = im, x^2 + y^2 = |c|.
    auto modulus = rational_sqrt(c.norm());
    if (!modulus)
        return {};
    auto x = rational_sqrt((*modulus + c.re()) / 2);
    auto y = rational_sqrt((*modulus - c.re()) / 2);
    if (!x || !y)
        return {};
    Rational yy = *y;
    if (c.im() < 0)
        yy = -yy;
    GaussianScalar root(*x, yy);
    GaussianScalar other = -root;
    if (other.im() < root.im() || (other.im() == root.im() && other.re() < root.re()))
        std::swap(root, other);
    return {root, other};
}

/// ((m^2-n^2) + 2mn i)/(m^2+n^2); unit modulus whenever (m,n) != (0,0).
inline GaussianScalar pythagorean_unit(long m, long n) {
    Integer mm = m, nn = n;
    Integer den = mm * mm + nn * nn;
    if (den == 0)
        throw Error("pythagorean_unit: (m,n) must not be (0,0)");
    return {Rational(mm * mm - nn * nn, den), Rational(2 * mm * nn, den)};
}

/// Deterministic samplers on a caller-owned engine.
inline long sample_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// A random unit of Q(i) from a Pythagorean triple, rotated by a random power of i.
inline GaussianScalar random_unit(std::mt19937_64& rng, long bound = 12) {
    long m = sample_int(rng, 0, bound), n = sample_int(rng, 0, bound);
    if (m == 0 && n == 0)
        m = 1;
    GaussianScalar u = pythagorean_unit(m, n);
    for (long k = sample_int(rng, 0, 3); k > 0; --k)
        u = u * GaussianScalar::i();
    return u;
}

/// Random element with numerators in [-bound, bound] and denominators in [1, bound].
inline GaussianScalar random_gaussian(std::mt19937_64& rng, long bound = 9) {
    auto q = [&] { return Rational(Integer(sample_int(rng, -bound, bound)), Integer(sample_int(rng, 1, bound))); };
    Rational re = q();
    Rational im = q();
    return {re, im};
}

}  // namespace twistor
