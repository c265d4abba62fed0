#ifndef HEIGHTZETA_QRATFUNC_HPP
#define HEIGHTZETA_QRATFUNC_HPP

#include <string>
#include <vector>

#include "heightzeta/qpoly.hpp"

namespace hz::qs {

/// Meaning of the formal variable: w = base^(-s/d).
struct VarTag {
    Integer base = 1;
    unsigned d = 1;

    friend bool operator==(const VarTag& a, const VarTag& b) { return a.base == b.base && a.d == b.d; }
};

/// Exact rational function in w. Canonical form: gcd(num, den) = 1 and the
/// lowest-order nonzero coefficient of den equals 1 (so den(0) = 1 whenever
/// den(0) != 0). Zero is 0/1.
class QRatFunc {
public:
    QRatFunc() : den_(QPoly::constant(1)) {}
    /// Throws std::domain_error on den = 0.
    QRatFunc(QPoly num, QPoly den, VarTag tag);
    static QRatFunc constant(const Rational& c, VarTag tag) { return QRatFunc(QPoly::constant(c), QPoly::constant(1), std::move(tag)); }
    static QRatFunc poly(QPoly p, VarTag tag) { return QRatFunc(std::move(p), QPoly::constant(1), std::move(tag)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    const VarTag& tag() const { return tag_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
    /// Throws std::domain_error on division by the zero function.
    friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b);
    friend QRatFunc operator*(const Rational& s, const QRatFunc& a);
    QRatFunc operator-() const { return QRatFunc(-num_, den_, tag_); }
    QRatFunc pow(unsigned n) const;

    /// Structural equality of canonical forms (tag included).
    friend bool operator==(const QRatFunc& a, const QRatFunc& b)
    {
        return a.tag_ == b.tag_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Substitute w -> w^k and retag. Used when changing variables
    /// (u_v = w^f_v, x = w^d).
    QRatFunc substitute_power(unsigned k, VarTag new_tag) const;

    /// Taylor coefficients a_0..a_M at w = 0. Requires den(0) != 0.
    std::vector<Rational> series(unsigned M) const;

    std::string to_string(const std::string& var = "w") const;

private:
    void canonicalize();
    QPoly num_, den_;
    VarTag tag_;
};

} // namespace hz::qs

#endif
