#ifndef HOPFKIT_FIELD_HPP
#define HOPFKIT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfkit {

/// The base field every structure lives over: the rationals, or a prime
/// field GF(p).  A value of p == 0 means Q.
struct FieldSpec {
    unsigned long p = 0;

    bool is_rationals() const { return p == 0; }
    bool is_prime_field() const { return p != 0; }
    unsigned long characteristic() const { return p; }

    bool operator==(const FieldSpec&) const = default;

    /// "Q" or "gf:<p>"
    std::string str() const;
    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(unsigned long p);
    static FieldSpec parse(const std::string& s);
};

bool is_prime(unsigned long n);

/// An exact field element.  Rationals are kept in lowest terms with a
/// positive denominator; GF(p) residues are kept in [0, p).  Arithmetic
/// never rounds, and mixing elements of different fields throws.
class Scalar {
  public:
    Scalar() : field_{0}, v_(0) {}
    explicit Scalar(FieldSpec f) : field_(f), v_(0) {}
    Scalar(FieldSpec f, long n) : field_(f), v_(n) { canonicalize(); }
    Scalar(FieldSpec f, long num, long den);
    Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) { canonicalize(); }

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }

    /// Accepts "n" or "n/d" over Q, a bare residue over GF(p).
    static Scalar parse(FieldSpec f, const std::string& text);
    std::string str() const;

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

  private:
    void canonicalize();
    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class v_;
};

}  // namespace hopfkit

#endif
