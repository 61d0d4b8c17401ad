#include "hopfkit/field.hpp"

namespace hopfkit {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "gf:" + std::to_string(p);
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("gf:", 0) == 0 || s.rfind("GF:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(3));
        return prime_field(p);
    }
    throw std::invalid_argument("FieldSpec: cannot parse '" + s + "' (expected Q or gf:<p>)");
}

Scalar::Scalar(FieldSpec f, long num, long den) : field_(f), v_(num, den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    v_.canonicalize();
    if (field_.is_prime_field()) {
        if (v_.get_den() != 1) {
            // reduce a rational literal mod p: n/d -> n * d^{-1}
            mpz_class p(field_.p), dinv;
            if (mpz_invert(dinv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("Scalar: denominator not invertible mod " + std::to_string(field_.p));
            mpz_class n = v_.get_num() * dinv;
            v_ = mpq_class(n, 1);
        }
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(field_.p).get_mpz_t());
        v_ = mpq_class(r, 1);
    }
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::logic_error("Scalar: mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (is_zero() || o.is_zero()) return Scalar(field_);
    return Scalar(field_, mpq_class(v_ * o.v_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / v_));
    mpz_class p(field_.p), r;
    if (mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("Scalar: not invertible mod " + std::to_string(field_.p));
    return Scalar(field_, mpq_class(r, 1));
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    return *this * o.inv();
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field() || v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Scalar: empty literal");
    for (char c : text)
        if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("Scalar: bad literal '" + text + "'");
    mpq_class q(text);
    return Scalar(f, q);
}

}  // namespace hopfkit
