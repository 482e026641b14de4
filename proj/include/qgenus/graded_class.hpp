#pragma once

#include "qgenus/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qgenus {

/// Generator signature + truncation of the graded ring. Internal degrees:
/// u carries 1, p_i carries 2i (one internal degree unit = 2 real
/// cohomological degrees, so the top component of a dim-d form sits in
/// internal degree d/2).
struct RingSignature {
    int num_p = 0;       ///< generators p_1 .. p_num_p
    int max_degree = 0;  ///< internal degree cap D; products truncate here
    bool with_u = false; ///< Euler-class variable present

    friend bool operator==(const RingSignature& a, const RingSignature& b) {
        return a.num_p == b.num_p && a.max_degree == b.max_degree && a.with_u == b.with_u;
    }
    friend bool operator!=(const RingSignature& a, const RingSignature& b) { return !(a == b); }
};

/// Signature for a dimension-dim run: D = dim/2, p_1..p_{dim/4}.
inline RingSignature signature_for_dim(int dim, bool with_u) {
    if (dim <= 0 || dim % 4 != 0)
        throw std::invalid_argument("signature_for_dim: dimension must be a positive multiple of 4");
    return RingSignature{dim / 4, dim / 2, with_u};
}

class Monomial {
public:
    static constexpr int kMaxP = 12;

    Monomial() : p_{}, u_(0) {}

    static Monomial unit() { return Monomial(); }
    static Monomial p_gen(int i) {
        if (i < 1 || i > kMaxP)
            throw std::invalid_argument("Monomial: p-index out of range");
        Monomial m;
        m.p_[i - 1] = 1;
        return m;
    }
    static Monomial u_gen() {
        Monomial m;
        m.u_ = 1;
        return m;
    }

    int p_exp(int i) const { return p_[i - 1]; }
    int u_exp() const { return u_; }

    int degree() const {
        int d = u_;
        for (int i = 0; i < kMaxP; ++i)
            d += 2 * (i + 1) * p_[i];
        return d;
    }

    int max_p_index() const {
        for (int i = kMaxP - 1; i >= 0; --i)
            if (p_[i] != 0) return i + 1;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        m.u_ = static_cast<std::uint8_t>(u_ + o.u_);
        for (int i = 0; i < kMaxP; ++i)
            m.p_[i] = static_cast<std::uint8_t>(p_[i] + o.p_[i]);
        return m;
    }

    // Deterministic term order: by internal degree, then u, then p-exponents.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.u_ != b.u_) return a.u_ < b.u_;
        return a.p_ < b.p_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.u_ == b.u_ && a.p_ == b.p_;
    }

    bool is_unit() const { return degree() == 0; }

    /// "p1^2*p2*u^3"; the empty product prints as "1".
    std::string str() const {
        std::string s;
        for (int i = 0; i < kMaxP; ++i) {
            if (p_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "p" + std::to_string(i + 1);
            if (p_[i] > 1) s += "^" + std::to_string(static_cast<int>(p_[i]));
        }
        if (u_ > 0) {
            if (!s.empty()) s += "*";
            s += "u";
            if (u_ > 1) s += "^" + std::to_string(static_cast<int>(u_));
        }
        return s.empty() ? "1" : s;
    }

private:
    std::array<std::uint8_t, kMaxP> p_;
    std::uint8_t u_;
};

/// Truncated polynomial in the Pontryagin generators and u, with exact
/// Rational coefficients. Canonical form: zero coefficients are never
/// stored; terms are kept in a fixed deterministic order.
///
/// A default-constructed (or integer-constructed) value is a signature-free
/// scalar; it combines with any signature. Two operands carrying different
/// signatures are a structural error.
class GradedClass {
public:
    GradedClass() = default;
    GradedClass(int n) { set_term(Monomial::unit(), Rational(n)); }
    GradedClass(const Rational& c) { set_term(Monomial::unit(), c); }
    explicit GradedClass(const RingSignature& sig) : has_sig_(true), sig_(sig) {}
    GradedClass(const RingSignature& sig, const Rational& c) : has_sig_(true), sig_(sig) {
        set_term(Monomial::unit(), c);
    }

    static GradedClass p(const RingSignature& sig, int i) {
        if (i < 1 || i > sig.num_p)
            throw std::invalid_argument("GradedClass: p" + std::to_string(i) +
                                        " not in generator signature");
        GradedClass g(sig);
        if (2 * i <= sig.max_degree)
            g.set_term(Monomial::p_gen(i), Rational(1));
        return g;
    }
    static GradedClass u(const RingSignature& sig) {
        if (!sig.with_u)
            throw std::invalid_argument("GradedClass: signature has no u generator");
        GradedClass g(sig);
        if (1 <= sig.max_degree)
            g.set_term(Monomial::u_gen(), Rational(1));
        return g;
    }

    bool has_signature() const { return has_sig_; }
    const RingSignature& signature() const {
        if (!has_sig_)
            throw std::logic_error("GradedClass: scalar value has no signature");
        return sig_;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
               terms_.begin()->second.is_one();
    }

    Rational constant_term() const {
        auto it = terms_.find(Monomial::unit());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// A scalar 1, merge-compatible with anything.
    GradedClass one_like() const { return GradedClass(1); }

    GradedClass operator-() const {
        GradedClass out = *this;
        for (auto& [m, c] : out.terms_)
            c = -c;
        return out;
    }

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b) {
        GradedClass out = a.with_merged_signature(b);
        for (const auto& [m, c] : b.terms_)
            out.add_term(m, c);
        return out;
    }
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b) {
        GradedClass out = a.with_merged_signature(b);
        for (const auto& [m, c] : b.terms_)
            out.add_term(m, -c);
        return out;
    }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        GradedClass out = a.with_merged_signature(b);
        out.terms_.clear();
        const int cap = out.degree_cap();
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma * mb;
                if (m.degree() > cap) continue;
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }
    friend GradedClass operator*(const GradedClass& a, const Rational& r) {
        GradedClass out = a;
        if (r.is_zero()) {
            out.terms_.clear();
            return out;
        }
        for (auto& [m, c] : out.terms_)
            c = c * r;
        return out;
    }
    friend GradedClass operator*(const Rational& r, const GradedClass& a) { return a * r; }

    GradedClass& operator+=(const GradedClass& o) { return *this = *this + o; }
    GradedClass& operator-=(const GradedClass& o) { return *this = *this - o; }
    GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }

    GradedClass pow(int e) const {
        if (e < 0)
            return inverse().pow(-e);
        GradedClass out = one_like().with_merged_signature(*this);
        GradedClass base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    /// Multiplicative inverse; the constant term must be a nonzero Rational.
    GradedClass inverse() const {
        Rational c0 = constant_term();
        if (c0.is_zero())
            throw std::domain_error("GradedClass: inverse needs invertible constant term");
        GradedClass nilpotent = (*this - GradedClass(c0)) * qgenus::inverse(c0);
        GradedClass out = one_like().with_merged_signature(*this);
        GradedClass power = out;
        const int cap = degree_cap();
        for (int k = 1; k <= cap; ++k) {
            power = power * nilpotent;
            if (power.is_zero()) break;
            out += (k % 2 == 0) ? power : -power;
        }
        return out * qgenus::inverse(c0);
    }

    /// Truncated exponential; requires zero constant term.
    GradedClass exp() const {
        if (!constant_term().is_zero())
            throw std::domain_error("GradedClass: exp needs zero constant term");
        GradedClass out = one_like().with_merged_signature(*this);
        GradedClass power = out;
        Rational factorial = 1;
        const int cap = degree_cap();
        for (int k = 1; k <= cap; ++k) {
            power = power * (*this);
            if (power.is_zero()) break;
            factorial *= Rational(k);
            out += power * qgenus::inverse(factorial);
        }
        return out;
    }

    /// Truncated logarithm; requires constant term 1.
    GradedClass log() const {
        if (!constant_term().is_one())
            throw std::domain_error("GradedClass: log needs constant term 1");
        GradedClass g = *this - one_like();
        GradedClass out = GradedClass().with_merged_signature(*this);
        GradedClass power = one_like().with_merged_signature(*this);
        const int cap = degree_cap();
        for (int k = 1; k <= cap; ++k) {
            power = power * g;
            if (power.is_zero()) break;
            Rational coeff = Rational(k % 2 == 1 ? 1 : -1, k);
            out += power * coeff;
        }
        return out;
    }

    /// Homogeneous component of the given internal degree.
    GradedClass degree_part(int d) const {
        if (d < 0 || (has_sig_ && d > sig_.max_degree))
            throw std::out_of_range("GradedClass: degree " + std::to_string(d) +
                                    " beyond truncation");
        GradedClass out = *this;
        out.terms_.clear();
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) out.terms_.emplace(m, c);
        return out;
    }

    GradedClass truncated(int new_max_degree) const {
        GradedClass out = *this;
        if (out.has_sig_)
            out.sig_.max_degree = std::min(out.sig_.max_degree, new_max_degree);
        for (auto it = out.terms_.begin(); it != out.terms_.end();) {
            if (it->first.degree() > new_max_degree)
                it = out.terms_.erase(it);
            else
                ++it;
        }
        return out;
    }

    /// Specialization u = 0: drops every term with a positive u exponent and
    /// the u generator itself, so the result compares against untwisted values.
    GradedClass with_u_zero() const {
        GradedClass out = *this;
        if (out.has_sig_) out.sig_.with_u = false;
        for (auto it = out.terms_.begin(); it != out.terms_.end();) {
            if (it->first.u_exp() > 0)
                it = out.terms_.erase(it);
            else
                ++it;
        }
        return out;
    }

    int max_stored_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    // Equality is equality of canonical term maps; signatures are metadata.
    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = cs[0] == '-';
            if (neg) cs.erase(cs.begin());
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (m.is_unit()) {
                out += cs;
            } else if (cs == "1") {
                out += m.str();
            } else {
                out += cs + "*" + m.str();
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GradedClass& g) {
        return os << g.str();
    }

private:
    // Signature merge: scalars adopt the other side's signature; two
    // different signatures are a structural error.
    GradedClass with_merged_signature(const GradedClass& other) const {
        if (has_sig_ && other.has_sig_ && sig_ != other.sig_)
            throw std::invalid_argument(
                "GradedClass: mismatched generator signature or truncation");
        GradedClass out = *this;
        if (!out.has_sig_ && other.has_sig_) {
            out.has_sig_ = true;
            out.sig_ = other.sig_;
        }
        return out;
    }

    int degree_cap() const {
        // Scalars have degree 0 only; any finite cap works.
        return has_sig_ ? sig_.max_degree : 0;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void set_term(const Monomial& m, const Rational& c) {
        if (!c.is_zero()) terms_[m] = c;
    }

    bool has_sig_ = false;
    RingSignature sig_{};
    std::map<Monomial, Rational> terms_;
};

inline GradedClass inverse(const GradedClass& g) { return g.inverse(); }

} // namespace qgenus
