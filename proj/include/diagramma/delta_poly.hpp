#pragma once

#include <string>
#include <vector>

#include "diagramma/rational.hpp"

namespace diagramma {

// Polynomial in the algebra parameter, with rational coefficients.
// Coefficients are stored densely by degree; trailing zeros are trimmed,
// so the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    Poly(long v) { *this = Poly(Rat(v)); }
    Poly(const Rat& v) {
        if (v != 0) c_.push_back(v);
    }

    static Poly delta(unsigned e = 1) {
        Poly p;
        p.c_.assign(e + 1, Rat(0));
        p.c_[e] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int low_degree() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }
    Rat coeff(size_t deg) const { return deg < c_.size() ? c_[deg] : Rat(0); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Evaluation at a rational point.
    Rat at(const Rat& q) const {
        Rat v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
        return v;
    }

    // Whether delta^e divides the polynomial (true for zero).
    bool divisible_by_delta(unsigned e) const {
        for (unsigned i = 0; i < e && i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Poly shift_down(unsigned e) const {
        Poly r;
        if (c_.size() > e) r.c_.assign(c_.begin() + e, c_.end());
        r.trim();
        return r;
    }

    // Canonical text form, highest degree first: "3/2*d^2-d+1", "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rat& c = c_[i];
            if (c == 0) continue;
            Rat a = abs(c);
            bool neg = c < 0;
            std::string term;
            if (i == 0) {
                term = a.get_str();
            } else {
                if (a != 1) term = a.get_str() + "*";
                term += "d";
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? "-" : "+") + term;
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly pow_delta(unsigned e) { return Poly::delta(e); }

}  // namespace diagramma
