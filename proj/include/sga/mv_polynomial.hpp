// Polynomials in n commuting variables with multivector coefficients over
// exact rationals: the certified lane for operator algebra, gradient-free
// extensions and the quasi-monogenic family. Multiplication multiplies
// coefficients with the geometric product, so the variables commute with
// everything while the blades keep their Clifford relations.

#pragma once

#include <map>
#include <vector>

#include "sga/rational.hpp"

namespace sga {

class MvPolynomial {
public:
    using Exponents = std::vector<unsigned>;

    MvPolynomial(int nvars, int dim) : nvars_(nvars), dim_(dim) {
        if (nvars < 1) throw std::invalid_argument("MvPolynomial: nvars must be >= 1");
    }

    int nvars() const { return nvars_; }
    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, MvQ>& terms() const { return terms_; }

    static MvPolynomial zero(int nvars, int dim) { return MvPolynomial(nvars, dim); }

    static MvPolynomial constant(int nvars, const MvQ& coeff) {
        MvPolynomial p(nvars, coeff.dim());
        p.add_term(Exponents(std::size_t(nvars), 0u), coeff);
        return p;
    }

    static MvPolynomial scalar_constant(int nvars, int dim, const Rational& c) {
        return constant(nvars, MvQ::scalar(dim, c));
    }

    // The monomial x_var (scalar-valued).
    static MvPolynomial variable(int nvars, int dim, int var) {
        MvPolynomial p(nvars, dim);
        Exponents ex(std::size_t(nvars), 0u);
        ex.at(std::size_t(var)) = 1;
        p.add_term(ex, MvQ::scalar(dim, Rational(1)));
        return p;
    }

    static MvPolynomial monomial(int nvars, const Exponents& ex, const MvQ& coeff) {
        MvPolynomial p(nvars, coeff.dim());
        if (int(ex.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
        p.add_term(ex, coeff);
        return p;
    }

    void add_term(const Exponents& ex, const MvQ& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            terms_.emplace(ex, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MvPolynomial& operator+=(const MvPolynomial& o) {
        check_compat(o);
        for (const auto& [ex, c] : o.terms_) add_term(ex, c);
        return *this;
    }
    MvPolynomial& operator-=(const MvPolynomial& o) {
        check_compat(o);
        for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
        return *this;
    }
    friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
    friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }
    friend MvPolynomial operator-(const MvPolynomial& a) {
        MvPolynomial r(a.nvars_, a.dim_);
        for (const auto& [ex, c] : a.terms_) r.terms_.emplace(ex, -c);
        return r;
    }

    friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
        a.check_compat(b);
        MvPolynomial r(a.nvars_, a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents ex(std::size_t(a.nvars_));
                for (int k = 0; k < a.nvars_; ++k)
                    ex[std::size_t(k)] = ea[std::size_t(k)] + eb[std::size_t(k)];
                r.add_term(ex, ca * cb);
            }
        return r;
    }

    MvPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [ex, c] : terms_) c *= s;
        return *this;
    }
    friend MvPolynomial operator*(MvPolynomial a, const Rational& s) { return a *= s; }
    friend MvPolynomial operator*(const Rational& s, MvPolynomial a) { return a *= s; }

    // Left multiplication by a constant multivector.
    friend MvPolynomial operator*(const MvQ& m, const MvPolynomial& p) {
        MvPolynomial r(p.nvars_, p.dim_);
        for (const auto& [ex, c] : p.terms_) r.add_term(ex, m * c);
        return r;
    }
    friend MvPolynomial operator*(const MvPolynomial& p, const MvQ& m) {
        MvPolynomial r(p.nvars_, p.dim_);
        for (const auto& [ex, c] : p.terms_) r.add_term(ex, c * m);
        return r;
    }

    MvPolynomial pow(unsigned k) const {
        MvPolynomial r = scalar_constant(nvars_, dim_, Rational(1));
        for (unsigned i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    MvPolynomial derivative(int var) const {
        MvPolynomial r(nvars_, dim_);
        for (const auto& [ex, c] : terms_) {
            const unsigned k = ex.at(std::size_t(var));
            if (k == 0) continue;
            Exponents e2 = ex;
            e2[std::size_t(var)] -= 1;
            r.add_term(e2, c * Rational(k));
        }
        return r;
    }

    // Exact division by the monomial x_var; throws if any term lacks it.
    MvPolynomial divide_by_variable(int var) const {
        MvPolynomial r(nvars_, dim_);
        for (const auto& [ex, c] : terms_) {
            if (ex.at(std::size_t(var)) == 0)
                throw std::domain_error("divide_by_variable: term without the variable");
            Exponents e2 = ex;
            e2[std::size_t(var)] -= 1;
            r.add_term(e2, c);
        }
        return r;
    }

    MvPolynomial grade(int k) const {
        MvPolynomial r(nvars_, dim_);
        for (const auto& [ex, c] : terms_) r.add_term(ex, c.grade(k));
        return r;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [ex, c] : terms_) {
            unsigned t = 0;
            for (unsigned k : ex) t += k;
            d = std::max(d, t);
        }
        return d;
    }

    MvQ eval(const std::vector<Rational>& at) const {
        if (int(at.size()) != nvars_) throw std::invalid_argument("eval arity mismatch");
        MvQ acc(dim_);
        for (const auto& [ex, c] : terms_) {
            Rational m(1);
            for (int k = 0; k < nvars_; ++k)
                for (unsigned i = 0; i < ex[std::size_t(k)]; ++i) m *= at[std::size_t(k)];
            acc += c * m;
        }
        return acc;
    }

    MvD eval_double(const std::vector<double>& at) const {
        if (int(at.size()) != nvars_) throw std::invalid_argument("eval arity mismatch");
        MvD acc(dim_);
        for (const auto& [ex, c] : terms_) {
            double m = 1;
            for (int k = 0; k < nvars_; ++k)
                for (unsigned i = 0; i < ex[std::size_t(k)]; ++i) m *= at[std::size_t(k)];
            acc += to_double_mv(c) * m;
        }
        return acc;
    }

    friend bool operator==(const MvPolynomial& a, const MvPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MvPolynomial& a, const MvPolynomial& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_compat(const MvPolynomial& o) const {
        if (nvars_ != o.nvars_ || dim_ != o.dim_)
            throw std::invalid_argument("MvPolynomial arity/dimension mismatch");
    }

    int nvars_;
    int dim_;
    std::map<Exponents, MvQ> terms_;
};

}  // namespace sga
