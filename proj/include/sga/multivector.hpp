// Dense multivector over the Euclidean geometric algebra G_d = R[e_0 .. e_{d-1}],
// d <= 6, with all generators squaring to +1.
//
// Storage: 2^d coefficients indexed by basis-blade bitmask (bit k set <=> e_k is
// a factor of the blade, factors in ascending index order). The scalar type is a
// template parameter so the same arithmetic runs with doubles for numerics and
// with exact rationals for symbolic/certified work.

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sga {

inline constexpr int kMaxDim = 6;

struct SingularElementError : std::domain_error {
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Scalar traits: the small amount of glue needed to run the same code over
// floating point and exact fields.
// ---------------------------------------------------------------------------

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double abs(double v) { return std::fabs(v); }
    static bool is_zero(double v) { return v == 0.0; }
    static double from_int(long long v) { return static_cast<double>(v); }
    static double to_double(double v) { return v; }
};

// Number of transpositions (mod 2) needed to bring the juxtaposition of two
// ascending basis blades into canonical ascending order. Shared factors then
// cancel with square +1, so the product blade is a^b (xor) and the sign is
// (-1)^swaps.
inline int blade_product_sign(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned t = a >> 1;
    while (t != 0) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

inline int blade_grade(unsigned mask) { return std::popcount(mask); }

// Memoized sign table per dimension. 64x64 int8 at most; negligible.
inline const std::vector<std::int8_t>& sign_table(int dim) {
    static std::array<std::vector<std::int8_t>, kMaxDim + 1> tables = [] {
        std::array<std::vector<std::int8_t>, kMaxDim + 1> t;
        for (int d = 0; d <= kMaxDim; ++d) {
            const unsigned n = 1u << d;
            t[d].resize(std::size_t(n) * n);
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = 0; b < n; ++b)
                    t[d][std::size_t(a) * n + b] =
                        static_cast<std::int8_t>(blade_product_sign(a, b));
        }
        return t;
    }();
    return tables.at(std::size_t(dim));
}

// Reverse of a grade-k blade picks up (-1)^(k(k-1)/2).
inline int reverse_sign(unsigned mask) {
    const int k = blade_grade(mask);
    return (k * (k - 1) / 2) % 2 ? -1 : 1;
}

template <typename S>
class Multivector {
public:
    Multivector() : dim_(0), c_(1, S(0)) {}

    explicit Multivector(int dim) : dim_(check_dim(dim)), c_(std::size_t(1) << dim, S(0)) {}

    static Multivector scalar(int dim, const S& value) {
        Multivector m(dim);
        m.c_[0] = value;
        return m;
    }

    static Multivector blade(int dim, unsigned mask, const S& coeff) {
        Multivector m(dim);
        if (mask >= (1u << dim)) throw std::out_of_range("blade mask exceeds dimension");
        m.c_[mask] = coeff;
        return m;
    }

    static Multivector basis_vector(int dim, int k) {
        return blade(dim, 1u << check_index(dim, k), S(1));
    }

    static Multivector vector(int dim, const std::vector<S>& components) {
        if (int(components.size()) != dim)
            throw std::invalid_argument("component count must equal dimension");
        Multivector m(dim);
        for (int k = 0; k < dim; ++k) m.c_[1u << k] = components[std::size_t(k)];
        return m;
    }

    int dim() const { return dim_; }
    std::size_t size() const { return c_.size(); }

    const S& operator[](unsigned mask) const { return c_.at(mask); }
    S& operator[](unsigned mask) { return c_.at(mask); }

    const S& scalar_part() const { return c_[0]; }

    const std::vector<S>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const S& v : c_)
            if (!ScalarTraits<S>::is_zero(v)) return false;
        return true;
    }

    Multivector& operator+=(const Multivector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Multivector& operator-=(const Multivector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Multivector& operator*=(const S& s) {
        for (S& v : c_) v *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
    friend Multivector operator-(Multivector a) {
        for (S& v : a.c_) v = -v;
        return a;
    }

    // Geometric (Clifford) product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same_dim(b);
        const auto& signs = sign_table(a.dim_);
        const std::size_t n = a.c_.size();
        Multivector r(a.dim_);
        for (std::size_t i = 0; i < n; ++i) {
            if (ScalarTraits<S>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (ScalarTraits<S>::is_zero(b.c_[j])) continue;
                const int sg = signs[i * n + j];
                S term = a.c_[i] * b.c_[j];
                if (sg < 0) term = -term;
                r.c_[i ^ j] += term;
            }
        }
        return r;
    }

    Multivector reverse() const {
        Multivector r(*this);
        for (unsigned m = 0; m < r.c_.size(); ++m)
            if (reverse_sign(m) < 0) r.c_[m] = -r.c_[m];
        return r;
    }

    Multivector grade(int k) const {
        Multivector r(dim_);
        for (unsigned m = 0; m < c_.size(); ++m)
            if (blade_grade(m) == k) r.c_[m] = c_[m];
        return r;
    }

    int max_grade() const {
        int g = 0;
        for (unsigned m = 0; m < c_.size(); ++m)
            if (!ScalarTraits<S>::is_zero(c_[m])) g = std::max(g, blade_grade(m));
        return g;
    }

    bool has_only_grade(int k) const {
        for (unsigned m = 0; m < c_.size(); ++m)
            if (!ScalarTraits<S>::is_zero(c_[m]) && blade_grade(m) != k) return false;
        return true;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.dim_ != b.dim_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (unsigned m = 0; m < c_.size(); ++m) {
            if (ScalarTraits<S>::is_zero(c_[m])) continue;
            if (!first) os << " + ";
            os << c_[m];
            if (m != 0) {
                os << " e";
                for (int k = 0; k < dim_; ++k)
                    if (m & (1u << k)) os << k;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static int check_dim(int dim) {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must be in [1,6]");
        return dim;
    }
    static int check_index(int dim, int k) {
        if (k < 0 || k >= dim) throw std::out_of_range("generator index out of range");
        return k;
    }
    void require_same_dim(const Multivector& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    }

    int dim_;
    std::vector<S> c_;
};

// ---------------------------------------------------------------------------
// Derived products and helpers.
// ---------------------------------------------------------------------------

// Symmetric part: for vectors a,b this is the scalar a.b.
template <typename S>
Multivector<S> dot(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S> r = a * b + b * a;
    S half = S(1) / S(2);
    return r *= half;
}

// Antisymmetric part of the geometric product (vector arguments).
template <typename S>
Multivector<S> wedge_vectors(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S> r = a * b - b * a;
    S half = S(1) / S(2);
    return r *= half;
}

// Grade-raising outer product for arbitrary arguments: blades sharing a
// generator annihilate, disjoint blades multiply with the geometric sign.
template <typename S>
Multivector<S> outer(const Multivector<S>& a, const Multivector<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    const auto& signs = sign_table(a.dim());
    const std::size_t n = a.size();
    Multivector<S> r(a.dim());
    for (unsigned i = 0; i < n; ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) continue;
        for (unsigned j = 0; j < n; ++j) {
            if ((i & j) != 0) continue;
            if (ScalarTraits<S>::is_zero(b[j])) continue;
            S term = a[i] * b[j];
            if (signs[std::size_t(i) * n + j] < 0) term = -term;
            r[i | j] += term;
        }
    }
    return r;
}

template <typename S>
double norm_coefficients(const Multivector<S>& a) {
    double s = 0;
    for (const S& v : a.coefficients()) {
        double d = ScalarTraits<S>::to_double(v);
        s += d * d;
    }
    return std::sqrt(s);
}

// Versor-style inverse: defined whenever a * reverse(a) is a nonzero scalar.
// For doubles "scalar" means the non-scalar residue is below a relative
// tolerance; for exact scalars it must vanish identically.
template <typename S>
Multivector<S> inverse(const Multivector<S>& a, double rel_tol = 1e-12) {
    Multivector<S> p = a * a.reverse();
    const S s0 = p.scalar_part();
    if constexpr (ScalarTraits<S>::exact) {
        p[0] = S(0);
        if (!p.is_zero())
            throw SingularElementError("inverse: a * reverse(a) is not a scalar");
        if (ScalarTraits<S>::is_zero(s0))
            throw SingularElementError("inverse: a * reverse(a) vanishes");
        Multivector<S> r = a.reverse();
        for (unsigned m = 0; m < r.size(); ++m) r[m] /= s0;
        return r;
    } else {
        const double scale = norm_coefficients(p);
        p[0] = S(0);
        if (norm_coefficients(p) > rel_tol * std::max(scale, 1e-300))
            throw SingularElementError("inverse: a * reverse(a) is not a scalar");
        if (ScalarTraits<S>::abs(s0) <= rel_tol * std::max(scale, 1e-300) ||
            ScalarTraits<S>::is_zero(s0))
            throw SingularElementError("inverse: a * reverse(a) vanishes");
        Multivector<S> r = a.reverse();
        return r *= S(1) / s0;
    }
}

using MvD = Multivector<double>;

}  // namespace sga
