#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

namespace bv {

// Spacing between |x| and the next representable double above it. This is the
// unit we charge per rounding. frexp/ldexp keep it branch-light; for |x| an
// exact power of two this returns the spacing above (an overestimate, which is
// the safe direction).
inline double ulp(double x) {
    double a = std::fabs(x);
    if (std::isnan(a)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(a)) return std::numeric_limits<double>::infinity();
    if (a == 0.0) return std::numeric_limits<double>::denorm_min();
    int e;
    std::frexp(a, &e);
    double u = std::ldexp(1.0, e - 53);
    return u > 0.0 ? u : std::numeric_limits<double>::denorm_min();
}

// A computed value paired with a certified absolute error bound: the exact
// quantity lies in [value - abs_err, value + abs_err]. All arithmetic below
// propagates bounds conservatively and charges one ulp of the result per
// floating-point operation. libm log/exp are assumed within 1 ulp of correctly
// rounded; they are charged 2 ulps.
struct Enclosure {
    double value = 0.0;
    double abs_err = 0.0;

    constexpr Enclosure() = default;
    constexpr Enclosure(double v) : value(v), abs_err(0.0) {}  // exact input
    constexpr Enclosure(double v, double e) : value(v), abs_err(e) {}

    double lower() const { return value - abs_err; }
    double upper() const { return value + abs_err; }

    // A double parsed from a decimal literal sits within half an ulp of the
    // intended decimal constant.
    static Enclosure decimal(double v) { return {v, 0.5 * ulp(v)}; }
};

inline Enclosure operator+(Enclosure a, Enclosure b) {
    double v = a.value + b.value;
    return {v, a.abs_err + b.abs_err + ulp(v)};
}

inline Enclosure operator-(Enclosure a, Enclosure b) {
    double v = a.value - b.value;
    return {v, a.abs_err + b.abs_err + ulp(v)};
}

inline Enclosure operator-(Enclosure a) { return {-a.value, a.abs_err}; }

inline Enclosure operator*(Enclosure a, Enclosure b) {
    double v = a.value * b.value;
    double e = std::fabs(a.value) * b.abs_err + std::fabs(b.value) * a.abs_err +
               a.abs_err * b.abs_err + ulp(v);
    return {v, e};
}

inline Enclosure operator/(Enclosure a, Enclosure b) {
    double v = a.value / b.value;
    double denom = std::fabs(b.value) - b.abs_err;
    if (!(denom > 0.0)) return {v, std::numeric_limits<double>::infinity()};
    double e = (a.abs_err + std::fabs(v) * b.abs_err) / denom + ulp(v);
    return {v, e};
}

// |log(x+d) - log(x)| <= |d| / (x - |d|) for x - |d| > 0.
inline Enclosure enc_log(Enclosure x) {
    double v = std::log(x.value);
    if (x.abs_err == 0.0 && x.value > 0.0) return {v, 2.0 * ulp(v)};
    double lo = x.value - x.abs_err;
    if (!(lo > 0.0)) return {v, std::numeric_limits<double>::infinity()};
    return {v, x.abs_err / lo + 2.0 * ulp(v)};
}

// |exp(x+d) - exp(x)| <= exp(x) * (e^d - 1) * e^d for |d| <= d.
inline Enclosure enc_exp(Enclosure x) {
    double v = std::exp(x.value);
    double g = std::expm1(x.abs_err);
    return {v, v * g * (1.0 + g) + 2.0 * ulp(v)};
}

// base^expo = exp(expo * log(base)); base must be positive.
inline Enclosure enc_pow(Enclosure base, Enclosure expo) {
    if (expo.value == 0.0 && expo.abs_err == 0.0) return Enclosure(1.0);
    if (expo.value == 1.0 && expo.abs_err == 0.0) return base;
    return enc_exp(expo * enc_log(base));
}

// Compensated (Kahan) accumulator with an explicit budget. Per added term we
// charge: the term's own abs_err, one ulp of the running sum, and
// DBL_EPSILON * |term| (covers the compensated-summation worst case,
// 2u * sum |x_i| with u = DBL_EPSILON/2). The actual Kahan error is far below
// this budget.
class ErrorBudgetSum {
public:
    void add(double x, double x_err = 0.0) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
        err_ += x_err + ulp(sum_) +
                std::numeric_limits<double>::epsilon() * std::fabs(x);
        ++count_;
    }
    void add(const Enclosure& e) { add(e.value, e.abs_err); }
    // Sequential fold of a finished sub-sum (used when combining fixed chunks
    // in index order).
    void merge(const ErrorBudgetSum& other) {
        if (other.count_ == 0) return;
        add(other.sum_, other.err_);
        count_ += other.count_ - 1;
    }
    Enclosure result() const { return {sum_, err_}; }
    std::size_t count() const { return count_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double err_ = 0.0;
    std::size_t count_ = 0;
};

}  // namespace bv
