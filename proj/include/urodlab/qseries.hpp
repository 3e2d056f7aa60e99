#pragma once

// Truncated formal series sum_e c_e q^e over exact rationals.
//
// Exponents lie on offset + (1/denom) Z. A series knows its coefficients
// exactly for every exponent strictly below `order`; nothing at or above it
// is stored, and arithmetic propagates the smallest safe order.

#include "urodlab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace urodlab {

class QSeries {
public:
    QSeries() : denom_(1), offset_(0), order_(0) {}

    /// Zero series exact below `order`, on the grid offset + Z/denom.
    QSeries(Rational order, Rational offset = 0, long denom = 1) : denom_(denom), offset_(std::move(offset)), order_(std::move(order)) {
        if (denom_ <= 0) throw DomainError("series denominator must be positive");
        resize_to_order();
    }

    static QSeries monomial(const Rational& coeff, const Rational& exponent, const Rational& order) {
        QSeries s(order, exponent, 1);
        if (!s.coeffs_.empty()) s.coeffs_[0] = coeff;
        return s;
    }

    long denom() const { return denom_; }
    const Rational& offset() const { return offset_; }
    const Rational& order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational exponent_at(std::size_t i) const { return offset_ + frac(static_cast<long>(i), denom_); }

    /// Coefficient at exponent e (0 off-grid or below offset). Throws at or above order.
    Rational coefficient(const Rational& e) const {
        if (e >= order_) throw DomainError("coefficient requested at or beyond series order");
        auto idx = index_of(e);
        return idx ? coeffs_[*idx] : Rational(0);
    }

    void add_term(const Rational& coeff, const Rational& e) {
        if (e >= order_ || coeff == 0) return;
        regrid_for(e);
        coeffs_[*index_of(e)] += coeff;
    }

    /// Nonzero terms in increasing exponent order.
    std::vector<std::pair<Rational, Rational>> terms() const {
        std::vector<std::pair<Rational, Rational>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) out.emplace_back(exponent_at(i), coeffs_[i]);
        return out;
    }

    std::optional<Rational> lowest_exponent() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return exponent_at(i);
        return std::nullopt;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    bool nonnegative_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0 && is_integer(c); });
    }

    QSeries truncated(const Rational& order) const {
        QSeries s = *this;
        s.order_ = std::min(order_, order);
        s.resize_to_order();
        return s;
    }

    /// Multiplies by q^r.
    QSeries shifted(const Rational& r) const {
        QSeries s = *this;
        s.offset_ += r;
        s.order_ += r;
        return s;
    }

    QSeries& operator+=(const QSeries& o) { return accumulate(o, 1); }
    QSeries& operator-=(const QSeries& o) { return accumulate(o, -1); }

    QSeries& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        // exact below min(order_a + low_b, order_b + low_a)
        Rational order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
        long d = std::lcm(a.denom_, b.denom_);
        QSeries out(order, a.offset_ + b.offset_, d);
        const long sa = d / a.denom_, sb = d / b.denom_;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                std::size_t k = i * sa + j * sb;
                if (k >= out.coeffs_.size()) break;
                if (b.coeffs_[j] != 0) out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// First exponent below `order` where the two series differ.
    friend std::optional<Rational> first_difference(const QSeries& a, const QSeries& b, const Rational& order) {
        if (a.order_ < order || b.order_ < order) throw DomainError("series not known to the requested order");
        QSeries diff = a.truncated(order) - b.truncated(order);
        return diff.lowest_exponent();
    }

    /// Coefficients at lo, lo + 1, ..., lo + n - 1 (lo the lowest nonzero exponent), as "p/q" strings.
    /// Integer steps keep heads of series on different grids comparable.
    std::vector<std::string> head(std::size_t n) const {
        std::vector<std::string> out;
        auto lo = lowest_exponent();
        if (!lo) return out;
        for (std::size_t i = 0; i < n && *lo + static_cast<long>(i) < order_; ++i)
            out.push_back(to_string(coefficient(*lo + static_cast<long>(i))));
        return out;
    }

    std::string to_display(std::size_t max_terms = 12) const {
        std::string s;
        std::size_t shown = 0;
        for (const auto& [e, c] : terms()) {
            if (shown++ == max_terms) {
                s += " + ...";
                break;
            }
            if (!s.empty()) s += " + ";
            s += to_string(c) + "*q^" + to_string(e);
        }
        if (s.empty()) s = "0";
        return s + " + O(q^" + to_string(order_) + ")";
    }

private:
    long denom_;
    Rational offset_;
    Rational order_;
    std::vector<Rational> coeffs_;

    void resize_to_order() {
        Rational span = (order_ - offset_) * denom_;
        long n = span <= 0 ? 0 : to_long(ceil_of(span));
        coeffs_.resize(static_cast<std::size_t>(n));
    }

    std::optional<std::size_t> index_of(const Rational& e) const {
        Rational pos = (e - offset_) * denom_;
        if (pos < 0 || !is_integer(pos)) return std::nullopt;
        auto i = static_cast<std::size_t>(to_long(pos.get_num()));
        if (i >= coeffs_.size()) return std::nullopt;
        return i;
    }

    /// Re-grids so that exponent e (below order) has a slot.
    void regrid_for(const Rational& e) {
        Rational diff = e - offset_;
        long d = std::lcm(denom_, to_long(diff.get_den()));
        Rational new_offset = std::min(offset_, e);
        if (d == denom_ && new_offset == offset_) return;
        QSeries fresh(order_, new_offset, d);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) fresh.coeffs_[*fresh.index_of(exponent_at(i))] = coeffs_[i];
        *this = std::move(fresh);
    }

    QSeries& accumulate(const QSeries& o, int sign) {
        Rational order = std::min(order_, o.order_);
        Rational off = std::min(offset_, o.offset_);
        long d = std::lcm(denom_, o.denom_);
        Rational shift = offset_ - o.offset_;
        d = std::lcm(d, to_long(shift.get_den()));
        QSeries out(order, off, d);
        for (const QSeries* src : std::initializer_list<const QSeries*>{this, &o}) {
            const bool neg = src == &o && sign < 0;
            for (std::size_t i = 0; i < src->coeffs_.size(); ++i) {
                if (src->coeffs_[i] == 0) continue;
                Rational e = src->exponent_at(i);
                if (e >= order) break;
                auto idx = *out.index_of(e);
                if (neg)
                    out.coeffs_[idx] -= src->coeffs_[i];
                else
                    out.coeffs_[idx] += src->coeffs_[i];
            }
        }
        *this = std::move(out);
        return *this;
    }
};

/// prod_{n>=1} (1 - q^n)^{-r}, exact below `order`.
inline QSeries eta_inverse_power(int r, const Rational& order) {
    if (r < 0) throw DomainError("eta_inverse_power needs r >= 0");
    QSeries out(order);
    long len = static_cast<long>(out.coeffs().size());
    std::vector<Integer> c(static_cast<std::size_t>(std::max(len, 0L)), 0);
    if (len == 0) return out;
    c[0] = 1;
    for (long n = 1; n < len; ++n)
        for (int rep = 0; rep < r; ++rep)
            for (long i = n; i < len; ++i) c[i] += c[i - n];
    for (long i = 0; i < len; ++i) out.add_term(Rational(c[i]), Rational(i));
    return out;
}

} // namespace urodlab
