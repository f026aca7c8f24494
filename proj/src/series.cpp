#include "cokerdist/series.hpp"

#include <stdexcept>

namespace coker {

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) c[i] = a[i] + b[i];
    return c;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) c[i] = a[i] - b[i];
    return c;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0] == 0) throw std::invalid_argument("series inverse requires a nonzero constant term");
    TruncSeries b(order());
    Rat c0inv = Rat(1) / c_[0];
    b[0] = c0inv;
    for (int n = 1; n <= order(); ++n) {
        Rat s(0);
        for (int k = 1; k <= n; ++k) s += c_[static_cast<std::size_t>(k)] * b[n - k];
        b[n] = -c0inv * s;
    }
    return b;
}

TruncSeries qpoch_expand(const Rat& a, const Rat& x, int d, PochForm form, int order) {
    if (d < 1) throw std::invalid_argument("qpoch degree must be >= 1");
    if (abs(x) >= 1) throw std::invalid_argument("qpoch ratio must satisfy |x| < 1");
    TruncSeries s(order);
    Rat a_pow(1), x_tri(1), den(1);  // a^k, x^{k(k-1)/2}, prod_{j<=k}(1-x^j)
    Rat x_pow(1);                    // x^{k}
    for (int k = 0; d * k <= order; ++k) {
        if (k > 0) {
            a_pow *= a;
            x_tri *= x_pow;  // x^{k(k-1)/2} gains x^{k-1}
            x_pow *= x;
            den *= Rat(1) - x_pow;  // now prod_{j=1}^{k} (1 - x^j)
        }
        if (form == PochForm::Product) {
            Rat term = a_pow * x_tri / den;
            s[d * k] = (k % 2 == 0) ? term : Rat(-term);
        } else {
            s[d * k] = a_pow / den;
        }
    }
    return s;
}

std::vector<Rat> bn_coeffs(const Int& q, int d, int n_max) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    Rat qd = inv_pow(q, static_cast<unsigned long>(d));
    TruncSeries num = qpoch_expand(qd, qd, d, PochForm::Product, n_max);
    TruncSeries den = qpoch_expand(Rat(1), inv_pow(q, 1), 1, PochForm::Reciprocal, n_max);
    TruncSeries s = num * den;
    std::vector<Rat> out(static_cast<std::size_t>(n_max) + 1);
    for (int i = 0; i <= n_max; ++i) out[static_cast<std::size_t>(i)] = s[i];
    return out;
}

std::vector<Rat> bn_increments(const Int& q, int d, int n_max) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    Rat qd = inv_pow(q, static_cast<unsigned long>(d));
    Rat q1 = inv_pow(q, 1);
    TruncSeries num = qpoch_expand(qd, qd, d, PochForm::Product, n_max);
    TruncSeries den = qpoch_expand(q1, q1, 1, PochForm::Reciprocal, n_max);
    TruncSeries s = num * den;
    std::vector<Rat> out(static_cast<std::size_t>(n_max) + 1);
    for (int i = 0; i <= n_max; ++i) out[static_cast<std::size_t>(i)] = s[i];
    return out;
}

RationalInterval RationalInterval::scaled(const Rat& c) const {
    if (c < 0) throw std::invalid_argument("interval scale must be nonnegative");
    return {lo * c, hi * c};
}

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
    if (lo < 0 || o.lo < 0) throw std::invalid_argument("interval product requires nonnegative intervals");
    return {lo * o.lo, hi * o.hi};
}

RationalInterval limit_product(const Int& q, int d, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    Rat qd = inv_pow(q, static_cast<unsigned long>(d));
    Rat partial(1), qd_pow(1);  // q^{-Md}
    for (int M = 0;; ++M) {
        // tail bound: sum_{i > M} q^{-id} = q^{-(M+1)d} / (1 - q^{-d})
        Rat tail = qd_pow * qd / (Rat(1) - qd);
        if (partial * tail <= tol) return {partial * (Rat(1) - tail), partial};
        qd_pow *= qd;
        partial *= Rat(1) - qd_pow;
    }
}

}  // namespace coker
