#include "regrep/series.hpp"

#include "regrep/errors.hpp"

namespace regrep {

namespace {

void require_order(int order) {
    if (order < 0) throw UsageError("series order must be >= 0");
}

void require_same(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw UsageError("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
}

void require_same(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.order_s() != b.order_s() || a.order_t() != b.order_t())
        throw UsageError("bivariate series truncation orders differ");
}

std::string term(const Rational& c, int k, const std::string& var, bool first) {
    std::string out;
    Rational a = abs(c);
    if (first)
        out = sgn(c) < 0 ? "-" : "";
    else
        out = sgn(c) < 0 ? " - " : " + ";
    const bool unit = a == 1;
    if (k == 0) return out + regrep::to_string(a);
    if (!unit) out += regrep::to_string(a) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    require_order(order);
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Rational>& coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

TruncatedSeries::TruncatedSeries(int order, const IntPoly1& coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const Rational& c) {
    TruncatedSeries s(order);
    if (degree < 0) throw UsageError("negative monomial degree");
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same(a, b);
    const int n = a.order();
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

TruncatedSeries TruncatedSeries::substitute_power(int k) const {
    if (k < 1) throw UsageError("substitute_power needs k >= 1");
    TruncatedSeries r(order());
    for (int i = 0; i * k <= order(); ++i) r[i * k] = (*this)[i];
    return r;
}

TruncatedSeries TruncatedSeries::with_order(int order) const { return TruncatedSeries(order, c_); }

Rational TruncatedSeries::sum() const {
    Rational s = 0;
    for (auto& c : c_) s += c;
    return s;
}

bool TruncatedSeries::all_integer() const {
    for (auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (sgn(c_[static_cast<std::size_t>(k)]) == 0) continue;
        out += term(c_[static_cast<std::size_t>(k)], k, var, out.empty());
    }
    return out.empty() ? "0" : out;
}

nlohmann::json TruncatedSeries::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& c : c_) arr.push_back(regrep::to_string(c));
    return arr;
}

BivariateSeries::BivariateSeries(int order_s, int order_t) : ns_(order_s), nt_(order_t) {
    require_order(order_s);
    require_order(order_t);
    c_.assign(static_cast<std::size_t>(ns_ + 1) * static_cast<std::size_t>(nt_ + 1), Rational(0));
}

BivariateSeries BivariateSeries::constant(int order_s, int order_t, const Rational& c) {
    BivariateSeries s(order_s, order_t);
    s(0, 0) = c;
    return s;
}

std::size_t BivariateSeries::index(int p, int m) const {
    if (p < 0 || m < 0 || p > ns_ || m > nt_) throw std::out_of_range("bivariate series index");
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(nt_ + 1) + static_cast<std::size_t>(m);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    require_same(a, b);
    BivariateSeries r(a.order_s(), a.order_t());
    for (int p1 = 0; p1 <= a.order_s(); ++p1)
        for (int m1 = 0; m1 <= a.order_t(); ++m1) {
            const Rational& x = a(p1, m1);
            if (sgn(x) == 0) continue;
            for (int p2 = 0; p1 + p2 <= a.order_s(); ++p2)
                for (int m2 = 0; m1 + m2 <= a.order_t(); ++m2) {
                    const Rational& y = b(p2, m2);
                    if (sgn(y) == 0) continue;
                    r(p1 + p2, m1 + m2) += x * y;
                }
        }
    return r;
}

bool BivariateSeries::operator==(const BivariateSeries& o) const {
    return ns_ == o.ns_ && nt_ == o.nt_ && c_ == o.c_;
}

TruncatedSeries BivariateSeries::row_t(int m) const {
    TruncatedSeries r(ns_);
    for (int p = 0; p <= ns_; ++p) r[p] = (*this)(p, m);
    return r;
}

TruncatedSeries BivariateSeries::column_s(int p) const {
    TruncatedSeries r(nt_);
    for (int m = 0; m <= nt_; ++m) r[m] = (*this)(p, m);
    return r;
}

nlohmann::json BivariateSeries::to_json() const {
    auto grid = nlohmann::json::array();
    for (int p = 0; p <= ns_; ++p) {
        auto row = nlohmann::json::array();
        for (int m = 0; m <= nt_; ++m) row.push_back(regrep::to_string((*this)(p, m)));
        grid.push_back(std::move(row));
    }
    return grid;
}

TruncatedSeries inverse(const TruncatedSeries& f) {
    if (sgn(f[0]) == 0) throw UsageError("series inverse needs a nonzero constant term");
    const int n = f.order();
    TruncatedSeries h(n);
    const Rational inv0 = 1 / f[0];
    h[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (sgn(f[j]) != 0) acc += f[j] * h[k - j];
        h[k] = -acc * inv0;
    }
    return h;
}

TruncatedSeries expand_rational(const IntPoly1& numer, const IntPoly1& denom, int order) {
    if (denom.empty() || sgn(denom[0]) == 0) throw UsageError("expand_rational: denominator has zero constant term");
    return TruncatedSeries(order, numer) * inverse(TruncatedSeries(order, denom));
}

TruncatedSeries log1p(const TruncatedSeries& u) {
    if (sgn(u[0]) != 0) throw UsageError("log1p needs a zero constant term");
    const int n = u.order();
    // t * d/dt log(1+u) = t u' / (1+u)
    TruncatedSeries g = u;
    g[0] = 1;
    TruncatedSeries tdu(n);
    for (int k = 1; k <= n; ++k) tdu[k] = u[k] * k;
    TruncatedSeries q = tdu * inverse(g);
    TruncatedSeries r(n);
    for (int k = 1; k <= n; ++k) r[k] = q[k] / k;
    return r;
}

TruncatedSeries exp(const TruncatedSeries& v) {
    if (sgn(v[0]) != 0) throw UsageError("exp needs a zero constant term");
    const int n = v.order();
    TruncatedSeries e(n);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (sgn(v[j]) != 0) acc += v[j] * j * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

BivariateSeries log1p(const BivariateSeries& u) {
    if (sgn(u(0, 0)) != 0) throw UsageError("log1p needs a zero constant term");
    const int ns = u.order_s(), nt = u.order_t();
    // Inverse of g = 1 + u, then apply the total-degree Euler operator.
    BivariateSeries h(ns, nt);
    for (int p = 0; p <= ns; ++p)
        for (int m = 0; m <= nt; ++m) {
            if (p == 0 && m == 0) {
                h(0, 0) = 1;
                continue;
            }
            Rational acc = 0;
            for (int a = 0; a <= p; ++a)
                for (int b = 0; b <= m; ++b) {
                    if (a == 0 && b == 0) continue;
                    const Rational& x = u(a, b);
                    if (sgn(x) != 0) acc += x * h(p - a, m - b);
                }
            h(p, m) = -acc;
        }
    BivariateSeries eu(ns, nt);
    for (int p = 0; p <= ns; ++p)
        for (int m = 0; m <= nt; ++m) eu(p, m) = u(p, m) * (p + m);
    BivariateSeries q = eu * h;
    BivariateSeries r(ns, nt);
    for (int p = 0; p <= ns; ++p)
        for (int m = 0; m <= nt; ++m)
            if (p + m > 0) r(p, m) = q(p, m) / (p + m);
    return r;
}

}  // namespace regrep
