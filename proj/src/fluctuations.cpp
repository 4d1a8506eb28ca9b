#include "rmtsf/fluctuations.hpp"

#include <algorithm>
#include <numeric>

namespace rmtsf {

LaurentPolyN rescaled_trace_moment(const Partition& mu) {
    const unsigned w = mu.weight();
    if (w % 2 != 0) return LaurentPolyN();
    if (w == 0) return LaurentPolyN(Rational(1));
    PolyN unrescaled = trace_joint_moment(EnsembleSpec::hermite(), mu).poly;
    return (unrescaled.to_laurent() * pow_rational(Rational(4), -static_cast<long long>(w / 2)))
        .shifted(-static_cast<int>(w / 2));
}

ChebyshevCoeffs chebyshev_coeffs(unsigned k) {
    if (k > 16) throw std::invalid_argument("chebyshev_coeffs: k exceeds 16");
    // T_{k+1} = 2x T_k - T_{k-1}
    std::vector<Rational> prev{1}, cur{0, 1};
    if (k == 0) cur = prev;
    for (unsigned m = 1; m < k; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    ChebyshevCoeffs out;
    out.k = k;
    for (size_t d = 0; d < cur.size(); ++d)
        if (cur[d] != 0) out.coeffs[static_cast<unsigned>(d)] = cur[d];
    return out;
}

TraceExpr TraceExpr::constant(const LaurentPolyN& c) {
    TraceExpr e;
    if (!c.is_zero()) e.terms_[Partition()] = c;
    return e;
}

TraceExpr TraceExpr::trace_power(unsigned d) {
    if (d == 0) throw std::invalid_argument("TraceExpr::trace_power: d must be positive");
    TraceExpr e;
    e.terms_[Partition({d})] = LaurentPolyN(Rational(1));
    return e;
}

TraceExpr& TraceExpr::operator+=(const TraceExpr& o) {
    for (const auto& [p, c] : o.terms_) {
        LaurentPolyN& slot = terms_[p];
        slot += c;
        if (slot.is_zero()) terms_.erase(p);
    }
    return *this;
}

TraceExpr& TraceExpr::operator-=(const TraceExpr& o) {
    for (const auto& [p, c] : o.terms_) {
        LaurentPolyN& slot = terms_[p];
        slot -= c;
        if (slot.is_zero()) terms_.erase(p);
    }
    return *this;
}

TraceExpr& TraceExpr::operator*=(const TraceExpr& o) {
    std::map<Partition, LaurentPolyN> out;
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) {
            std::vector<unsigned> merged = p1.parts();
            merged.insert(merged.end(), p2.parts().begin(), p2.parts().end());
            std::sort(merged.rbegin(), merged.rend());
            LaurentPolyN& slot = out[Partition(std::move(merged))];
            slot += c1 * c2;
            // zero coefficients are cleaned below
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    terms_ = std::move(out);
    return *this;
}

TraceExpr& TraceExpr::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

LaurentPolyN TraceExpr::expectation() const {
    LaurentPolyN r;
    for (const auto& [mu, c] : terms_) r += c * rescaled_trace_moment(mu);
    return r;
}

TraceExpr xk_expr(unsigned k) {
    if (k == 0 || k > 8) throw std::invalid_argument("xk_expr: need 1 <= k <= 8");
    ChebyshevCoeffs cheb = chebyshev_coeffs(k);
    TraceExpr x;
    for (const auto& [d, a] : cheb.coeffs) {
        if (d == 0) continue;  // Tr of the constant term is cancelled by the centering
        TraceExpr centered = TraceExpr::trace_power(d) -
                             TraceExpr::constant(rescaled_trace_moment(Partition({d})));
        x += centered * a;
    }
    return x;
}

LaurentPolyN xk_joint_central_moment(const std::vector<unsigned>& ks) {
    unsigned total = 0;
    for (unsigned k : ks) {
        if (k == 0 || k > 8) throw std::invalid_argument("xk_joint_central_moment: each k in 1..8");
        total += k;
    }
    if (total > 24) throw std::invalid_argument("xk_joint_central_moment: sum of ks exceeds 24");
    TraceExpr prod = TraceExpr::constant(LaurentPolyN(Rational(1)));
    for (unsigned k : ks) prod *= xk_expr(k);
    return prod.expectation();
}

Rational xk_joint_central_moment_at(const std::vector<unsigned>& ks, unsigned N) {
    return xk_joint_central_moment(ks).eval(Rational(N));
}

Rational tr_m1_power_closed_form(unsigned n) {
    if (n == 0 || n > 12)
        throw std::invalid_argument("tr_m1_power_closed_form: need 1 <= n <= 12");
    return Rational(factorial(2 * n)) /
           (pow_rational(Rational(2), 3 * n) * Rational(factorial(n)));
}

namespace {

struct MultisetMoments {
    // distinct part values, descending, and their multiplicities
    std::vector<unsigned> values;
    std::vector<unsigned> mult;

    Partition to_partition(const std::vector<unsigned>& take) const {
        std::vector<unsigned> parts;
        for (size_t i = 0; i < values.size(); ++i)
            parts.insert(parts.end(), take[i], values[i]);
        std::sort(parts.rbegin(), parts.rend());
        return Partition(std::move(parts));
    }
};

// Joint cumulant by the designated-element recursion
//   m(S) = sum_{T ni x} c(T) m(S \ T)
// carried out on multiplicities; memoized on the multiset.
LaurentPolyN connected_rec(const MultisetMoments& ms, const std::vector<unsigned>& take,
                           std::map<Partition, LaurentPolyN>& memo) {
    Partition mu = ms.to_partition(take);
    if (auto it = memo.find(mu); it != memo.end()) return it->second;

    LaurentPolyN result = rescaled_trace_moment(mu);
    const size_t r = take.size();
    // enumerate proper sub-multisets tau containing one designated copy of the
    // first present value
    size_t first = 0;
    while (first < r && take[first] == 0) ++first;
    std::vector<unsigned> tau(r, 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == r) {
            bool proper = false;
            for (size_t i = 0; i < r; ++i)
                if (tau[i] < take[i]) proper = true;
            if (!proper) return;
            Rational ways = 1;
            for (size_t i = 0; i < r; ++i) {
                unsigned avail = take[i] - (i == first ? 1 : 0);
                unsigned chosen = tau[i] - (i == first ? 1 : 0);
                ways *= Rational(binomial(avail, chosen));
            }
            std::vector<unsigned> rest(r);
            for (size_t i = 0; i < r; ++i) rest[i] = take[i] - tau[i];
            result -= ways * connected_rec(ms, tau, memo) *
                      rescaled_trace_moment(ms.to_partition(rest));
            return;
        }
        unsigned lo = pos == first ? 1 : 0;
        unsigned hi = take[pos];
        for (unsigned t = lo; t <= hi; ++t) {
            tau[pos] = t;
            self(self, pos + 1);
        }
        tau[pos] = 0;
    };
    if (first < r) rec(rec, 0);
    memo[mu] = result;
    return result;
}

}  // namespace

ConnectedCorrelator connected_correlator(const Partition& mu) {
    if (mu.weight() > 20)
        throw std::invalid_argument("connected_correlator: |mu| exceeds 20");
    if (mu.empty()) return {mu, LaurentPolyN(Rational(1))};
    MultisetMoments ms;
    for (const auto& [v, b] : frequency(mu)) {
        ms.values.push_back(v);
        ms.mult.push_back(b);
    }
    std::map<Partition, LaurentPolyN> memo;
    LaurentPolyN value = connected_rec(ms, ms.mult, memo);
    return {mu, value};
}

Rational genus_coefficient(const Partition& mu, unsigned g) {
    LaurentPolyN c = connected_correlator(mu).value;
    int exp = 2 - 2 * static_cast<int>(g) - static_cast<int>(mu.length());
    return c.coeff(exp) * pow_rational(Rational(2), mu.weight());
}

LaurentPolyN xk_cumulant(unsigned k, unsigned n) {
    if (n < 2) throw std::invalid_argument("xk_cumulant: order n must be >= 2");
    if (k == 0 || n * k > 20) throw std::invalid_argument("xk_cumulant: need k >= 1 and n*k <= 20");
    ChebyshevCoeffs cheb = chebyshev_coeffs(k);
    std::vector<std::pair<unsigned, Rational>> s;  // active trace degrees and weights
    for (const auto& [d, a] : cheb.coeffs)
        if (d >= 1) s.emplace_back(d, a);

    LaurentPolyN total;
    std::vector<unsigned> counts(s.size(), 0);
    auto rec = [&](auto&& self, size_t pos, unsigned left, Rational weight) -> void {
        if (pos == s.size()) {
            if (left != 0) return;
            std::vector<unsigned> parts;
            for (size_t i = 0; i < s.size(); ++i)
                parts.insert(parts.end(), counts[i], s[i].first);
            std::sort(parts.rbegin(), parts.rend());
            total += weight * connected_correlator(Partition(std::move(parts))).value;
            return;
        }
        Rational w = weight;
        for (unsigned c = 0; c <= left; ++c) {
            counts[pos] = c;
            self(self, pos + 1, left - c, w);
            w *= s[pos].second / (c + 1);
        }
        counts[pos] = 0;
    };
    rec(rec, 0, n, Rational(1));
    return total * Rational(factorial(n));
}

LaurentPolyN tr_m2_power_closed_form(unsigned n, unsigned mixed_k) {
    if (n == 0 || n > 10 || mixed_k > n)
        throw std::invalid_argument("tr_m2_power_closed_form: need 1 <= n <= 10, mixed_k <= n");
    PolyN prod = Rational(1);
    for (unsigned l = n - mixed_k; l < n; ++l)
        prod *= PolyN::from_coeffs({Rational(2 * static_cast<long long>(l)), Rational(0), Rational(1)});
    LaurentPolyN r = prod.to_laurent().shifted(static_cast<int>(n - mixed_k) - static_cast<int>(n));
    r *= Rational(double_factorial(2 * (static_cast<long long>(n) - mixed_k) - 1)) *
         pow_rational(Rational(4), -static_cast<long long>(n));
    return r;
}

}  // namespace rmtsf
