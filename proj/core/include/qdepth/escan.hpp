#pragma once

#include "qdepth/bigint.hpp"

#include <functional>
#include <string>

namespace qdepth {

// E(m, q, t, n) = sum_{j=0}^{t} (-1)^(t-j) C(q-j, t-j) C(n, m+j).
// Requires m >= 1, q >= t >= 1, n >= 0. The conjecture under scan says
// E >= 0 whenever n >= mq + m + q.
BigInt E_value(long long m, long long q, long long t, long long n);

// Same value through E(m,q,t,n) = E(m,q-1,t,n) - E(m,q-1,t-1,n), with the
// t = 1 and t = q rows computed from their own closed forms.
BigInt E_rec_q(long long m, long long q, long long t, long long n);

// Same value through E(m,q,t,n) = E(m,q,t,n-1) + E(m-1,q,t,n-1), grounded at
// m = 1 (direct sum) and n = 0 (zero).
BigInt E_rec_n(long long m, long long q, long long t, long long n);

// The j-th unsigned term of E: Gamma(j) = C(q-j, t-j) * C(n, m+j).
// Requires 0 <= j <= t.
BigInt gamma_term(long long m, long long q, long long t, long long j, long long n);

// Consecutive-term ratio Gamma(j+1)/Gamma(j) at the critical point:
// (t-j)(mq+q-j) / ((q-j)(m+j+1)). Requires 0 <= j <= t-1. alpha_ratio(.., 0)
// equals t, and the ratio is non-increasing in j.
BigRat alpha_ratio(long long m, long long q, long long t, long long j);

// E at n = mq + m + q via the telescoped product form
//   C(q,t) * C(mq+m+q, m) * sum_j (-1)^(t-j) prod_{l<j} alpha_ratio(l).
// The rational sum must collapse to an integer; anything else is a bug.
BigInt E_product_form(long long m, long long q, long long t);

// Which argument of the positivity conjecture settles this cell. Checked in
// this order: "m1-case" (m = 1), "t1-lemma" (t = 1), "t-eq-q-lemma" (t = q),
// "q-small" (q <= m + t - 1), "t-le-4" (t <= 4), else "open".
std::string classify_cell(long long m, long long q, long long t);

struct ScanCell {
    long long m = 0;
    long long q = 0;
    long long t = 0;
    long long n = 0; // always the critical point mq + m + q
    BigInt E;
    bool holds = false; // E >= 0
    std::string proof_status;
};

// Evaluates every cell 1 <= m <= m_max, 1 <= t <= q <= q_max at the critical
// n and feeds it to the sink in (m, q, t) lexicographic order. A cell whose
// proof_status is not "open" must hold; a violation there is a logic error,
// an open violation is reported through the sink only.
void conjecture_scan(long long m_max, long long q_max,
                     const std::function<void(const ScanCell&)>& sink);

} // namespace qdepth
