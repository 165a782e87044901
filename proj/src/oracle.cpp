#include "shioda/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace shioda {

namespace {

using u64 = std::uint64_t;
using Elem = std::vector<long>;

// Invariant factors of a finite abelian group from the counting function
// count(m) = #{ g : m*g = 0 }, one prime at a time.
std::vector<Int> factors_from_counts(u64 order, const std::function<u64(u64)>& count) {
    if (order == 1) return {};
    // Exponent multisets per prime, largest first.
    std::vector<std::pair<u64, std::vector<int>>> parts;
    u64 rest = order;
    for (u64 p = 2; p * p <= rest || rest > 1; ++p) {
        if (p * p > rest) p = rest;
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<int> exps;
        u64 prev = 1, pj = 1;
        for (int j = 1;; ++j) {
            pj *= p;
            u64 cj = count(pj);
            if (cj % prev != 0) throw InternalError("brute-force oracle: count is not a p-power multiple");
            u64 ratio = cj / prev;
            int grew = 0;
            while (ratio > 1) {
                if (ratio % p != 0) throw InternalError("brute-force oracle: count ratio not a p-power");
                ratio /= p;
                ++grew;
            }
            if (grew == 0) break;
            for (int i = 0; i < grew; ++i) {
                if (static_cast<size_t>(i) >= exps.size()) exps.push_back(0);
                exps[i] = j;
            }
            prev = cj;
        }
        std::sort(exps.rbegin(), exps.rend());
        parts.emplace_back(p, std::move(exps));
    }
    size_t nfac = 0;
    for (const auto& [p, exps] : parts) nfac = std::max(nfac, exps.size());
    std::vector<Int> factors(nfac, 1);
    for (const auto& [p, exps] : parts)
        for (size_t i = 0; i < exps.size(); ++i) {
            Int pe = 1;
            for (int j = 0; j < exps[i]; ++j) pe *= static_cast<long>(p);
            factors[i] *= pe;  // position 0 = largest invariant factor
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

}  // namespace

std::optional<BruteForceGroups> brute_force_groups(const ShiodaData& data, u64 budget) {
    if (!data.is_cy) throw NotCalabiYauError();
    if (!data.d.fits_slong_p()) return std::nullopt;
    const long d = data.d.get_si();
    const int n = data.n();
    u64 total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<u64>(d)) return std::nullopt;
        total *= static_cast<u64>(d);
    }

    std::vector<long> qp(n), q(n);
    for (int i = 0; i < n; ++i) {
        qp[i] = mpz_fdiv_ui(data.q_prime[i].get_mpz_t(), d);
        q[i] = mpz_fdiv_ui(data.q[i].get_mpz_t(), d);
    }
    std::vector<std::vector<long>> B(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B[i][j] = mpz_fdiv_ui(data.B(i, j).get_mpz_t(), d);

    auto b_image = [&](const Elem& k) {
        Elem r(n, 0);
        for (int i = 0; i < n; ++i) {
            long s = 0;
            for (int j = 0; j < n; ++j) s = (s + B[i][j] * k[j]) % d;
            r[i] = s;
        }
        return r;
    };
    // True iff v is a multiple of q modulo d, i.e. g_v is a weighted scaling.
    auto is_scaling = [&](const Elem& v) {
        for (long c = 0; c < d; ++c) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = v[i] == (c * q[i]) % d;
            if (ok) return true;
        }
        return false;
    };

    // Coset representatives of Gamma_d: k in (Z/d)^n with k_n = 0.  For such
    // representatives m*g vanishes in the quotient iff m*k == 0 mod d.
    std::vector<Elem> members;        // Gamma(q') as a set
    std::vector<bool> in_kernel;      // member also lies in Gamma_A
    Elem k(n, 0);
    for (;;) {
        long s = 0;
        for (int i = 0; i < n; ++i) s = (s + qp[i] * k[i]) % d;
        if (s == 0) {
            members.push_back(k);
            in_kernel.push_back(is_scaling(b_image(k)));
        }
        int i = 0;
        while (i < n - 1 && k[i] == d - 1) k[i++] = 0;
        if (i == n - 1) break;
        k[i] += 1;
    }

    auto count_killed = [&](u64 m, bool kernel_only) {
        u64 c = 0;
        for (size_t idx = 0; idx < members.size(); ++idx) {
            if (kernel_only && !in_kernel[idx]) continue;
            bool zero = true;
            for (int i = 0; i < n && zero; ++i)
                zero = (static_cast<u64>(members[idx][i]) * m) % static_cast<u64>(d) == 0;
            if (zero) ++c;
        }
        return c;
    };

    BruteForceGroups result;
    u64 order_qp = members.size();
    u64 order_ker = static_cast<u64>(std::count(in_kernel.begin(), in_kernel.end(), true));
    result.gamma_q_prime = factors_from_counts(order_qp, [&](u64 m) { return count_killed(m, false); });
    result.gamma_A = factors_from_counts(order_ker, [&](u64 m) { return count_killed(m, true); });

    // H_A: distinct images B k modulo the weighted scalings.
    auto canonical = [&](const Elem& v) {
        Elem best = v;
        for (long c = 1; c < d; ++c) {
            Elem w(n);
            for (int i = 0; i < n; ++i) w[i] = (v[i] + c * q[i]) % d;
            if (w < best) best = w;
        }
        return best;
    };
    std::map<Elem, Elem> classes;  // canonical image -> some preimage's B k
    for (const Elem& mk : members) {
        Elem img = b_image(mk);
        classes.emplace(canonical(img), img);
    }
    auto count_killed_image = [&](u64 m) {
        u64 c = 0;
        for (const auto& [canon, img] : classes) {
            Elem scaled(n);
            for (int i = 0; i < n; ++i)
                scaled[i] = static_cast<long>((static_cast<u64>(img[i]) * m) % static_cast<u64>(d));
            if (is_scaling(scaled)) ++c;
        }
        return c;
    };
    result.h_A = factors_from_counts(classes.size(), count_killed_image);
    return result;
}

}  // namespace shioda
