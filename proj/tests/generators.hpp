#ifndef SHIODA_TESTS_GENERATORS_HPP
#define SHIODA_TESTS_GENERATORS_HPP

#include <random>

#include "shioda/core.hpp"

namespace shioda::testing {

// Random admissible Calabi-Yau exponent matrix: pick positive weights w and
// d = sum(w), then fill each row a with a.w = d, a >= 0.  Any invertible
// result satisfies the degree condition by construction (its derived q is
// proportional to w); non-positive dual weights are rejected by retry.
inline ExponentMatrix random_cy_matrix(std::mt19937_64& rng, int max_n = 5, long max_entry = 10) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    std::uniform_int_distribution<long> w_dist(1, 6);
    for (;;) {
        const int n = n_dist(rng);
        std::vector<long> w(n);
        long d = 0;
        for (int i = 0; i < n; ++i) {
            w[i] = w_dist(rng);
            d += w[i];
        }
        std::vector<Vec> rows;
        bool row_fail = false;
        for (int i = 0; i < n && !row_fail; ++i) {
            // Fill positions in random order, spending the remaining degree.
            std::vector<int> order(n);
            for (int j = 0; j < n; ++j) order[j] = j;
            std::shuffle(order.begin(), order.end(), rng);
            bool done = false;
            for (int attempt = 0; attempt < 20 && !done; ++attempt) {
                Vec a(n, 0);
                long rem = d;
                for (int pos = 0; pos < n; ++pos) {
                    int j = order[pos];
                    long cap = std::min(max_entry, rem / w[j]);
                    if (pos == n - 1) {
                        if (rem % w[j] == 0 && rem / w[j] <= max_entry) {
                            a[j] = rem / w[j];
                            rem = 0;
                        }
                        break;
                    }
                    long e = std::uniform_int_distribution<long>(0, cap)(rng);
                    a[j] = e;
                    rem -= e * w[j];
                }
                if (rem == 0) {
                    rows.push_back(a);
                    done = true;
                }
            }
            row_fail = !done;
        }
        if (row_fail) continue;
        try {
            ExponentMatrix A(IntMatrix::from_rows(rows));
            analyze(A);  // rejects non-positive q or q'
            return A;
        } catch (const Error&) {
            continue;
        }
    }
}

}  // namespace shioda::testing

#endif
