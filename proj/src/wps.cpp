#include "shioda/wps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shioda {

WeightSystem::WeightSystem(Vec w) : weights(std::move(w)) {
    if (weights.empty()) throw DimensionMismatchError("empty weight system");
    for (size_t i = 0; i < weights.size(); ++i)
        if (weights[i] < 1) throw NonPositiveWeightError("q", static_cast<int>(i));
}

Int WeightSystem::total() const { return std::accumulate(weights.begin(), weights.end(), Int(0)); }

std::pair<Int, WeightSystem> reduce_gcd(const WeightSystem& q) {
    Int m = vec_gcd(q.weights);
    Vec w(q.weights.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = q.weights[i] / m;
    return {m, WeightSystem(std::move(w))};
}

namespace {

// d_i = gcd of all weights except the i-th.
Vec complement_gcds(const Vec& w) {
    const int n = static_cast<int>(w.size());
    Vec d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) mpz_gcd(d[i].get_mpz_t(), d[i].get_mpz_t(), w[j].get_mpz_t());
    return d;
}

}  // namespace

bool is_well_formed(const WeightSystem& q) {
    if (q.n() == 1) return q.weights[0] == 1;
    for (const Int& d : complement_gcds(q.weights))
        if (d != 1) return false;
    return true;
}

WeightSystem well_form(const WeightSystem& q) {
    Vec w = q.weights;
    const int n = static_cast<int>(w.size());
    if (n == 1) return WeightSystem(Vec{1});
    for (;;) {
        Vec d = complement_gcds(w);
        bool done = true;
        for (const Int& di : d)
            if (di != 1) done = false;
        if (done) break;
        for (int i = 0; i < n; ++i) {
            Int a = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) mpz_lcm(a.get_mpz_t(), a.get_mpz_t(), d[j].get_mpz_t());
            // a_i divides q_i: every d_j (j != i) divides q_i.
            if (w[i] % a != 0) throw InternalError("well_form: lcm does not divide weight");
            w[i] /= a;
        }
    }
    return WeightSystem(std::move(w));
}

std::vector<SingularStratum> singular_strata(const WeightSystem& q) {
    std::map<Int, std::vector<int>> by_prime;
    for (int i = 0; i < q.n(); ++i) {
        Int w = q.weights[i];
        for (Int p = 2; p * p <= w; ++p) {
            if (w % p != 0) continue;
            by_prime[p].push_back(i);
            while (w % p == 0) w /= p;
        }
        if (w > 1) by_prime[w].push_back(i);
    }
    std::vector<SingularStratum> strata;
    for (auto& [p, idx] : by_prime) strata.push_back({p, std::move(idx)});
    return strata;
}

bool fano_divisibility(const WeightSystem& q) {
    Int Q = q.total();
    return std::all_of(q.weights.begin(), q.weights.end(), [&](const Int& w) { return Q % w == 0; });
}

}  // namespace shioda
