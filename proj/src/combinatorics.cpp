#include "zetalab/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace zetalab {

BigInt binomial(unsigned long n, unsigned long j) {
    if (j > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, j);
    return r;
}

namespace {

std::mutex bern_mutex;
// All Bernoulli numbers, odd indices included (they are needed while running
// the recurrence; B_1 = -1/2, higher odd ones vanish).
std::vector<BigRational> bern_table = {BigRational(1)};

// Extends the table through index n. Caller holds the lock.
void extend_locked(size_t n) {
    while (bern_table.size() <= n) {
        const size_t m = bern_table.size();
        BigRational acc(0);
        for (size_t j = 0; j < m; ++j)
            acc += BigRational(binomial(m + 1, j)) * bern_table[j];
        bern_table.push_back(-acc / BigRational(BigInt(m + 1)));
    }
}

} // namespace

BigRational bernoulli_even(unsigned k) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    extend_locked(2ul * k);
    return bern_table[2ul * k];
}

void bernoulli_warm_cache(unsigned k) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    extend_locked(2ul * k);
}

} // namespace zetalab
