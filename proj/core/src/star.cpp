#include "confspace/star.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace confspace {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Integer gamma_star(int n, int E) {
    if (n < 1 || n > E) throw std::invalid_argument("gamma_star requires 1 <= n <= E");
    return E * binomial(E - 1, n - 1) - binomial(E + 1, n) + 1;
}

Integer alpha_star(int k, int E) {
    if (k < 2 || E < k) throw std::invalid_argument("alpha_star requires 2 <= k <= E");
    return (k % 2 ? -1 : 1) * binomial(E - 1, k);
}

Integer alpha_star_recursive(int k, int E) {
    if (k < 2 || E < k) throw std::invalid_argument("alpha_star requires 2 <= k <= E");
    static thread_local std::map<std::pair<int, int>, Integer> memo;
    if (auto it = memo.find({k, E}); it != memo.end()) return it->second;
    Integer a = gamma_star(k, E);
    for (int i = 1; i <= k - 2; ++i) a -= binomial(E, i) * alpha_star_recursive(k - i, E - i);
    memo.emplace(std::make_pair(k, E), a);
    return a;
}

Integer alpha_star_sum(int k, int E) {
    if (k < 2 || E < k) throw std::invalid_argument("alpha_star requires 2 <= k <= E");
    Integer a = 0;
    for (int i = 0; i <= k - 2; ++i) a += (i % 2 ? -1 : 1) * binomial(E, i) * gamma_star(k - i, E - i);
    return a;
}

Integer beta_star(int n, int E) {
    if (n < 2 || E < 3) throw std::invalid_argument("beta_star requires n >= 2, E >= 3");
    return binomial(n + E - 2, E - 1) * (E - 2) - binomial(n + E - 2, E - 2) + 1;
}

Integer beta_star_inclusion_exclusion(int n, int E) {
    if (n < 2 || E < 3) throw std::invalid_argument("beta_star requires n >= 2, E >= 3");
    Integer b = 0;
    for (int m = 2; m <= E - 1; ++m) {
        b += binomial(n - m + E - 1, E - 1) * gamma_star(m, E);
        for (int j = 1; j <= E - m; ++j)
            b += (j % 2 ? -1 : 1) * binomial(n - m - j + E, E - 1) * binomial(E, j) * gamma_star(m - 1, E - j);
    }
    return b;
}

Integer beta_star_alpha_sum(int n, int E) {
    if (n < 2 || E < 3) throw std::invalid_argument("beta_star requires n >= 2, E >= 3");
    Integer b = 0;
    for (int k = 2; k <= E - 1; ++k) b += binomial(n - k + E - 1, E - 1) * alpha_star_sum(k, E);
    return b;
}

}  // namespace confspace
