#include "torfix/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "torfix/mahler.hpp"
#include "torfix/spectral.hpp"

namespace torfix {

IntPoly family_poly(unsigned g) {
    if (g < 1) throw DomainError("family member needs g >= 1");
    std::vector<Int> c(2 * static_cast<std::size_t>(g) + 1, Int(1));
    c[1] -= 3;
    c[2 * static_cast<std::size_t>(g) - 1] -= 3;
    return IntPoly(std::move(c));
}

FamilyRow scan_family_row(unsigned g, unsigned prime_budget, unsigned precision_bits) {
    const IntPoly p = family_poly(g);
    FamilyRow row;
    row.g = g;
    SpectralSplit split = cyclotomic_split(p);
    row.cyclotomic_free = split.cyclotomic_factors.empty() && split.zero_multiplicity == 0;
    row.unit_circle_distinct = split.unit_circle_distinct;
    row.witness_prime = irreducible_mod_p_witness(p, prime_budget);
    MahlerEstimate m = mahler_measure(p, precision_bits);
    row.mahler_log = m.log_value;
    row.mahler_error = m.error_bound;
    return row;
}

std::vector<FamilyRow> scan_family(unsigned g_min, unsigned g_max, unsigned prime_budget,
                                   unsigned precision_bits, unsigned jobs) {
    if (g_min < 1 || g_min > g_max) throw DomainError("scan needs 1 <= g_min <= g_max");
    if (jobs < 1) jobs = 1;
    const std::size_t count = g_max - g_min + 1;
    std::vector<FamilyRow> rows(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = scan_family_row(g_min + static_cast<unsigned>(i), prime_budget,
                                          precision_bits);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (jobs == 1 || count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

} // namespace torfix
