#include "treecalc/arith/qanalog.hpp"

#include <vector>

namespace treecalc {

QPoly q_integer(unsigned n)
{
    return QPoly(std::vector<Rational>(n, Rational(1)));
}

QPoly q_factorial(unsigned n)
{
    thread_local std::vector<QPoly> table{QPoly(1)};
    while (table.size() <= n) {
        table.push_back(table.back() * q_integer(static_cast<unsigned>(table.size())));
    }
    return table[n];
}

QPoly q_binomial(unsigned n, int k)
{
    if (k < 0 || static_cast<unsigned>(k) > n) {
        return {};
    }
    // rows[n][k], filled row by row on demand
    thread_local std::vector<std::vector<QPoly>> rows{{QPoly(1)}};
    while (rows.size() <= n) {
        const auto &prev = rows.back();
        const std::size_t m = rows.size();
        std::vector<QPoly> row(m + 1);
        row[0] = QPoly(1);
        row[m] = QPoly(1);
        for (std::size_t j = 1; j < m; ++j) {
            row[j] = prev[j - 1] + prev[j].shifted(j);
        }
        rows.push_back(std::move(row));
    }
    return rows[n][static_cast<std::size_t>(k)];
}

} // namespace treecalc
