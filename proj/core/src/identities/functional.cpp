#include "treecalc/identities/functional.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

const Rational half = Rational(1) / Rational(2);

BigInt int_power(unsigned long base, unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

AlphaPoly linear(const Rational &constant, const Rational &slope)
{
    return AlphaPoly(std::vector<Rational>{constant, slope});
}

// ((mh+1)α + 1 - h) / ((m+1)h)
AlphaPoly las3_factor(std::size_t h, std::size_t m)
{
    const Rational den(static_cast<unsigned long>((m + 1) * h));
    return linear(Rational(1 - static_cast<long>(h)) / den, Rational(static_cast<unsigned long>(m * h + 1)) / den);
}

AlphaPoly las1_factor(std::size_t h)
{
    return linear(Rational(1) / Rational(static_cast<unsigned long>(h)), Rational(1));
}

template <class Factor>
AlphaPoly tree_product(const MAryTree &t, Factor &&factor)
{
    AlphaPoly prod(1);
    for (std::size_t h : hook_data(t).hooks) {
        prod *= factor(h);
    }
    return prod;
}

template <class Factor>
AlphaPoly sum_over_mary_trees(std::size_t m, std::size_t n, Factor &&factor)
{
    AlphaPoly sum;
    for_each_mary_tree(m, n, [&](const MAryTree &t) { sum += tree_product(t, factor); });
    return sum;
}

std::string dump(const nlohmann::json &j) { return j.dump(); }

void require_positive(std::size_t n, const char *what)
{
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": n must be at least 1");
    }
}

void guard(bool exceeded, bool allow_large, const std::string &what)
{
    if (exceeded && !allow_large) {
        throw SizeGuard(what + " exceeds the default guard; pass --unsafe-large to override");
    }
}

} // namespace

BinaryOp<RationalSeries> inverse_linear_op()
{
    return [](const RationalSeries &x, const RationalSeries &y) { return integrate(x * y); };
}

BinaryOp<RationalSeries> postnikov_op()
{
    return [](const RationalSeries &x, const RationalSeries &y) {
        const RationalSeries p = x * y;
        return p.shifted(1) * half + integrate(p) * half;
    };
}

MultiOp<AlphaSeries> duliu_op(std::size_t m)
{
    const Rational den(static_cast<unsigned long>(m + 1));
    const AlphaPoly algebraic = linear(Rational(-1) / den, Rational(static_cast<unsigned long>(m)) / den);
    const AlphaPoly integral = linear(Rational(1) / den, Rational(1) / den);
    return [algebraic, integral](std::span<const AlphaSeries> xs) {
        AlphaSeries p = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i) {
            p = p * xs[i];
        }
        return p.shifted(1).scaled(algebraic) + integrate(p).scaled(integral);
    };
}

RationalSeries eisenstein_series(std::size_t order)
{
    RationalSeries g(order);
    g.set(0, Rational(1));
    for (std::size_t n = 1; n <= order; ++n) {
        g.set(n, Rational(int_power(n + 1, n - 1), factorial(static_cast<unsigned>(n))));
    }
    return g;
}

AlphaSeries lagrange_series(std::size_t m, std::size_t order)
{
    AlphaSeries f(order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational top(static_cast<unsigned long>(m * n + 1));
        f.set(n, generalized_binomial(linear(Rational(0), top), n) / top);
    }
    return f;
}

DuLiuVariant parse_duliu_variant(std::string_view name)
{
    if (name == "las1") {
        return DuLiuVariant::Las1;
    }
    if (name == "las2") {
        return DuLiuVariant::Las2;
    }
    if (name == "las3") {
        return DuLiuVariant::Las3;
    }
    throw ParseError("unknown variant '" + std::string(name) + "' (expected las1, las2 or las3)");
}

std::string_view duliu_variant_name(DuLiuVariant v)
{
    switch (v) {
    case DuLiuVariant::Las1:
        return "las1";
    case DuLiuVariant::Las2:
        return "las2";
    case DuLiuVariant::Las3:
        return "las3";
    }
    return "";
}

AlphaPoly las1_lhs(std::size_t n)
{
    return sum_over_mary_trees(1, n, [](std::size_t h) { return las1_factor(h); });
}

AlphaPoly las2_lhs(std::size_t n) { return las3_lhs(n, 1); }

AlphaPoly las3_lhs(std::size_t n, std::size_t m)
{
    return sum_over_mary_trees(m, n, [m](std::size_t h) { return las3_factor(h, m); });
}

AlphaPoly las1_rhs(std::size_t n)
{
    AlphaPoly prod(1);
    for (std::size_t i = 0; i < n; ++i) {
        prod *= linear(Rational(static_cast<unsigned long>(n + 1 - i)), Rational(static_cast<unsigned long>(n + 1 + i)));
    }
    return prod / Rational(factorial(static_cast<unsigned>(n + 1)));
}

AlphaPoly las2_rhs(std::size_t n) { return las3_rhs(n, 1); }

AlphaPoly las3_rhs(std::size_t n, std::size_t m)
{
    const Rational top(static_cast<unsigned long>(m * n + 1));
    return generalized_binomial(linear(Rational(0), top), n) / top;
}

AlphaPoly homogenize_las1(const AlphaPoly &p, std::size_t n)
{
    const AlphaPoly minus = linear(Rational(-1), Rational(1));
    const AlphaPoly plus = linear(Rational(1), Rational(1));
    AlphaPoly out;
    for (std::size_t j = 0; j <= n; ++j) {
        const Rational c = p.coefficient(j);
        if (c.is_zero()) {
            continue;
        }
        AlphaPoly term(c);
        for (std::size_t i = 0; i < j; ++i) {
            term *= minus;
        }
        for (std::size_t i = j; i < n; ++i) {
            term *= plus;
        }
        out += term;
    }
    return out / Rational(int_power(2, n));
}

IdentityReport postnikov_check(std::size_t n, bool allow_large, bool per_tree)
{
    require_positive(n, "postnikov");
    guard(n > postnikov_guard, allow_large, "postnikov n=" + std::to_string(n));
    Stopwatch clock;
    IdentityReport r;
    r.identity = "postnikov";
    r.parameters = {{"n", n}};

    const Rational lhs(int_power(n + 1, n - 1));
    const Rational scale = Rational(factorial(static_cast<unsigned>(n))) / Rational(int_power(2, n));

    // Direct route: exact rational sum of prod (h+1)/h.
    Rational sum;
    // Series route: the t^n coefficient of each tree term.
    BinaryTermEvaluator<RationalSeries> eval(postnikov_op(), RationalSeries::constant(Rational(1), n), n - 1);
    Rational series_sum;
    bool per_tree_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    const Rational two_n(int_power(2, n));
    for_each_binary_tree(n, [&](const BinaryTree &t) {
        BigInt num = 1;
        BigInt den = 1;
        for (std::size_t h : hook_data(t).hooks) {
            num *= static_cast<unsigned long>(h + 1);
            den *= static_cast<unsigned long>(h);
        }
        const Rational product(num, den);
        sum += product;
        const RationalSeries term = eval(t);
        const Rational coeff = term[n];
        series_sum += coeff;
        if (coeff != product / two_n) {
            per_tree_ok = false;
        }
        if (per_tree) {
            rows.push_back({{"tree", t.encode()}, {"product", product.to_string()}, {"term", coeff.to_string()}});
        }
    });

    const Rational rhs = scale * sum;
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = r.lhs == r.rhs;
    r.cross_checks["series_route_per_tree"] = per_tree_ok;
    r.cross_checks["series_route_sum"] = series_sum * Rational(factorial(static_cast<unsigned>(n))) == lhs;
    if (n <= duliu_binary_guard) {
        r.cross_checks["las1_at_alpha_1"] = las1_lhs(n).evaluate(Rational(1)) * scale == lhs;
    }
    if (per_tree) {
        r.per_tree = std::move(rows);
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

IdentityReport eisenstein_check(std::size_t order, bool allow_large)
{
    guard(order > eisenstein_guard, allow_large, "eisenstein order=" + std::to_string(order));
    Stopwatch clock;
    IdentityReport r;
    r.identity = "eisenstein";
    r.parameters = {{"order", order}};

    const RationalSeries explicit_g = eisenstein_series(order);
    const auto expansion = fixed_point_binary(postnikov_op(), RationalSeries::constant(Rational(1), order), order, false);
    r.lhs = dump(series_to_json(explicit_g));
    r.rhs = dump(series_to_json(expansion.sum()));
    r.equal = r.lhs == r.rhs;
    r.cross_checks["exp_residual"] = exp_series(explicit_g.shifted(1)) == explicit_g;
    r.cross_checks["picard"] =
        picard_binary(postnikov_op(), RationalSeries::constant(Rational(1), order), order) == explicit_g;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

IdentityReport duliu_check(DuLiuVariant variant, std::size_t n, std::size_t m, bool allow_large, bool per_tree)
{
    if (variant != DuLiuVariant::Las3 && m != 1) {
        throw VariantArityMismatch(std::string(duliu_variant_name(variant)) + " is stated for binary trees (m=1), got m=" +
                                   std::to_string(m));
    }
    if (m == 0) {
        throw std::invalid_argument("duliu: m must be at least 1");
    }
    guard(m > duliu_max_m, allow_large, "duliu m=" + std::to_string(m));
    guard(n > (m == 1 ? duliu_binary_guard : duliu_mary_guard), allow_large, "duliu n=" + std::to_string(n));
    Stopwatch clock;
    IdentityReport r;
    r.identity = "duliu";
    r.parameters = {{"variant", duliu_variant_name(variant)}, {"n", n}, {"m", m}};

    AlphaPoly lhs;
    AlphaPoly rhs;
    switch (variant) {
    case DuLiuVariant::Las1:
        lhs = las1_lhs(n);
        rhs = las1_rhs(n);
        break;
    case DuLiuVariant::Las2:
        lhs = las2_lhs(n);
        rhs = las2_rhs(n);
        break;
    case DuLiuVariant::Las3:
        lhs = las3_lhs(n, m);
        rhs = las3_rhs(n, m);
        break;
    }
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = r.lhs == r.rhs;

    if (variant == DuLiuVariant::Las1) {
        r.cross_checks["homogenized_las2"] = homogenize_las1(lhs, n) == las2_lhs(n);
    } else {
        // Each tree term of x = 1 + F(x, ..., x) is the per-node product times t^n.
        MAryTermEvaluator<AlphaSeries> eval(duliu_op(m), AlphaSeries::constant(AlphaPoly(1), n));
        bool ok = true;
        nlohmann::json rows = nlohmann::json::array();
        for_each_mary_tree(m, n, [&](const MAryTree &t) {
            const AlphaPoly product = tree_product(t, [m](std::size_t h) { return las3_factor(h, m); });
            const AlphaSeries term = eval(t);
            if (term != AlphaSeries::monomial(n, n, product)) {
                ok = false;
            }
            if (per_tree) {
                rows.push_back({{"tree", t.encode()}, {"product", product.to_string()}});
            }
        });
        r.cross_checks["series_route_per_tree"] = ok;
        if (per_tree) {
            r.per_tree = std::move(rows);
        }
    }
    if (per_tree && variant == DuLiuVariant::Las1) {
        nlohmann::json rows = nlohmann::json::array();
        for_each_mary_tree(1, n, [&](const MAryTree &t) {
            rows.push_back({{"tree", t.encode()}, {"product", tree_product(t, las1_factor).to_string()}});
        });
        r.per_tree = std::move(rows);
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

IdentityReport duliu_cross_check(std::size_t n, bool allow_large)
{
    guard(n > duliu_binary_guard, allow_large, "duliu n=" + std::to_string(n));
    Stopwatch clock;
    IdentityReport r;
    r.identity = "duliu-las1-las2";
    r.parameters = {{"n", n}};
    r.lhs = homogenize_las1(las1_lhs(n), n).to_string();
    r.rhs = las2_lhs(n).to_string();
    r.equal = r.lhs == r.rhs;
    r.cross_checks["homogenized_rhs"] = homogenize_las1(las1_rhs(n), n) == las2_rhs(n);
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

IdentityReport lagrange_fixed_point_check(std::size_t m, std::size_t order, bool allow_large)
{
    if (m == 0) {
        throw std::invalid_argument("lagrange: m must be at least 1");
    }
    guard(m > lagrange_max_m, allow_large, "lagrange m=" + std::to_string(m));
    guard(order > lagrange_guard, allow_large, "lagrange order=" + std::to_string(order));
    Stopwatch clock;
    IdentityReport r;
    r.identity = "lagrange";
    r.parameters = {{"m", m}, {"order", order}};

    const AlphaSeries f = lagrange_series(m, order);
    const AlphaSeries one = AlphaSeries::constant(AlphaPoly(1), order);
    const auto expansion = fixed_point_mary(m, duliu_op(m), one, order, false);
    r.lhs = dump(series_to_json(f));
    r.rhs = dump(series_to_json(expansion.sum()));
    r.equal = r.lhs == r.rhs;
    r.cross_checks["binomial_residual"] = binomial_series(AlphaPoly::variable(), power(f, m).shifted(1)) == f;
    r.cross_checks["picard"] = picard_mary(m, duliu_op(m), one, order) == f;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

} // namespace treecalc
