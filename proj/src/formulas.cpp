#include "gridgenus/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gridgenus/constructions.hpp"

namespace gridgenus {

namespace {

Rational euler_expression(const GridSpec& spec) {
    auto c = counts(spec);
    return Rational(1) + Rational(c.edges, 4) - Rational(c.vertices, 2);
}

long long ceil_rational(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

}  // namespace

long long euler_lower_bound(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    if (norm.dimension() <= 1) return 0;
    Rational r = euler_expression(norm);
    if (r <= Rational(0)) return 0;
    return ceil_rational(r);
}

std::optional<long long> white_genus(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    auto p = parity_profile(norm);
    if (norm.dimension() < 3 || p.odd < 3) return std::nullopt;
    Rational r = euler_expression(norm);
    if (r.denominator() != 1)
        throw std::logic_error("white_genus: non-integer value for a quadrilateral grid");
    return boost::rational_cast<long long>(r);
}

ExactGenus exact_genus(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    const auto& p = norm.params;
    int k = norm.dimension();
    std::optional<long long> value;
    std::string tag;

    auto consider = [&](long long v, const std::string& t) {
        if (!value) {
            value = v;
            tag = t;
        } else if (*value != v) {
            throw std::logic_error("exact_genus: overlapping theorem families disagree");
        }
    };

    if (k <= 2) consider(0, "planar-low-dim");
    if (k == 3 && p[1] == 1 && p[2] == 1) consider(0, "prism-planar");
    if (auto w = white_genus(norm)) consider(*w, "quadrilateral");
    if (k == 3 && p[2] == 1) consider((p[0] / 2) * (p[1] / 2), "two-params-by-one");
    if (k == 3 && p[1] == 2 && p[2] == 2) consider(p[0], "alpha-2-2");
    if (!value) return {std::nullopt, "unknown"};
    return {value, tag};
}

Rational quadrilateral_distance(const GridSpec& spec, long long genus) {
    return Rational(genus) - euler_expression(spec.normalized());
}

long long max_genus(const GridSpec& spec) {
    return betti(spec.normalized()) / 2;
}

long long max_genus_closed_form(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    long long prod = 1;
    for (long long a : norm.params) prod *= a + 1;
    Rational sum(0);
    for (long long a : norm.params) sum += Rational(a, a + 1);
    Rational r = Rational(prod, 2) * (sum - Rational(1)) + Rational(1, 2);
    // floor
    long long num = r.numerator(), den = r.denominator();
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

GenusRange genus_range(const GridSpec& spec) {
    GenusRange r;
    r.high = max_genus(spec);
    ExactGenus e = exact_genus(spec);
    if (e.genus) {
        r.low = *e.genus;
        r.partial = false;
    } else {
        r.low = euler_lower_bound(spec);
        r.partial = true;
    }
    return r;
}

Classification classify_planar(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    const auto& p = norm.params;
    int k = norm.dimension();
    Classification c;
    if (k <= 2) {
        c.planar = true;
        c.reasons.push_back("dimension at most 2");
    } else if (k == 3) {
        int big = 0;
        for (long long a : p)
            if (a > 1) ++big;
        if (big <= 1) {
            c.planar = true;
            c.reasons.push_back("at most one parameter exceeds 1 (square prism)");
        } else {
            c.planar = false;
            c.reasons.push_back("contains a G(2,2,1) subgraph of genus 1");
        }
    } else {
        c.planar = false;
        c.reasons.push_back("contains a 4-cube subgraph of genus 1");
    }
    return c;
}

Classification classify_toroidal(const GridSpec& spec) {
    GridSpec norm = spec.normalized();
    const auto& p = norm.params;
    int k = norm.dimension();
    Classification c = classify_planar(spec);
    c.reasons.clear();
    if (k == 2 && p[0] + p[1] >= 3) {
        c.toroidal_2cell = true;
        c.reasons.push_back("2-dimensional with parameter sum at least 3");
    } else if (k == 3) {
        int big = 0;
        for (long long a : p)
            if (a > 1) ++big;
        if (big <= 1) {
            c.toroidal_2cell = true;
            c.reasons.push_back("square prism: planar with maximum genus at least 1");
        } else if ((p[0] == 2 && p[1] == 2 && p[2] == 1) ||
                   (p[0] == 3 && p[1] == 2 && p[2] == 1) ||
                   (p[0] == 3 && p[1] == 3 && p[2] == 1)) {
            c.toroidal_2cell = true;
            c.reasons.push_back("genus-1 grid of the listed 3-dimensional family");
        } else {
            c.toroidal_2cell = false;
            c.reasons.push_back("genus at least 2");
        }
    } else if (k == 4 && p[0] == 1 && p[1] == 1 && p[2] == 1 && p[3] == 1) {
        c.toroidal_2cell = true;
        c.reasons.push_back("the 4-cube has genus 1");
    } else {
        c.toroidal_2cell = false;
        if (k == 1)
            c.reasons.push_back("paths have no 2-cell torus embedding");
        else if (k == 2)
            c.reasons.push_back("maximum genus 0");
        else
            c.reasons.push_back("genus at least 2");
    }
    // Plain (non-2-cell) torus embeddings additionally cover every planar
    // grid of dimension at most 2.
    c.embeds_on_torus = c.toroidal_2cell || k <= 2;
    return c;
}

long long bipartite_genus(long long m, long long n) {
    if (m < 2 || n < 2) throw std::invalid_argument("bipartite_genus: needs m, n >= 2");
    long long num = (m - 2) * (n - 2);
    return (num + 3) / 4;
}

GenusBounds best_bounds(const GridSpec& spec, std::optional<long long> extra_lower,
                        const std::string& extra_lower_source) {
    GridSpec norm = spec.normalized();
    GenusBounds b;
    ExactGenus e = exact_genus(norm);
    if (e.genus) {
        b.lower = b.upper = *e.genus;
        b.lower_source = b.upper_source = "exact-theorem";
        b.exact = true;
        if (extra_lower && *extra_lower > b.lower)
            throw std::logic_error("best_bounds: packing bound exceeds the exact genus");
        return b;
    }
    b.lower = euler_lower_bound(norm);
    b.lower_source = "euler";
    if (extra_lower && *extra_lower > b.lower) {
        b.lower = *extra_lower;
        b.lower_source = extra_lower_source;
    }
    int k = norm.dimension();
    if (k == 3) {
        b.upper = perimeter_genus(norm);
        b.upper_source = "case-construction";
    } else {
        b.upper = recursive_upper_bound(norm);
        b.upper_source = "recursive";
    }
    if (auto w = white_genus(norm); w && *w < b.upper) {
        b.upper = *w;
        b.upper_source = "white";
    }
    b.exact = b.lower == b.upper;
    if (b.lower > b.upper) throw std::logic_error("best_bounds: crossed bounds");
    return b;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    if (r.denominator() == 1)
        os << r.numerator();
    else
        os << r.numerator() << "/" << r.denominator();
    return os.str();
}

}  // namespace gridgenus
