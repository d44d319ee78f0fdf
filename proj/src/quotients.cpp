#include "regquot/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "regquot/checked.hpp"
#include "regquot/error.hpp"

namespace regquot {

std::optional<int> QuotientStep::uniform_degree() const {
    if (degrees.empty()) return std::nullopt;
    for (auto d : degrees)
        if (d != degrees.front()) return std::nullopt;
    return degrees.front();
}

namespace {

int degree_of(const Monomial& m) {
    const auto d = m.degree();
    if (d > INT32_MAX) throw Overflow("monomial degree exceeds int range");
    return static_cast<int>(d);
}

}  // namespace

QuotientCertificate build_certificate(std::span<const Monomial> ordered_gens) {
    if (ordered_gens.empty()) throw BadParams("a certificate needs at least one generator");
    const std::size_t n = ordered_gens.front().nvars();
    const MonomialIdeal minimal = minimalize(ordered_gens, n);
    if (minimal.size() != ordered_gens.size())
        throw NotMinimal("the ordered generators are not a minimal generating set");

    QuotientCertificate c;
    c.nvars = n;
    c.gens.assign(ordered_gens.begin(), ordered_gens.end());
    c.order.resize(c.gens.size());
    std::iota(c.order.begin(), c.order.end(), std::size_t{0});
    for (const auto& g : c.gens) c.degrees.push_back(degree_of(g));

    std::optional<int> common;
    bool uniform = true;
    for (std::size_t k = 1; k < c.gens.size(); ++k) {
        const MonomialIdeal prefix = minimalize(std::span(c.gens).first(k), n);
        const MonomialIdeal q = colon(prefix, c.gens[k]);
        if (!is_regular_sequence(q.generators())) {
            std::ostringstream os;
            os << "colon at step k=" << k + 1 << " is not generated by a regular sequence: (";
            for (std::size_t i = 0; i < q.size(); ++i) os << (i ? ", " : "") << q.generators()[i];
            os << ')';
            throw NotRegularQuotients(k + 1, os.str());
        }
        QuotientStep step;
        step.k = k + 1;
        step.colon_gens = q.generators();
        for (const auto& g : step.colon_gens) {
            step.degrees.push_back(degree_of(g));
            if (!common) common = step.degrees.back();
            uniform = uniform && step.degrees.back() == *common;
        }
        c.steps.push_back(std::move(step));
    }
    if (uniform && common) c.uniform_a = common;
    return c;
}

QuotientCertificate build_certificate(const MonomialIdeal& I, std::span<const std::size_t> ordering) {
    if (I.is_zero()) throw BadParams("the zero ideal has no certificate");
    if (ordering.size() != I.size()) throw NotMinimal("ordering length differs from the number of minimal generators");
    std::vector<bool> seen(I.size(), false);
    std::vector<Monomial> ordered;
    for (auto idx : ordering) {
        if (idx >= I.size() || seen[idx]) throw NotMinimal("ordering is not a permutation of the minimal generators");
        seen[idx] = true;
        ordered.push_back(I.generators()[idx]);
    }
    QuotientCertificate c = build_certificate(ordered);
    c.order.assign(ordering.begin(), ordering.end());
    return c;
}

Polynomial hilbert_numerator(const QuotientCertificate& c) {
    if (c.gens.empty()) return {};
    Polynomial out = Polynomial::term(1, c.degrees.front());
    for (const auto& step : c.steps) {
        Polynomial term = Polynomial::term(1, c.degrees[step.k - 1]);
        for (auto a : step.degrees) term = term * (Polynomial::one() - Polynomial::term(1, a));
        out = out + term;
    }
    return out;
}

RegPdimBounds reg_pdim_bounds(const QuotientCertificate& c) {
    if (c.gens.empty()) throw BadParams("empty certificate");
    if (c.steps.empty()) return {c.degrees.front(), 0};
    RegPdimBounds b{INT32_MIN, 0};
    for (const auto& step : c.steps) {
        const int r = static_cast<int>(step.length());
        const int sum_a = std::accumulate(step.degrees.begin(), step.degrees.end(), 0);
        b.reg_bound = std::max(b.reg_bound, c.degrees[step.k - 1] + sum_a - r);
        b.pdim_bound = std::max(b.pdim_bound, r);
    }
    return b;
}

std::optional<ExtremalInfo> extremal_check(const QuotientCertificate& c) {
    const Polynomial numerator = hilbert_numerator(c);
    const RegPdimBounds b = reg_pdim_bounds(c);
    const int top = numerator.degree();
    if (b.pdim_bound + b.reg_bound != top) return std::nullopt;
    ExtremalInfo e;
    e.pdim = b.pdim_bound;
    e.reg = b.reg_bound;
    e.i = b.pdim_bound;
    e.j = top;
    e.value = (b.pdim_bound % 2 == 0 ? 1 : -1) * numerator.coeff(top);
    return e;
}

StepProfile StepProfile::from_certificate(const QuotientCertificate& c) {
    StepProfile p;
    p.d = c.degrees;
    p.a.assign(c.size(), 0);
    p.r.assign(c.size(), 0);
    for (const auto& step : c.steps) {
        const auto a = step.uniform_degree();
        if (!a) {
            std::ostringstream os;
            os << "step k=" << step.k << " mixes colon generator degrees";
            throw MixedStepDegrees(os.str());
        }
        p.a[step.k - 1] = *a;
        p.r[step.k - 1] = static_cast<int>(step.length());
    }
    return p;
}

BettiTable betti_upper_bound(const StepProfile& p) {
    BettiTable t(Exactness::UpperBound);
    for (std::size_t k = 0; k < p.size(); ++k)
        for (int i = 0; i <= p.r[k]; ++i) t.add(i, p.a[k] * i + p.d[k], binomial(p.r[k], i));
    return t;
}

BettiTable betti_upper_bound(const QuotientCertificate& c) {
    return betti_upper_bound(StepProfile::from_certificate(c));
}

ShiftReport check_shift_collisions(const StepProfile& p) {
    ShiftReport rep;
    int max_r = 0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        max_r = std::max(max_r, p.r[k]);
        for (int i = 1; i <= max_r + 1; ++i) {
            const int lhs = p.a[k] * i + p.d[k];
            for (std::size_t l = 0; l < k; ++l)
                if (lhs == p.a[l] * (i - 1) + p.d[l]) rep.violations.push_back({i, k + 1, l + 1});
        }
    }
    rep.holds = rep.violations.empty();
    return rep;
}

DegreeConditions check_degree_conditions(const StepProfile& p) {
    DegreeConditions rep;
    const std::size_t m = p.size();

    rep.uniform_gap = true;
    for (std::size_t k = 2; k < m; ++k) rep.uniform_gap = rep.uniform_gap && p.a[k] == p.a[1];
    if (rep.uniform_gap && m >= 2) {
        const int a = p.a[1];
        for (std::size_t k = 1; k < m; ++k)
            for (std::size_t l = 0; l < k; ++l)
                if (p.d[l] - p.d[k] == a) rep.uniform_gap = false;
    }

    rep.monotone = std::is_sorted(p.a.begin(), p.a.end()) && std::is_sorted(p.d.begin(), p.d.end());
    rep.principal_colons = std::all_of(p.r.begin() + (m > 0 ? 1 : 0), p.r.end(), [](int r) { return r == 1; });
    return rep;
}

BettiTable betti_exact(const StepProfile& p) {
    const ShiftReport shifts = check_shift_collisions(p);
    const DegreeConditions dc = check_degree_conditions(p);
    if (!(shifts.holds || dc.uniform_gap || dc.monotone || dc.principal_colons)) {
        std::ostringstream os;
        os << "exactness not proven: shift collisions at";
        for (const auto& v : shifts.violations) os << " (i=" << v.i << ",k=" << v.k << ",l=" << v.l << ")";
        os << "; neither degree condition holds; some colon has more than one generator";
        throw NotProvenExact(os.str());
    }
    BettiTable t = betti_upper_bound(p);
    t.set_exactness(Exactness::Exact);
    return t;
}

BettiTable betti_exact(const QuotientCertificate& c) { return betti_exact(StepProfile::from_certificate(c)); }

Reordering reorder_by_degree(const QuotientCertificate& c) {
    const std::size_t m = c.size();
    if (m >= 2 && !c.uniform_a) throw MixedStepDegrees("reordering needs a certificate with a single colon degree");
    const int a = c.uniform_a.value_or(1);

    std::vector<std::size_t> seq(m);
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    for (std::size_t k = 1; k < m; ++k) {
        const std::size_t cur = seq[k];
        const int bound = c.degrees[cur] + a - 1;
        if (c.degrees[seq[k - 1]] <= bound) continue;
        std::size_t j = k - 1;
        while (j > 0 && c.degrees[seq[j]] > bound) --j;
        if (c.degrees[seq[j]] > bound)
            throw MathError("no insertion point: the certificate violates the reordering hypothesis");
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(k));
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(j + 1), cur);
    }

    std::vector<Monomial> gens;
    for (auto s : seq) gens.push_back(c.gens[s]);
    Reordering out{seq, build_certificate(gens)};
    for (std::size_t p = 0; p < m; ++p) out.certificate.order[p] = c.order[seq[p]];
    return out;
}

std::vector<Monomial> existence_example(std::span<const int> step_degrees, int base_degree) {
    if (base_degree < 1) throw BadParams("base degree must be positive");
    for (auto a : step_degrees)
        if (a < 1) throw BadParams("step degrees must be positive");
    const std::size_t n = static_cast<std::size_t>(base_degree) +
                          2 * static_cast<std::size_t>(std::accumulate(step_degrees.begin(), step_degrees.end(), 0));
    std::size_t next = 0;
    auto fresh = [&](int deg) {
        std::vector<std::size_t> idx;
        for (int i = 0; i < deg; ++i) idx.push_back(next++);
        return Monomial::from_indices(n, idx);
    };

    std::vector<Monomial> gens{fresh(base_degree)};
    for (auto a : step_degrees) {
        const Monomial u1 = fresh(a), u2 = fresh(a);
        Monomial all(n);
        for (const auto& g : gens) all = lcm(all, g);
        for (auto& g : gens) g *= u1;
        gens.push_back(all * u2);
    }
    return gens;
}

}  // namespace regquot
