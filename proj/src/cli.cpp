#include "regquot/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>

#include "regquot/error.hpp"
#include "regquot/families.hpp"
#include "regquot/homology.hpp"
#include "regquot/json_io.hpp"
#include "regquot/random_corpus.hpp"

namespace regquot {

namespace {

struct Options {
    std::uint32_t field_char = PrimeField::kDefaultCharacteristic;
    std::optional<int> degree_bound;
    std::size_t max_generators = 18;
    std::uint64_t seed = 20240601;
    std::string format = "text";
};

struct Context {
    Options opts;
    std::ostream& out;
    PrimeField field() const { return PrimeField(opts.field_char); }
    bool json() const { return opts.format == "json"; }
    TaylorOptions taylor() const { return {opts.max_generators, true}; }
};

std::vector<std::size_t> parse_order_arg(const std::string& s) {
    std::string body = s;
    for (char& c : body)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<std::size_t> out;
    long long v;
    while (in >> v) {
        if (v < 0) throw ParseError("--order entries must be nonnegative");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (!in.eof()) throw ParseError("--order must be a list of integers such as 0,2,3,1");
    return out;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), std::size_t{0});
    return o;
}

QuotientCertificate certificate_for(const IdealInput& in, const MonomialIdeal& I,
                                    const std::optional<std::vector<std::size_t>>& order) {
    if (!order) return build_certificate(I, identity_order(I.size()));
    if (I.size() != in.generators.size())
        throw NotMinimal("an explicit order refers to the input generators, which are not minimal");
    return build_certificate(I, *order);
}

void print_table(const Context& ctx, const BettiTable& t) {
    if (ctx.json()) {
        Json j;
        j["table"] = to_json(t);
        j["grid"] = render_grid(t);
        ctx.out << j.dump(2) << '\n';
        return;
    }
    if (t.exactness() == Exactness::UpperBound) ctx.out << "upper bound\n";
    ctx.out << render_grid(t) << '\n' << render_sparse(t);
}

// ---------------------------------------------------------------------------

int cmd_betti(const Context& ctx, const std::string& input, const std::string& mode,
              const std::optional<std::string>& order_arg) {
    const IdealInput in = parse_ideal(load_json_argument(input));
    const MonomialIdeal I = in.ideal();
    std::optional<std::vector<std::size_t>> order = in.order;
    if (order_arg) order = parse_order_arg(*order_arg);

    BettiTable t(mode == "bound" ? Exactness::UpperBound : Exactness::Exact);
    if (!I.is_zero()) {
        if (mode == "oracle") {
            t = taylor_betti(I, ctx.field(), ctx.taylor());
        } else {
            const QuotientCertificate c = certificate_for(in, I, order);
            t = mode == "bound" ? betti_upper_bound(c) : betti_exact(c);
        }
    }
    print_table(ctx, t);
    return 0;
}

// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    std::string status;  // agree, disagree, skipped, holds, fails
    std::string detail;
};

class FamilyReport {
public:
    void add(std::string name, std::string status, std::string detail = {}) {
        if (status == "disagree") ok_ = false;
        checks_.push_back({std::move(name), std::move(status), std::move(detail)});
    }
    void compare(const std::string& name, const BettiTable& a, const BettiTable& b) {
        add(name, a.same_entries(b) ? "agree" : "disagree",
            a.same_entries(b) ? "" : "left:\n" + render_sparse(a) + "right:\n" + render_sparse(b));
    }
    bool ok() const { return ok_; }
    const std::vector<Check>& checks() const { return checks_; }

private:
    std::vector<Check> checks_;
    bool ok_ = true;
};

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json invariants_json(const FamilyInvariants& inv) {
    Json j;
    j["pdim"] = inv.pdim;
    j["reg"] = inv.reg;
    j["h_poly_degree"] = inv.h_poly_degree;
    if (inv.extremal)
        j["extremal"] = {{"i", inv.extremal->first.first}, {"j", inv.extremal->first.second}, {"value", inv.extremal->second}};
    j["cohen_macaulay"] = inv.cohen_macaulay;
    j["gorenstein"] = inv.gorenstein;
    j["complete_intersection"] = inv.complete_intersection;
    return j;
}

void verify_family(const Context& ctx, const FamilySpec& spec, const FamilyInitialIdeal& fi,
                   const std::optional<BettiTable>& formula, const FamilyInvariants& inv, FamilyReport& rep) {
    std::optional<QuotientCertificate> cert;
    try {
        cert = build_certificate(fi.ideal, fi.canonical_order);
        rep.add("regular quotients in canonical order", "agree");
    } catch (const MathError& e) {
        rep.add("regular quotients in canonical order", "disagree", e.what());
    }

    if (cert) {
        std::vector<int> r;
        for (const auto& s : cert->steps) r.push_back(static_cast<int>(s.length()));
        const auto expected = r_sequence_B(spec.h);
        if (spec.kind == FamilyKind::B) {
            rep.add("quotient lengths vs " + join(expected), r == expected ? "agree" : "disagree", join(r));
        } else {
            const auto bst = r_sequence_Bst(spec.h);
            std::map<int, int> tail;
            for (std::size_t k = bst.prefix.size(); k < r.size(); ++k) ++tail[r[k]];
            const bool prefix_ok = r.size() >= bst.prefix.size() &&
                                   std::equal(bst.prefix.begin(), bst.prefix.end(), r.begin());
            rep.add("quotient lengths (prefix and tail counts)", prefix_ok && tail == bst.tail_counts ? "agree" : "disagree",
                    join(r));
        }
    }

    std::optional<BettiTable> from_cert;
    if (cert) {
        try {
            from_cert = betti_exact(*cert);
        } catch (const MathError& e) {
            rep.add("certificate Betti table", "skipped", e.what());
        }
    }
    if (formula && from_cert) rep.compare("closed form vs certificate", *formula, *from_cert);

    std::optional<BettiTable> oracle;
    if (fi.ideal.size() <= ctx.opts.max_generators) {
        oracle = taylor_betti(fi.ideal, ctx.field(), ctx.taylor());
        if (formula) rep.compare("closed form vs Taylor oracle", *formula, *oracle);
        else if (from_cert) rep.compare("certificate vs Taylor oracle", *from_cert, *oracle);
        const bool pdim_ok = oracle->projective_dimension() == inv.pdim;
        const bool reg_ok = oracle->regularity() == inv.reg;
        const auto ext = oracle->extremal_entries();
        const bool ext_ok = inv.extremal && ext.size() == 1 && ext.begin()->first == inv.extremal->first &&
                            ext.begin()->second == inv.extremal->second;
        std::ostringstream d;
        d << "oracle pdim " << oracle->projective_dimension().value_or(-1) << ", reg " << oracle->regularity().value_or(-1);
        rep.add("invariants vs Taylor oracle", pdim_ok && reg_ok && ext_ok ? "agree" : "disagree", d.str());
    } else {
        rep.add("Taylor oracle", "skipped", "more generators than --max-generators");
    }

    const std::optional<BettiTable>& reference = formula ? formula : (oracle ? oracle : from_cert);
    if (reference && fi.graph.edge_count() <= 10) {
        const int j_max = ctx.opts.degree_bound.value_or(reference->max_degree().value_or(0) + 1);
        try {
            BettiTable toric = toric_betti(fi.graph, j_max, ctx.field());
            BettiTable truncated(Exactness::Exact);
            for (const auto& [key, v] : reference->entries())
                if (key.second <= j_max) truncated.set(key.first, key.second, v);
            rep.compare("toric oracle (j <= " + std::to_string(j_max) + ")", truncated, toric);
        } catch (const CapExceeded& e) {
            rep.add("toric oracle", "skipped", e.what());
        }
    } else {
        rep.add("toric oracle", "skipped", "graph too large");
    }

    if (cert) {
        const int codim = static_cast<int>(fi.graph.edge_count() - fi.graph.edge_ring_dimension());
        const Polynomial h = h_polynomial(hilbert_numerator(*cert), codim);
        rep.add("h-polynomial degree", h.degree() == inv.h_poly_degree ? "agree" : "disagree", to_string(h));
        if (fi.graph.edge_count() <= 16) {
            const int d = std::min(ctx.opts.degree_bound.value_or(4), 6);
            const auto direct = edge_ring_hilbert(fi.graph, d);
            const auto series = series_coefficients(h, static_cast<std::int64_t>(fi.graph.edge_ring_dimension()), d);
            rep.add("edge ring Hilbert function (d <= " + std::to_string(d) + ")", direct == series ? "agree" : "disagree");
        }
    }

    if (spec.kind == FamilyKind::Bst) {
        const BridgeReport b = check_bridge_B_Bst(spec);
        rep.add("bridge hypothesis 1 (uniform colon degree l)", b.certificate_uniform ? "holds" : "fails");
        rep.add("bridge hypothesis 2 (degree blocks, induced B)", b.degree_blocks ? "holds" : "fails");
        rep.add("bridge hypothesis 3 (d_k - d_l != l, k < l)", b.distance_literal ? "holds" : "fails");
        rep.add("bridge hypothesis 3 reversed (d_l - d_k != l)", b.distance_reverse ? "holds" : "fails");
    }
}

int cmd_family(const Context& ctx, const std::string& input, bool verify) {
    const FamilySpec spec = parse_family(load_json_argument(input));
    const auto start = std::chrono::steady_clock::now();
    const FamilyInitialIdeal fi = family_initial_ideal(spec);
    std::optional<BettiTable> formula;
    std::string formula_note;
    try {
        formula = betti_family(spec);
    } catch (const UnsupportedShape& e) {
        formula_note = e.what();
    }
    const FamilyInvariants inv = invariants_family(spec);
    FamilyReport rep;
    if (verify) verify_family(ctx, spec, fi, formula, inv, rep);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (ctx.json()) {
        Json j;
        j["family"] = spec.describe();
        j["spec"] = to_json(spec);
        j["vertices"] = fi.graph.vertex_count();
        j["edges"] = fi.graph.edge_count();
        j["initial_generators"] = fi.ideal.size();
        j["closed_form"] = formula ? to_json(*formula) : Json(nullptr);
        j["invariants"] = invariants_json(inv);
        if (verify) {
            Json checks = Json::array();
            for (const auto& c : rep.checks()) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
            j["checks"] = checks;
            j["verdict"] = rep.ok() ? "Agree" : "Disagree";
        }
        j["seconds"] = seconds;
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "family " << spec.describe() << ": " << fi.graph.vertex_count() << " vertices, "
                << fi.graph.edge_count() << " edges, " << fi.ideal.size() << " initial generators\n";
        if (formula)
            ctx.out << "closed form:\n" << render_grid(*formula) << '\n';
        else
            ctx.out << "closed form: unavailable (" << formula_note << ")\n";
        ctx.out << "pdim " << inv.pdim << ", reg " << inv.reg << ", deg h " << inv.h_poly_degree;
        if (inv.extremal)
            ctx.out << ", extremal beta[" << inv.extremal->first.first << ',' << inv.extremal->first.second
                    << "] = " << inv.extremal->second;
        ctx.out << "\ncohen-macaulay " << yes_no(inv.cohen_macaulay) << ", gorenstein " << yes_no(inv.gorenstein)
                << ", complete intersection " << yes_no(inv.complete_intersection) << '\n';
        if (verify) {
            for (const auto& c : rep.checks()) {
                ctx.out << "  " << c.name << ": " << c.status;
                if (!c.detail.empty() && c.status != "disagree") ctx.out << " [" << c.detail << ']';
                ctx.out << '\n';
                if (c.status == "disagree" && !c.detail.empty()) ctx.out << c.detail;
            }
            ctx.out << "verdict: " << (rep.ok() ? "Agree" : "Disagree") << " (" << seconds << " s)\n";
        }
    }
    return rep.ok() ? 0 : 3;
}

// ---------------------------------------------------------------------------

int cmd_walks(const Context& ctx, const std::string& input) {
    const Json j = load_json_argument(input);
    SimpleGraph G;
    std::vector<ClosedWalk> walks;
    std::optional<MonomialOrder> order;
    std::optional<FamilyInitialIdeal> fi;
    if (j.is_object() && j.contains("kind")) {
        const FamilySpec spec = parse_family(j);
        G = build_family(spec);
        walks = spec.kind == FamilyKind::B ? primitive_walks_B(spec) : primitive_walks_Bst(spec).all();
        order = family_order(spec);
        fi = family_initial_ideal(spec);
    } else {
        G = parse_graph(j);
        walks = even_cycles(G);
        order = MonomialOrder::grevlex(G.edge_count());
    }
    const VariableTable vars = G.edge_variables();
    std::vector<WalkBinomial> bins;
    for (const auto& w : walks) bins.push_back(walk_binomial(G, w));
    const MonomialIdeal in = initial_ideal(bins, *order);
    const std::vector<Monomial> gens = fi ? fi->canonical_generators() : in.generators();

    if (ctx.json()) {
        Json out;
        Json ws = Json::array();
        for (std::size_t k = 0; k < walks.size(); ++k) {
            std::vector<std::string> labels;
            for (auto e : walks[k].edges) labels.push_back(G.edge(e).label);
            const bool plus_leads = order->compare(bins[k].plus, bins[k].minus) > 0;
            ws.push_back({{"edges", labels},
                          {"binomial", to_string(bins[k], vars)},
                          {"leading", to_string(plus_leads ? bins[k].plus : bins[k].minus, vars)}});
        }
        out["walks"] = ws;
        out["order"] = to_json(*order);
        Json g = Json::array();
        for (const auto& m : gens) g.push_back(to_string(m, vars));
        out["initial_ideal"] = g;
        ctx.out << out.dump(2) << '\n';
        return 0;
    }
    ctx.out << walks.size() << " walks\n";
    for (std::size_t k = 0; k < walks.size(); ++k) {
        const bool plus_leads = order->compare(bins[k].plus, bins[k].minus) > 0;
        ctx.out << "W" << k + 1 << ": " << to_string(walks[k], G) << "\n    " << to_string(bins[k], vars)
                << "\n    leading " << to_string(plus_leads ? bins[k].plus : bins[k].minus, vars) << '\n';
    }
    ctx.out << "initial ideal (" << gens.size() << " generators):\n";
    for (std::size_t k = 0; k < gens.size(); ++k) ctx.out << "  m" << k + 1 << " = " << to_string(gens[k], vars) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_hilbert(const Context& ctx, const std::string& input, const std::optional<std::string>& order_arg) {
    const Json j = load_json_argument(input);
    Json report;
    bool ok = true;
    std::ostringstream text;

    if (j.is_object() && j.contains("generators")) {
        const IdealInput in = parse_ideal(j);
        const MonomialIdeal I = in.ideal();
        std::optional<std::vector<std::size_t>> order = in.order;
        if (order_arg) order = parse_order_arg(*order_arg);
        Polynomial numerator;
        int d_max = ctx.opts.degree_bound.value_or(0);
        if (!I.is_zero()) {
            const QuotientCertificate c = certificate_for(in, I, order);
            numerator = hilbert_numerator(c);
            const RegPdimBounds b = reg_pdim_bounds(c);
            if (!ctx.opts.degree_bound) d_max = b.reg_bound + b.pdim_bound + 2;
        }
        const auto n = static_cast<std::int64_t>(in.variables.size());
        const auto series = series_coefficients(numerator, n, d_max);
        const auto direct = I.is_zero() ? std::vector<std::int64_t>(static_cast<std::size_t>(d_max) + 1, 0)
                                        : ideal_hilbert_coeffs(I, d_max, std::max<std::size_t>(ctx.opts.max_generators, 20));
        ok = series == direct;
        report["numerator"] = to_string(numerator);
        report["degree_bound"] = d_max;
        report["coefficients"] = direct;
        text << "HS(I,t) numerator: " << to_string(numerator) << " over (1-t)^" << n << '\n'
             << "coefficients 0.." << d_max << (ok ? " agree" : " DISAGREE") << " with direct count\n";
    } else {
        SimpleGraph G;
        Polynomial numerator;
        if (j.is_object() && j.contains("kind")) {
            const FamilySpec spec = parse_family(j);
            G = build_family(spec);
            numerator = hilbert_numerator(family_certificate(spec));
        } else {
            G = parse_graph(j);
            std::vector<WalkBinomial> bins;
            for (const auto& w : even_cycles(G)) bins.push_back(walk_binomial(G, w));
            const MonomialIdeal in = bins.empty() ? MonomialIdeal::zero(G.edge_count())
                                                  : initial_ideal(bins, MonomialOrder::grevlex(G.edge_count()));
            if (!in.is_zero()) numerator = taylor_betti(in, ctx.field(), ctx.taylor()).euler_polynomial();
        }
        const auto dim = static_cast<int>(G.edge_ring_dimension());
        const Polynomial h = h_polynomial(numerator, static_cast<int>(G.edge_count()) - dim);
        const int d_max = ctx.opts.degree_bound.value_or(h.degree() + 2);
        const auto direct = edge_ring_hilbert(G, d_max);
        ok = direct == series_coefficients(h, dim, d_max);
        report["h_polynomial"] = to_string(h);
        report["h_degree"] = h.degree();
        report["dimension"] = dim;
        report["degree_bound"] = d_max;
        report["coefficients"] = direct;
        text << "h-polynomial: " << to_string(h) << " (degree " << h.degree() << "), dim K[G] = " << dim << '\n'
             << "Hilbert function 0.." << d_max << ':';
        for (auto x : direct) text << ' ' << x;
        text << '\n' << (ok ? "agrees" : "DISAGREES") << " with h(t)/(1-t)^" << dim << '\n';
    }
    report["agree"] = ok;
    if (ctx.json())
        ctx.out << report.dump(2) << '\n';
    else
        ctx.out << text.str();
    return ok ? 0 : 3;
}

// ---------------------------------------------------------------------------

int cmd_selftest(const Context& ctx) {
    const PrimeField F = ctx.field();
    bool all = true;
    auto line = [&](const std::string& name, bool pass) {
        all = all && pass;
        ctx.out << (pass ? "PASS " : "FAIL ") << name << '\n';
    };

    {
        auto m = [](std::initializer_list<std::size_t> ix) { return Monomial::from_indices(9, std::vector<std::size_t>(ix)); };
        const std::vector<Monomial> g{m({0, 1, 2, 3, 4, 5}), m({0, 1, 2, 3, 6, 7, 8}), m({2, 3, 4, 5, 6}), m({4, 5, 6, 7})};
        const MonomialIdeal I = minimalize(g, 9);
        const std::vector<std::size_t> order{0, 2, 3, 1};
        BettiTable expected;
        for (int j : {4, 5, 6, 7}) expected.set(0, j, 1);
        for (int j : {6, 7, 9}) expected.set(1, j, 1);
        const BettiTable exact = betti_exact(build_certificate(I, order));
        line("four-generator example: exact table", exact.same_entries(expected));
        line("four-generator example: Taylor oracle", taylor_betti(I, F).same_entries(expected));
    }
    {
        const FamilySpec k23 = FamilySpec::B({1, 1, 1});
        const BettiTable f = betti_B(k23);
        line("K_{2,3}: closed form vs Taylor oracle", f.same_entries(taylor_betti(family_initial_ideal(k23).ideal, F)));
        line("K_{2,3}: closed form vs toric oracle", f.same_entries(toric_betti(build_family(k23), 4, F)));
        const FamilySpec bst = FamilySpec::Bst(1, 2, 1, 1);
        line("B^{1,1}_{1,2}: closed form vs Taylor oracle",
             betti_Bst(bst).same_entries(taylor_betti(family_initial_ideal(bst).ideal, F)));
        line("4-cycle: dim K[G]_2 = 9", edge_ring_hilbert(build_B({1, 1}), 2).at(2) == 9);
    }
    {
        bool euler = true, dominance = true;
        for (const auto& entry : random_corpus(ctx.opts.seed, 40)) {
            const QuotientCertificate c = build_certificate(entry.gens);
            const MonomialIdeal I = minimalize(entry.gens, c.nvars);
            const BettiTable oracle = taylor_betti(I, F);
            euler = euler && oracle.euler_polynomial() == hilbert_numerator(c);
            try {
                dominance = dominance && betti_upper_bound(c).dominates(oracle);
            } catch (const MixedStepDegrees&) {
            }
        }
        line("random certificates: Euler characteristic", euler);
        line("random certificates: upper bound dominates", dominance);
    }
    return all ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti numbers of monomial ideals with regular quotients and of toric ideals of path families"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--field-char", opts.field_char, "prime characteristic of the coefficient field");
    app.add_option("--degree-bound", opts.degree_bound, "degree bound for series and toric checks");
    app.add_option("--max-generators", opts.max_generators, "Taylor complex generator cap");
    app.add_option("--seed", opts.seed, "seed for randomized checks");
    app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string input, mode = "exact";
    std::optional<std::string> order;
    bool verify = false;

    auto* betti = app.add_subcommand("betti", "Betti table of a monomial ideal");
    betti->add_option("input", input, "ideal JSON file or inline JSON")->required();
    betti->add_option("--mode", mode, "bound, exact or oracle")->check(CLI::IsMember({"bound", "exact", "oracle"}));
    betti->add_option("--order", order, "generator order, e.g. 0,2,3,1");

    auto* family = app.add_subcommand("family", "closed forms for a path family");
    family->add_option("input", input, "family spec JSON file or inline JSON")->required();
    family->add_flag("--verify", verify, "compare against the certificate and oracle paths");

    auto* walks = app.add_subcommand("walks", "primitive walks, binomials and initial ideal");
    walks->add_option("input", input, "graph or family spec JSON")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator and coefficient check");
    hilbert->add_option("input", input, "ideal, graph or family spec JSON")->required();
    hilbert->add_option("--order", order, "generator order for an ideal");

    auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Context ctx{opts, out};
    try {
        if (*betti) return cmd_betti(ctx, input, mode, order);
        if (*family) return cmd_family(ctx, input, verify);
        if (*walks) return cmd_walks(ctx, input);
        if (*hilbert) return cmd_hilbert(ctx, input, order);
        if (*selftest) return cmd_selftest(ctx);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace regquot
