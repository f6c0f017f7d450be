#include "kloc/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "kloc/cli/cache.hpp"
#include "kloc/cli/report.hpp"
#include "kloc/criterion/criterion.hpp"
#include "kloc/error.hpp"
#include "kloc/rationals/bernoulli.hpp"

namespace kloc {

namespace {

using nlohmann::json;

int exit_code(ErrorKind k) { return k == ErrorKind::EffortExceeded || k == ErrorKind::PrecisionExhausted ? 2 : 1; }

void emit_error(std::ostream & out, Error const & e)
{
    out << json{{"error", {{"kind", to_string(e.kind()) }, {"message", e.what()}}}}.dump(2) << "\n";
}

struct Common {
    std::string cache_dir;
    std::uint64_t seed = 1;
    std::size_t max_degree = CriterionConfig::layer_defaults().max_degree;
    std::string max_disc = CriterionConfig::layer_defaults().max_abs_disc.get_str();
    unsigned long max_candidates = CriterionConfig::layer_defaults().max_candidates;
};

struct Context {
    CriterionConfig cfg;
    std::shared_ptr<ClassGroupCache> cache;
};

Context make_context(Common const & c)
{
    Context ctx;
    ctx.cfg.classgroup.seed = c.seed;
    ctx.cfg.classgroup.max_degree = c.max_degree;
    try {
        ctx.cfg.classgroup.max_abs_disc = Integer(c.max_disc);
    } catch (std::exception const &) {
        throw Error(ErrorKind::InvalidInput, "--max-disc is not an integer");
    }
    ctx.cfg.classgroup.max_candidates = c.max_candidates;
    std::string dir = c.cache_dir;
    if (dir.empty())
        if (char const * env = std::getenv("KLOC_CACHE")) dir = env;
    ctx.cache = std::make_shared<ClassGroupCache>(dir);
    auto cache = ctx.cache;
    ctx.cfg.class_groups = [cache](FieldPtr const & k, ClassGroupConfig const & cc) { return cache->get(k, cc); };
    return ctx;
}

std::vector<std::int64_t> small_invariants(FiniteAbelianGroup const & g)
{
    std::vector<std::int64_t> v;
    for (auto const & d : g.invariants()) v.push_back(to_long(d));
    return v;
}

FieldPtr parse_field(std::string const & text)
{
    auto f = parse_polynomial(text);
    if (f.degree() < 2) throw Error(ErrorKind::InvalidInput, "the field polynomial needs degree at least 2 (use analyze-q for Q)");
    return NumberField::create(f);
}

AnalysisReport analyze(std::string const & field_text, std::uint64_t p, std::uint64_t i, unsigned max_level, Context const & ctx)
{
    auto t0 = std::chrono::steady_clock::now();
    if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be prime");
    if (i == 0) throw Error(ErrorKind::InvalidInput, "i must be at least 1");
    if (max_level == 0) throw Error(ErrorKind::InvalidInput, "max-level must be at least 1");
    auto k = parse_field(field_text);
    AnalysisReport r;
    r.field = field_text;
    r.p = p;
    r.i = i;
    auto v = analyze_splitting(k, p, i, max_level, ctx.cfg);
    r.verdict_kind = to_string(v.kind);
    r.verdict_level = v.level;
    for (auto const & o : v.reports) r.obstructions.push_back({o.n, small_invariants(o.group), to_string(o.route)});
    if (p == 2) {
        r.caveats.push_back("p = 2: the obstruction equals the coinvariant group only for large n");
        r.caveats.push_back("jaulent check not applicable at p = 2");
    } else {
        auto j = jaulent_check(k, p, ctx.cfg);
        for (std::size_t h = 0; h < 4; ++h) r.hypotheses[h] = j.hypotheses[h];
        r.conclusion = j.conclusion;
        if (j.conclusion) r.caveats.push_back("wild kernel trivial for every i >= 1");
    }
    if (v.via_trieste) r.caveats.push_back("mu_p in F with nontrivial (Cl^S)_p: no splitting for any i");
    if (v.kind == VerdictKind::NoObstructionUpTo)
        r.caveats.push_back("levels above " + std::to_string(max_level) + " not checked");
    r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

json analyze_q(std::uint64_t p)
{
    if (p == 2) throw Error(ErrorKind::OutOfTheoremScope, "Q is exceptional at p = 2");
    if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be an odd prime");
    json rows = json::array();
    for (std::uint64_t i = 1; i <= p - 1; ++i) {
        Integer ii(static_cast<unsigned long>(i));
        rows.push_back({{"i", i}, {"splits", splits_q(p, ii)}, {"irregular_index", responsible_index(p, ii)}});
    }
    return json{{"field", "x"}, {"p", p}, {"rows", rows}};
}

struct Checker {
    std::ostream & out;
    bool all = true;
    void operator()(bool ok, std::string const & what)
    {
        out << (ok ? "PASS: " : "FAIL: ") << what << "\n";
        all = all && ok;
    }
};

bool reproduce_example(std::ostream & out, Context const & ctx)
{
    Checker check{out};
    auto k = parse_field("x^6-793*x^3+226981");
    check(61 % 3 == 1, "61 = 1 mod 3");
    check(residue_extension_degree(Integer(3), 61, 1, 1) == 10, "3 has order 10 mod 61");
    auto above = factor_rational_prime(k, 3);
    check(above.size() == 1 && above[0].e == 6, "unique ramified prime over 3 (e = 6)");
    ClassGroupConfig cc = ctx.cfg.classgroup;
    cc.focus = 3;
    auto cl = ctx.cfg.class_groups(k, cc);
    auto s3 = p_primary_part(s_quotient(cl, 3).structure(), 3).group;
    check(s3 == FiniteAbelianGroup({Integer(3)}), "(Cl^S)_3 = Z/3");
    for (unsigned long i : {1ul, 2ul}) {
        auto v = analyze_splitting(k, 3, i, 2, ctx.cfg);
        check(v.kind == VerdictKind::DoesNotSplit && v.level == 1,
              "verdict DoesNotSplit at level 1 for i = " + std::to_string(i));
    }
    auto j = jaulent_check(k, 3, ctx.cfg);
    check(j.hypotheses[0] && j.hypotheses[1] && j.hypotheses[2] && j.hypotheses[3], "jaulent hypotheses");
    check(j.conclusion, "jaulent conclusion");
    return check.all;
}

bool reproduce_q(std::ostream & out, std::uint64_t p, Context const & ctx)
{
    /* pinned non-split classes of i mod p - 1 */
    static std::map<std::uint64_t, std::vector<std::uint64_t>> const expected{
        {3, {}}, {5, {}}, {7, {}}, {11, {}}, {13, {}}, {37, {31}}, {691, {11}}};
    auto it = expected.find(p);
    if (it == expected.end()) throw Error(ErrorKind::InvalidInput, "no pinned values for p = " + std::to_string(p));
    Checker check{out};
    std::vector<std::uint64_t> non_split;
    for (std::uint64_t i = 1; i <= p - 1; ++i)
        if (!splits_q(p, Integer(static_cast<unsigned long>(i)))) non_split.push_back(i);
    std::string seen;
    for (auto i : non_split) seen += (seen.empty() ? "" : ",") + std::to_string(i);
    check(non_split == it->second,
          (it->second.empty() ? "splits for all i" : "non-split classes match") + std::string(" (observed {") + seen + "})");
    if (p <= 7) {
        auto q = NumberField::create(ZPoly({0, 1}));
        bool agree = true;
        for (std::uint64_t i = 1; i <= p - 1; ++i) {
            auto v = analyze_splitting(q, p, i, 2, ctx.cfg);
            bool split = v.kind == VerdictKind::SplitsCertified;
            agree = agree && v.kind != VerdictKind::NoObstructionUpTo &&
                    split == splits_q(p, Integer(static_cast<unsigned long>(i)));
        }
        check(agree, "class group route agrees");
    }
    return check.all;
}

void add_common(CLI::App * cmd, Common & c)
{
    cmd->add_option("--cache-dir", c.cache_dir, "class group cache directory (default $KLOC_CACHE)");
    cmd->add_option("--seed", c.seed, "seed for relation searches");
    cmd->add_option("--max-degree", c.max_degree, "largest layer degree for class groups");
    cmd->add_option("--max-disc", c.max_disc, "largest |discriminant| for class groups, 0 for none");
    cmd->add_option("--max-candidates", c.max_candidates, "relation search budget");
}

} // namespace

int run_cli(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Splitting of localization sequences in K-theory of number fields", "kloc"};
    app.require_subcommand(1);
    Common common;

    std::string field_text;
    std::uint64_t p = 0, i = 1;
    unsigned max_level = 2;
    auto * an = app.add_subcommand("analyze", "analyze one field, prime and twist");
    an->add_option("--field", field_text, "defining polynomial, e.g. \"x^2+1\"")->required();
    an->add_option("--p", p, "prime")->required();
    an->add_option("--i", i, "twist index");
    an->add_option("--max-level", max_level, "highest level n checked");
    add_common(an, common);

    std::uint64_t qp = 0;
    auto * aq = app.add_subcommand("analyze-q", "splitting table for Q");
    aq->add_option("--p", qp, "odd prime")->required();

    std::string name;
    std::uint64_t rp = 3;
    auto * rep = app.add_subcommand("reproduce", "rerun a pinned example");
    rep->add_option("name", name, "example-4-3 or example-Q")->required();
    rep->add_option("--p", rp, "prime for example-Q");
    add_common(rep, common);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*an) {
            auto ctx = make_context(common);
            out << to_json(analyze(field_text, p, i, max_level, ctx)).dump(2) << "\n";
            return 0;
        }
        if (*aq) {
            out << analyze_q(qp).dump(2) << "\n";
            return 0;
        }
        auto ctx = make_context(common);
        bool ok;
        if (name == "example-4-3")
            ok = reproduce_example(out, ctx);
        else if (name == "example-Q")
            ok = reproduce_q(out, rp, ctx);
        else
            throw Error(ErrorKind::UnknownExample, "unknown example '" + name + "'");
        return ok ? 0 : 1;
    } catch (Error const & e) {
        emit_error(out, e);
        return exit_code(e.kind());
    } catch (std::exception const & e) {
        out << json{{"error", {{"kind", "InvalidInput"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
}

} // namespace kloc
