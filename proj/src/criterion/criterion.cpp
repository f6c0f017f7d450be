#include "kloc/criterion/criterion.hpp"

#include "kloc/error.hpp"
#include "kloc/intlinalg/galois_module.hpp"

namespace kloc {

char const * to_string(ObstructionRoute r)
{
    switch (r) {
    case ObstructionRoute::TrivialLevel: return "trivial_level";
    case ObstructionRoute::FullCoinvariants: return "full_coinvariants";
    case ObstructionRoute::Nakayama: return "nakayama";
    }
    return "?";
}

char const * to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::DoesNotSplit: return "does_not_split";
    case VerdictKind::SplitsCertified: return "splits_certified";
    case VerdictKind::NoObstructionUpTo: return "no_obstruction_up_to";
    }
    return "?";
}

namespace {

ClassGroupPtr class_group_of(FieldPtr const & k, std::uint64_t p, CriterionConfig const & cfg)
{
    ClassGroupConfig c = cfg.classgroup;
    c.focus = Integer(static_cast<unsigned long>(p));
    return cfg.class_groups ? cfg.class_groups(k, c) : class_group(k, c);
}

struct SPart {
    SClassGroup s;
    PrimaryPart sylow;
};

SPart s_part(ClassGroupPtr const & cl, std::uint64_t p)
{
    Integer pp(static_cast<unsigned long>(p));
    auto s = s_quotient(cl, pp);
    auto sylow = p_primary_part(s.structure(), pp);
    return {std::move(s), std::move(sylow)};
}

/* action of sigma on the Sylow part of Cl^S, columns are images of Sylow generators */
IntMatrix sylow_action(SPart const & sp, IntMatrix const & base_action)
{
    auto const & inc = sp.sylow.inclusion;
    auto const & from = sp.s.quotient.from_group;
    std::size_t k = sp.sylow.group.rank(), nb = base_action.rows();
    IntMatrix out(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<Integer> base(nb);
        for (std::size_t j = 0; j < inc.cols(); ++j)
            for (std::size_t t = 0; t < nb; ++t) base[t] += inc(c, j) * from(j, t);
        std::vector<Integer> img(nb);
        for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t t = 0; t < nb; ++t) img[r] += base_action(r, t) * base[t];
        auto sc = sp.s.map(img);
        auto y = sp.sylow.group.reduce(std::span<Integer const>(sc) * sp.sylow.projection);
        for (std::size_t r = 0; r < k; ++r) out(r, c) = y[r];
    }
    return out;
}

bool mu_p_in(FieldPtr const & field, std::uint64_t p) { return char_image(field, p, 1).size() == 1; }

/* [F_{i,n} : F] from the character groups */
std::size_t layer_degree(FieldPtr const & field, std::uint64_t p, unsigned n, unsigned long i)
{
    if (n == 0) return 1;
    auto img = char_image(field, p, n);
    std::size_t kernel = 0;
    for (auto x : img.elements)
        if (powmod(x, i, img.modulus) == 1 % img.modulus) ++kernel;
    return img.size() / kernel;
}

bool too_big(FieldPtr const & field, std::uint64_t p, unsigned n, unsigned long i, CriterionConfig const & cfg)
{
    return field->degree() * layer_degree(field, p, n, i) > cfg.max_layer_degree;
}

Layer capped_layer(FieldPtr const & field, std::uint64_t p, unsigned n, unsigned long i, CriterionConfig const & cfg,
                   LayerOptions const & opts = {})
{
    if (too_big(field, p, n, i, cfg)) throw Error(ErrorKind::EffortExceeded, "layer field above the degree cap");
    return build_layer(field, p, n, i, opts);
}

bool totally_split_over(Layer const & layer)
{
    for (auto const & b : layer_s_primes(layer).over_base)
        if (!b.totally_split(layer.degree())) return false;
    return true;
}

} // namespace

ObstructionReport obstruction(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned n, CriterionConfig const & cfg)
{
    if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be prime");
    if (i == 0) throw Error(ErrorKind::InvalidInput, "twist must be positive");
    ObstructionReport r;
    r.p = p;
    r.i = i;
    r.n = n;
    r.large_n_only = p == 2;
    if (p == 2 && !is_nonexceptional(field)) throw Error(ErrorKind::OutOfTheoremScope, "exceptional field at p = 2");
    if (n == 0) return r;

    auto layer = capped_layer(field, p, n, i, cfg);
    r.layer_degree = layer.degree();
    auto cl = class_group_of(layer.field, p, cfg);
    auto sp = s_part(cl, p);
    r.s_prime_count = sp.s.s_primes.size();
    r.class_p_part = sp.sylow.group;
    if (r.class_p_part.is_trivial()) {
        r.route = mu_p_in(field, p) ? ObstructionRoute::Nakayama : ObstructionRoute::FullCoinvariants;
        return r;
    }
    r.route = ObstructionRoute::FullCoinvariants;
    GaloisModule m;
    m.group = r.class_p_part;
    for (std::size_t g = 1; g < layer.gamma.size(); ++g) {
        auto const & a = layer.gamma[g];
        std::string label = "h" + std::to_string(a.h);
        m.actors.push_back({label, sylow_action(sp, galois_action_on_classes(*cl, a.sigma))});
        m.character[label] = Integer(static_cast<unsigned long>(a.kappa));
    }
    r.group = twisted_coinvariants(m, Integer(static_cast<unsigned long>(p)), n);
    return r;
}

std::optional<TriesteWitness> trieste_shortcut(FieldPtr const & field, std::uint64_t p, CriterionConfig const & cfg)
{
    if (p == 2 && !is_nonexceptional(field)) return std::nullopt;
    if (!mu_p_in(field, p)) return std::nullopt;
    auto sp = s_part(class_group_of(field, p, cfg), p);
    if (sp.sylow.group.is_trivial()) return std::nullopt;
    return TriesteWitness{sp.sylow.group};
}

std::optional<TowerCertificate> certify_split_tower(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned n0,
                                                    CriterionConfig const & cfg)
{
    if (n0 == 0) return std::nullopt;
    if (p == 2 && !is_nonexceptional(field)) return std::nullopt;
    auto low = build_layer(field, p, n0, i);
    auto low_primes = factor_rational_prime(low.field, p);
    if (low_primes.size() != 1) return std::nullopt;
    auto sp = s_part(class_group_of(low.field, p, cfg), p);
    if (!sp.sylow.group.is_trivial()) return std::nullopt;

    TowerCertificate c;
    c.n0 = n0;
    c.layer_degree = low.degree();
    c.step_degree = layer_degree(field, p, n0 + 1, i) / low.degree();
    if (c.step_degree != p) return std::nullopt;
    if (field->degree() == 1) {
        /* p is totally ramified in Q(mu_{p^infinity}) */
        c.step_ramification = static_cast<unsigned>(p);
        return c;
    }
    if (too_big(field, p, n0 + 1, i, cfg)) return std::nullopt;
    LayerOptions lo;
    lo.maximal = false;
    auto high = build_layer(field, p, n0 + 1, i, lo);
    auto high_primes = factor_rational_prime(high.field, p);
    if (high_primes.size() != 1) return std::nullopt;
    if (high_primes[0].e != low_primes[0].e * p) return std::nullopt;
    c.step_ramification = static_cast<unsigned>(p);
    return c;
}

SplittingVerdict analyze_splitting(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned max_level,
                                   CriterionConfig const & cfg)
{
    if (max_level == 0) throw Error(ErrorKind::InvalidInput, "max_level must be positive");
    if (p == 2 && !is_nonexceptional(field)) throw Error(ErrorKind::OutOfTheoremScope, "exceptional field at p = 2");
    SplittingVerdict v;
    v.via_trieste = trieste_shortcut(field, p, cfg).has_value();
    for (unsigned n = 1; n <= max_level; ++n) {
        v.reports.push_back(obstruction(field, p, i, n, cfg));
        if (!v.reports.back().group.is_trivial()) {
            v.kind = VerdictKind::DoesNotSplit;
            v.level = n;
            return v;
        }
        if (v.via_trieste) throw Error(ErrorKind::InvalidInput, "trivial obstruction despite the shortcut");
        if (auto c = certify_split_tower(field, p, i, n, cfg)) {
            v.kind = VerdictKind::SplitsCertified;
            v.level = n;
            v.certificate = c;
            return v;
        }
    }
    v.kind = VerdictKind::NoObstructionUpTo;
    v.level = max_level;
    return v;
}

JaulentReport jaulent_check(FieldPtr const & field, std::uint64_t p, CriterionConfig const & cfg)
{
    if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidInput, "jaulent_check needs an odd prime");
    JaulentReport r;
    Integer pp(static_cast<unsigned long>(p));
    auto img1 = char_image(field, p, 1);
    r.hypotheses[0] = img1.size() == 1;
    r.evidence[0] = "character image mod p has " + std::to_string(img1.size()) + " elements";

    auto sp = s_part(class_group_of(field, p, cfg), p);
    r.hypotheses[1] = sp.sylow.group.rank() == 1 && sp.sylow.group.invariants()[0] == pp;
    r.evidence[1] = "p-part of the S-class group: " + sp.sylow.group.to_string();

    auto above = factor_rational_prime(field, pp);
    r.hypotheses[2] = above.size() == 1;
    r.evidence[2] = std::to_string(above.size()) + " prime(s) above p";

    LayerOptions lo;
    lo.maximal = false;
    auto img2 = char_image(field, p, 2);
    if (img2.size() == 1) {
        r.evidence[3] = "mu_{p^2} already lies in the field";
    } else if (!r.hypotheses[0] && !totally_split_over(capped_layer(field, p, 1, 1, cfg, lo))) {
        /* F(mu_p) sits inside F(mu_{p^2}) */
        r.evidence[3] = "primes over p are not totally split in F(mu_p)";
    } else {
        auto layer = capped_layer(field, p, 2, 1, cfg, lo);
        bool split = totally_split_over(layer);
        r.hypotheses[3] = split;
        r.evidence[3] = "degree " + std::to_string(layer.degree()) + " extension, primes over p " +
                        (split ? "totally split" : "not totally split");
    }
    r.conclusion = r.hypotheses[0] && r.hypotheses[1] && r.hypotheses[2] && r.hypotheses[3];
    return r;
}

} // namespace kloc
