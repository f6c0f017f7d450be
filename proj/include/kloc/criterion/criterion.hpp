#ifndef KLOC_CRITERION_CRITERION_HPP
#define KLOC_CRITERION_CRITERION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kloc/classgrp/class_group.hpp"
#include "kloc/cyclolayer/layer.hpp"

namespace kloc {

struct CriterionConfig {
    /* caps for class groups of layer fields */
    ClassGroupConfig classgroup = layer_defaults();
    /* absolute degree of layer fields that get built at all */
    std::size_t max_layer_degree = 48;
    /* replaces class_group() when set, e.g. by a cache */
    std::function<ClassGroupPtr(FieldPtr const &, ClassGroupConfig const &)> class_groups;

    static ClassGroupConfig layer_defaults()
    {
        ClassGroupConfig c;
        c.max_degree = 24;
        c.max_abs_disc = Integer("1000000000000000000000000000000");
        return c;
    }
};

enum class ObstructionRoute { TrivialLevel, FullCoinvariants, Nakayama };

char const * to_string(ObstructionRoute r);

struct ObstructionReport {
    std::uint64_t p = 0;
    unsigned long i = 0;
    unsigned n = 0;
    FiniteAbelianGroup group;
    std::size_t layer_degree = 1;
    std::size_t s_prime_count = 0;
    /* (Cl^S)_p of the layer */
    FiniteAbelianGroup class_p_part;
    ObstructionRoute route = ObstructionRoute::TrivialLevel;
    /* p = 2: the identification with the obstruction is only known for large n */
    bool large_n_only = false;
};

ObstructionReport obstruction(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned n,
                              CriterionConfig const & cfg = {});

/* non-splitting for every i, when mu_p lies in F and (Cl^S_F)_p != 0 */
struct TriesteWitness {
    FiniteAbelianGroup class_p_part;
};

std::optional<TriesteWitness> trieste_shortcut(FieldPtr const & field, std::uint64_t p, CriterionConfig const & cfg = {});

struct TowerCertificate {
    unsigned n0 = 0;
    /* [F_{i,n0+1} : F_{i,n0}] and the ramification index of the prime above p in it */
    std::size_t step_degree = 0;
    unsigned step_ramification = 0;
    std::size_t layer_degree = 0;
};

std::optional<TowerCertificate> certify_split_tower(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned n0,
                                                    CriterionConfig const & cfg = {});

enum class VerdictKind { DoesNotSplit, SplitsCertified, NoObstructionUpTo };

char const * to_string(VerdictKind k);

struct SplittingVerdict {
    VerdictKind kind = VerdictKind::NoObstructionUpTo;
    /* witness level, certification level, or max_level */
    unsigned level = 0;
    bool via_trieste = false;
    std::optional<TowerCertificate> certificate;
    std::vector<ObstructionReport> reports;
};

SplittingVerdict analyze_splitting(FieldPtr const & field, std::uint64_t p, unsigned long i, unsigned max_level = 2,
                                   CriterionConfig const & cfg = {});

struct JaulentReport {
    bool hypotheses[4] = {false, false, false, false};
    std::string evidence[4];
    /* wild kernel trivial and no splitting, for every i >= 1 */
    bool conclusion = false;
};

JaulentReport jaulent_check(FieldPtr const & field, std::uint64_t p, CriterionConfig const & cfg = {});

} // namespace kloc

#endif
