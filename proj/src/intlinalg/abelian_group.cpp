#include "kloc/intlinalg/abelian_group.hpp"

#include <sstream>

#include "kloc/error.hpp"
#include "kloc/intlinalg/modular.hpp"
#include "kloc/intlinalg/normal_form.hpp"

namespace kloc {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariants) : invariants_(std::move(invariants))
{
    for (std::size_t j = 0; j < invariants_.size(); ++j) {
        if (invariants_[j] < 2) throw Error(ErrorKind::InvalidInput, "invariant factor below 2");
        if (j > 0 && !mpz_divisible_p(invariants_[j].get_mpz_t(), invariants_[j - 1].get_mpz_t()))
            throw Error(ErrorKind::InvalidInput, "invariants do not form a divisibility chain");
    }
}

Integer FiniteAbelianGroup::order() const
{
    Integer o = 1;
    for (auto const & d : invariants_) o *= d;
    return o;
}

std::vector<Integer> FiniteAbelianGroup::reduce(std::vector<Integer> x) const
{
    if (x.size() != invariants_.size()) throw Error(ErrorKind::InvalidInput, "element has wrong length");
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = floor_mod(x[j], invariants_[j]);
    return x;
}

bool FiniteAbelianGroup::is_zero(std::vector<Integer> const & x) const
{
    auto r = reduce(x);
    for (auto const & v : r)
        if (v != 0) return false;
    return true;
}

std::size_t FiniteAbelianGroup::p_rank(Integer const & ell) const
{
    std::size_t r = 0;
    for (auto const & d : invariants_)
        if (mpz_divisible_p(d.get_mpz_t(), ell.get_mpz_t())) ++r;
    return r;
}

std::string FiniteAbelianGroup::to_string() const
{
    if (invariants_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t j = 0; j < invariants_.size(); ++j) {
        if (j) os << " + ";
        os << "Z/" << invariants_[j];
    }
    return os.str();
}

std::vector<Integer> Presentation::coordinates(std::vector<Integer> const & generator_vector) const
{
    if (generator_vector.size() != to_group.rows()) throw Error(ErrorKind::InvalidInput, "vector length mismatch");
    return group.reduce(std::span<Integer const>(generator_vector) * to_group);
}

namespace {

/* A positive multiple of the index of the row lattice, or 0 if the rank is deficient. */
Integer lattice_determinant_multiple(IntMatrix const & rel)
{
    std::size_t const k = rel.cols();
    if (rel.rows() < k) return 0;
    /* pick independent rows with a large prime, then take the exact minor */
    for (std::uint64_t p : {4611686018427388039ULL, 4611686018427387847ULL, 4611686018427387817ULL}) {
        FpMatrix fp(p, rel);
        auto idx = fp.independent_rows();
        if (idx.size() < k) continue;
        IntMatrix sq(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t j = 0; j < k; ++j) sq(a, j) = rel(idx[a], j);
        Integer d = abs(sq.determinant());
        if (d != 0) return d;
    }
    return rel.rank() == k ? Integer(-1) : Integer(0);
}

} // namespace

Presentation present(std::size_t generator_count, IntMatrix const & relations)
{
    if (relations.cols() != generator_count && !(relations.rows() == 0))
        throw Error(ErrorKind::InvalidInput, "relation matrix has wrong column count");
    if (generator_count == 0) return {FiniteAbelianGroup{}, IntMatrix(0, 0), IntMatrix(0, 0)};
    Integer det = lattice_determinant_multiple(relations);
    if (det == 0) throw Error(ErrorKind::InfiniteCokernel, "relations do not have full column rank");
    IntMatrix h = det > 0 ? hnf_modulo(relations, det) : hnf(relations);
    SmithForm s = snf(h);
    std::vector<Integer> inv;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < generator_count; ++j) {
        if (s.d(j, j) == 0) throw Error(ErrorKind::InfiniteCokernel, "zero elementary divisor");
        if (s.d(j, j) != 1) {
            inv.push_back(s.d(j, j));
            keep.push_back(j);
        }
    }
    Presentation out{FiniteAbelianGroup(inv), IntMatrix(generator_count, keep.size()), IntMatrix(keep.size(), generator_count)};
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t i = 0; i < generator_count; ++i) {
            out.to_group(i, a) = floor_mod(s.v(i, keep[a]), inv[a]);
            out.from_group(a, i) = s.v_inverse(keep[a], i);
        }
    }
    return out;
}

FiniteAbelianGroup group_from_relations(std::size_t generator_count, IntMatrix const & relations)
{
    return present(generator_count, relations).group;
}

PrimaryPart p_primary_part(FiniteAbelianGroup const & g, Integer const & p)
{
    std::vector<Integer> inv;
    std::vector<std::size_t> idx;
    std::vector<Integer> cof;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        Integer const & d = g.invariants()[j];
        unsigned a = valuation(d, p);
        if (a == 0) continue;
        inv.push_back(ipow(p, a));
        idx.push_back(j);
        cof.push_back(d / inv.back());
    }
    PrimaryPart out{FiniteAbelianGroup(inv), IntMatrix(g.rank(), inv.size()), IntMatrix(inv.size(), g.rank())};
    for (std::size_t a = 0; a < inv.size(); ++a) {
        out.projection(idx[a], a) = 1;
        /* the element of Z/d_j that is 1 mod p^a and 0 mod the cofactor */
        Integer s, t;
        xgcd(cof[a], inv[a], s, t);
        out.inclusion(a, idx[a]) = floor_mod(Integer(cof[a] * s), g.invariants()[idx[a]]);
    }
    return out;
}

} // namespace kloc
