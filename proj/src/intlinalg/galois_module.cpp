#include "kloc/intlinalg/galois_module.hpp"

#include <algorithm>

#include "kloc/error.hpp"

namespace kloc {

std::vector<Integer> GaloisModule::apply(std::size_t k, std::vector<Integer> const & x) const
{
    IntMatrix const & a = actors.at(k).action;
    std::vector<Integer> y(group.rank());
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a(i, j) * x[j];
    return group.reduce(std::move(y));
}

FiniteAbelianGroup twisted_coinvariants(GaloisModule const & m, Integer const & p, unsigned n)
{
    std::size_t const k = m.group.rank();
    Integer const pn = ipow(p, n);
    for (auto const & d : m.group.invariants()) {
        Integer q = d;
        while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) q /= p;
        if (q != 1) throw Error(ErrorKind::NotPGroup, "module is not a " + p.get_str() + "-group");
    }
    std::vector<Integer> kappa;
    for (auto const & act : m.actors) {
        auto it = m.character.find(act.label);
        if (it == m.character.end()) throw Error(ErrorKind::MissingCharacter, "no character value for actor " + act.label);
        if (act.action.rows() != k || act.action.cols() != k) throw Error(ErrorKind::InvalidInput, "action matrix has wrong shape");
        if (n > 0 && gcd(it->second, p) != 1) throw Error(ErrorKind::InvalidInput, "character value is not a unit");
        kappa.push_back(it->second);
    }
    if (k == 0 || n == 0) return {};

    IntMatrix rel(0, k);
    std::vector<Integer> r(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::fill(r.begin(), r.end(), Integer(0));
        r[j] = std::min(m.group.invariants()[j], pn);
        rel.append_row(r);
    }
    for (std::size_t a = 0; a < m.actors.size(); ++a) {
        IntMatrix const & act = m.actors[a].action;
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < k; ++i) r[i] = kappa[a] * act(i, j);
            r[j] -= 1;
            rel.append_row(r);
        }
    }
    return group_from_relations(k, rel);
}

} // namespace kloc
