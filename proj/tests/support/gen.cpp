#include "support/gen.hpp"

namespace skewtaylor::testgen {

QMatrixPtr random_qmatrix(std::mt19937_64& rng, std::size_t n, std::uint64_t p)
{
    FieldDesc field = FieldDesc::prime_field(p);
    std::vector<Scalar> entries(n * n, Scalar::one(field));
    std::uniform_int_distribution<std::uint64_t> unit(1, p - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar q = Scalar::from_int((long long)unit(rng), field);
            entries[i * n + j] = q;
            entries[j * n + i] = q.inverse();
        }
    }
    return std::make_shared<QMatrix>(n, field, std::move(entries));
}

QMatrixPtr commutative_ring(std::size_t n, const FieldDesc& field)
{
    return std::make_shared<QMatrix>(QMatrix::commutative(n, field));
}

std::vector<Monomial> random_minimal_gens(std::mt19937_64& rng, std::size_t n, std::size_t s,
                                          std::int64_t max_exp)
{
    std::uniform_int_distribution<std::int64_t> exp(0, max_exp);
    std::vector<Monomial> last;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Monomial> gens;
        for (std::size_t k = 0; k < s; ++k) {
            Monomial m = Monomial::unit(n);
            do {
                for (std::size_t i = 0; i < n; ++i)
                    m.exps[i] = exp(rng);
            } while (m.is_unit());
            gens.push_back(m);
        }
        last = minimal_generators(gens);
        if (last.size() == s)
            return last;
    }
    return last;
}

Instance random_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_s,
                         std::int64_t max_exp)
{
    std::uniform_int_distribution<std::size_t> nd(1, max_n), sd(1, max_s);
    Instance inst;
    std::size_t n = nd(rng);
    inst.ring = random_qmatrix(rng, n);
    inst.gens = random_minimal_gens(rng, n, sd(rng), max_exp);
    return inst;
}

QMatrixPtr example_ring(const FieldDesc& field, const Scalar& q)
{
    Scalar one = Scalar::one(field);
    Scalar minus_one = -one;
    std::vector<Scalar> e = {
        one,          q,                       minus_one,
        q.inverse(),  one,                     -q.inverse(),
        minus_one,    (-q.inverse()).inverse(), one,
    };
    return std::make_shared<QMatrix>(3, field, std::move(e));
}

QMatrixPtr qplane(const FieldDesc& field, const Scalar& q)
{
    std::vector<Scalar> e = {Scalar::one(field), q, q.inverse(), Scalar::one(field)};
    return std::make_shared<QMatrix>(2, field, std::move(e));
}

}  // namespace skewtaylor::testgen
