#include "m0n/keel_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

KeelRing::KeelRing(int n) : n_(n), dict_(keel_dictionary(n))
{
    const auto& divs = dict_.divisors;
    std::map<IndexSet, std::uint32_t> col;
    for (std::uint32_t c = 0; c < divs.size(); ++c)
        col.emplace(divs[c], c);

    SparseEchelon lin(divs.size());
    for (const auto& rel : dict_.four_point) {
        std::map<std::uint32_t, BigInt> row;
        for (const auto& [t, c] : rel)
            row[col.at(t)] = BigInt(static_cast<long>(c));
        lin.add_row(row);
    }
    lin.finalize();
    if (!lin.hard_rows().empty())
        throw std::logic_error("four-point relations do not admit unit pivots");

    std::map<std::uint32_t, std::uint16_t> var_of;
    for (std::uint32_t c = 0; c < divs.size(); ++c)
        if (!lin.is_pivot(c)) {
            var_of.emplace(c, static_cast<std::uint16_t>(free_.size()));
            free_.push_back(divs[c]);
        }
    for (std::uint32_t c = 0; c < divs.size(); ++c) {
        std::vector<std::pair<std::uint16_t, Coeff>> e;
        for (const auto& [k, x] : lin.reduce({{c, BigInt(1)}}))
            e.emplace_back(var_of.at(k), to_coeff(x));
        expansion_.emplace(divs[c], std::move(e));
    }
    for (const auto& [t, u] : dict_.incompatible)
        quadrics_.push_back(multiply(linear(t), linear(u)));
}

KeelRing::KPoly KeelRing::linear(IndexSet divisor) const
{
    KPoly p;
    for (const auto& [v, c] : expansion_.at(divisor))
        p[{v}] += c;
    return p;
}

KeelRing::KPoly KeelRing::multiply(const KPoly& p, const KPoly& q)
{
    KPoly out;
    for (const auto& [x, c] : p)
        for (const auto& [y, e] : q) {
            Vars z;
            z.reserve(x.size() + y.size());
            std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
            out[z] = checked_add(out[z], checked_mul(c, e));
        }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

KeelRing::KPoly KeelRing::image(const Monomial& m) const
{
    KPoly p{{Vars{}, 1}};
    for (const auto& [i, e] : m.a_factors()) {
        KPoly a;
        for (const auto& [t, c] : dict_.a_expansions.at(i)[0])
            for (const auto& [v, x] : linear(t))
                a[v] += c * x;
        std::erase_if(a, [](const auto& t) { return t.second == 0; });
        for (int k = 0; k < e; ++k)
            p = multiply(p, a);
    }
    for (const auto& [s, e] : m.d_factors()) {
        const KPoly d = linear(s);
        for (int k = 0; k < e; ++k)
            p = multiply(p, d);
    }
    return p;
}

KeelRing::Piece& KeelRing::piece(int d, const Budget& budget)
{
    if (auto it = pieces_.find(d); it != pieces_.end())
        return it->second;
    Piece pc;
    const auto nv = static_cast<std::uint16_t>(free_.size());
    auto all_of_degree = [nv](int deg) {
        std::vector<Vars> out;
        Vars cur;
        auto rec = [&](auto&& self, std::uint16_t from) -> void {
            if (static_cast<int>(cur.size()) == deg) {
                out.push_back(cur);
                return;
            }
            for (std::uint16_t v = from; v < nv; ++v) {
                cur.push_back(v);
                self(self, v);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    pc.columns = all_of_degree(d);
    for (std::uint32_t c = 0; c < pc.columns.size(); ++c)
        pc.index.emplace(pc.columns[c], c);
    pc.echelon = std::make_unique<SparseEchelon>(pc.columns.size());
    if (d >= 2) {
        const auto cofactors = all_of_degree(d - 2);
        for (const auto& q : quadrics_) {
            for (const auto& m : cofactors) {
                std::map<std::uint32_t, BigInt> row;
                for (const auto& [x, c] : multiply(q, KPoly{{m, 1}}))
                    row[pc.index.at(x)] = BigInt(static_cast<long>(c));
                pc.echelon->add_row(row);
            }
            budget.check("boundary-presentation rows");
        }
    }
    pc.echelon->finalize();
    return pieces_.emplace(d, std::move(pc)).first->second;
}

std::size_t KeelRing::rank(int d, const Budget& budget)
{
    std::lock_guard lock(mutex_);
    if (d < 0)
        return 0;
    Piece& pc = piece(d, budget);
    return pc.columns.size() - pc.echelon->rank();
}

std::vector<BigInt> KeelRing::invariant_factors(int d, const Budget& budget)
{
    std::lock_guard lock(mutex_);
    return piece(d, budget).echelon->invariant_factors();
}

bool KeelRing::vanishes(const Polynomial& p, const Budget& budget)
{
    std::lock_guard lock(mutex_);
    for (int d : p.degrees()) {
        KPoly img;
        const Polynomial part = p.homogeneous_part(d);
        for (const auto& [m, c] : part.terms())
            for (const auto& [x, e] : image(m))
                img[x] = checked_add(img[x], checked_mul(c, e));
        std::erase_if(img, [](const auto& t) { return t.second == 0; });
        if (img.empty())
            continue;
        Piece& pc = piece(d, budget);
        SparseRow row;
        for (const auto& [x, c] : img)
            row.emplace_back(pc.index.at(x), BigInt(static_cast<long>(c)));
        std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        const SparseRow rest = pc.echelon->reduce(std::move(row));
        if (rest.empty())
            continue;
        if (!pc.echelon->hard_rows().empty())
            throw std::logic_error("membership undecided: relation span has non-unit pivots");
        return false;
    }
    return true;
}

}  // namespace m0n
