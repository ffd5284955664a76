#include "m0n/reduction.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "m0n/forest.hpp"
#include "m0n/relations.hpp"

namespace m0n {

Reducer::Reducer(int n) : n_(n)
{
    check_marking_count(n);
}

std::optional<Monomial> Reducer::kernel_reduce(const Monomial& m) const
{
    for (const auto& [i, e] : m.a_factors())
        if (e >= 2)
            return std::nullopt;
    const auto sets = m.d_sets();
    for (std::size_t x = 0; x < sets.size(); ++x)
        for (std::size_t y = x + 1; y < sets.size(); ++y)
            if (!is_compatible(sets[x], sets[y]))
                return std::nullopt;
    // d-sets are largest first, so the first one containing i is its root
    IndexSet image;
    for (const auto& [i, e] : m.a_factors()) {
        int target = i;
        for (IndexSet s : sets) {
            if (!s.contains(i))
                continue;
            if (special_element(s, n_) != 0)
                return std::nullopt;
            target = s.min();
            break;
        }
        if (image.contains(target))
            return std::nullopt;
        image.insert(target);
    }
    std::vector<Monomial::AFactor> afs;
    for (int i : image.elements())
        afs.emplace_back(i, 1);
    return Monomial::from_factors(std::move(afs), m.d_factors());
}

Polynomial Reducer::kernel_reduce(const Polynomial& p) const
{
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        if (auto k = kernel_reduce(m))
            out.add_term(*k, c);
    return out;
}

Polynomial Reducer::rewrite_rule(IndexSet set, const std::vector<IndexSet>& children) const
{
    std::vector<IndexSet> key{set};
    key.insert(key.end(), children.begin(), children.end());
    {
        std::shared_lock lock(mutex_);
        if (auto it = rules_.find(key); it != rules_.end())
            return it->second;
    }
    const Polynomial rel = chern_relation_split(set, children, n_);
    const int w = static_cast<int>(complement_divisors(set, children, n_).size());
    Monomial lead = Monomial::d(set, w);
    for (IndexSet c : children)
        lead = lead * Monomial::d(c);
    const Coeff l = rel.coefficient(lead);
    if (l != 1 && l != -1)
        throw std::logic_error("unexpected leading coefficient in the relation for " + set.to_string());
    Polynomial rule = rel;
    rule.add_term(lead, -l);
    rule *= -l;
    std::unique_lock lock(mutex_);
    rules_.emplace(key, rule);
    return rule;
}

Polynomial Reducer::reduced_normal_form(const Monomial& k) const
{
    const auto sets = k.d_sets();
    const Forest f = Forest::build(sets, n_);
    std::size_t bad = f.size();
    for (std::size_t v = 0; v < f.size(); ++v)
        if (k.d_factors()[v].second > f.exponent_cap(v)) {
            bad = v;
            break;
        }
    if (bad == f.size())
        return Polynomial(k);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;
    }
    std::vector<IndexSet> children;
    for (std::size_t c : f.children(bad))
        children.push_back(f.set(c));
    const Polynomial rule = rewrite_rule(f.set(bad), children);
    Monomial lead = Monomial::d(f.set(bad), f.exponent_cap(bad) + 1);
    for (IndexSet c : children)
        lead = lead * Monomial::d(c);
    const auto q = k.divide(lead);
    if (!q)
        throw std::logic_error("rewrite rule does not divide " + render(k));

    Polynomial result;
    for (const auto& [t, c] : rule.terms())
        if (auto r = kernel_reduce(*q * t))
            result += reduced_normal_form(*r) * c;
    std::unique_lock lock(mutex_);
    memo_.emplace(k, result);
    return result;
}

Polynomial Reducer::normal_form(const Monomial& m) const
{
    m.validate(n_);
    if (m.degree() > n_ - 3)
        return {};
    auto k = kernel_reduce(m);
    if (!k)
        return {};
    return reduced_normal_form(*k);
}

Polynomial Reducer::normal_form(const Polynomial& p) const
{
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        out += normal_form(m) * c;
    return out;
}

NormalForm Reducer::reduce(const Polynomial& p) const
{
    NormalForm nf;
    nf.n = n_;
    const auto degrees = p.degrees();
    nf.degree = degrees.size() == 1 ? degrees.front() : -1;
    nf.value = normal_form(p);
    return nf;
}

Monomial Reducer::top_monomial() const
{
    Monomial m;
    for (int i = 1; i <= n_ - 3; ++i)
        m = m * Monomial::a(i);
    return m;
}

Coeff Reducer::integral(const Polynomial& p) const
{
    for (const auto& [m, c] : p.terms())
        if (m.degree() != n_ - 3)
            throw std::invalid_argument("integral needs degree " + std::to_string(n_ - 3) + ", got " + render(m));
    const Polynomial nf = normal_form(p);
    const Monomial top = top_monomial();
    for (const auto& [m, c] : nf.terms())
        if (!(m == top))
            throw std::logic_error("top-degree normal form has a term other than the point class: " + render(m));
    return nf.coefficient(top);
}

std::vector<std::pair<Monomial, Polynomial>> Reducer::memo_snapshot() const
{
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Monomial, Polynomial>> out(memo_.begin(), memo_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

void Reducer::seed(const Monomial& m, Polynomial value)
{
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign(m, std::move(value));
}

std::size_t Reducer::memo_size() const
{
    std::shared_lock lock(mutex_);
    return memo_.size();
}

}  // namespace m0n
