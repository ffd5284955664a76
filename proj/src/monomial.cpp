#include "m0n/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

std::string_view to_string(OrderConvention c)
{
    return c == OrderConvention::Descending ? "desc" : "asc";
}

OrderConvention parse_order_convention(std::string_view s)
{
    if (s == "desc")
        return OrderConvention::Descending;
    if (s == "asc")
        return OrderConvention::Ascending;
    throw std::invalid_argument("unknown order convention: " + std::string(s));
}

std::vector<Generator> generators(int n)
{
    std::vector<Generator> out;
    for (int i = 1; i <= n - 3; ++i)
        out.push_back(Generator::a(i));
    for (IndexSet s : admissible_sets(n))
        out.push_back(Generator::d(s));
    return out;
}

Monomial Monomial::a(int i, int exponent)
{
    return from_factors({{i, exponent}}, {});
}

Monomial Monomial::d(IndexSet set, int exponent)
{
    return from_factors({}, {{set, exponent}});
}

Monomial Monomial::of(const Generator& g, int exponent)
{
    return g.kind == Generator::Kind::A ? a(g.index, exponent) : d(g.set, exponent);
}

Monomial Monomial::from_factors(std::vector<AFactor> a, std::vector<DFactor> d)
{
    for (const auto& [i, e] : a)
        if (e < 0 || i < 1)
            throw std::invalid_argument("invalid a-factor");
    for (const auto& [s, e] : d)
        if (e < 0 || s.empty())
            throw std::invalid_argument("invalid D-factor");

    std::sort(a.begin(), a.end());
    std::sort(d.begin(), d.end(), [](const DFactor& x, const DFactor& y) { return subset_less(y.first, x.first); });

    Monomial m;
    for (const auto& f : a) {
        if (!m.a_.empty() && m.a_.back().first == f.first)
            m.a_.back().second += f.second;
        else
            m.a_.push_back(f);
    }
    for (const auto& f : d) {
        if (!m.d_.empty() && m.d_.back().first == f.first)
            m.d_.back().second += f.second;
        else
            m.d_.push_back(f);
    }
    std::erase_if(m.a_, [](const AFactor& f) { return f.second == 0; });
    std::erase_if(m.d_, [](const DFactor& f) { return f.second == 0; });
    return m;
}

int Monomial::a_degree() const
{
    int s = 0;
    for (const auto& f : a_)
        s += f.second;
    return s;
}

int Monomial::d_degree() const
{
    int s = 0;
    for (const auto& f : d_)
        s += f.second;
    return s;
}

int Monomial::a_exponent(int i) const
{
    for (const auto& [j, e] : a_)
        if (j == i)
            return e;
    return 0;
}

int Monomial::d_exponent(IndexSet set) const
{
    for (const auto& [s, e] : d_)
        if (s == set)
            return e;
    return 0;
}

Monomial Monomial::a_part() const
{
    Monomial m;
    m.a_ = a_;
    return m;
}

Monomial Monomial::d_part() const
{
    Monomial m;
    m.d_ = d_;
    return m;
}

IndexSet Monomial::a_support() const
{
    IndexSet s;
    for (const auto& f : a_)
        s.insert(f.first);
    return s;
}

std::vector<IndexSet> Monomial::d_sets() const
{
    std::vector<IndexSet> out;
    out.reserve(d_.size());
    for (const auto& f : d_)
        out.push_back(f.first);
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial m;
    m.a_.reserve(a_.size() + o.a_.size());
    std::size_t i = 0, j = 0;
    while (i < a_.size() || j < o.a_.size()) {
        if (j == o.a_.size() || (i < a_.size() && a_[i].first < o.a_[j].first))
            m.a_.push_back(a_[i++]);
        else if (i == a_.size() || o.a_[j].first < a_[i].first)
            m.a_.push_back(o.a_[j++]);
        else {
            m.a_.emplace_back(a_[i].first, a_[i].second + o.a_[j].second);
            ++i;
            ++j;
        }
    }
    m.d_.reserve(d_.size() + o.d_.size());
    i = j = 0;
    while (i < d_.size() || j < o.d_.size()) {
        if (j == o.d_.size() || (i < d_.size() && subset_less(o.d_[j].first, d_[i].first)))
            m.d_.push_back(d_[i++]);
        else if (i == d_.size() || subset_less(d_[i].first, o.d_[j].first))
            m.d_.push_back(o.d_[j++]);
        else {
            m.d_.emplace_back(d_[i].first, d_[i].second + o.d_[j].second);
            ++i;
            ++j;
        }
    }
    return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const
{
    std::vector<AFactor> a = a_;
    std::vector<DFactor> d = d_;
    for (const auto& [i, e] : o.a_) {
        auto it = std::find_if(a.begin(), a.end(), [&](const AFactor& f) { return f.first == i; });
        if (it == a.end() || it->second < e)
            return std::nullopt;
        it->second -= e;
    }
    for (const auto& [s, e] : o.d_) {
        auto it = std::find_if(d.begin(), d.end(), [&](const DFactor& f) { return f.first == s; });
        if (it == d.end() || it->second < e)
            return std::nullopt;
        it->second -= e;
    }
    std::erase_if(a, [](const AFactor& f) { return f.second == 0; });
    std::erase_if(d, [](const DFactor& f) { return f.second == 0; });
    Monomial m;
    m.a_ = std::move(a);
    m.d_ = std::move(d);
    return m;
}

void Monomial::validate(int n) const
{
    check_marking_count(n);
    for (const auto& [i, e] : a_)
        if (i < 1 || i > n - 3)
            throw std::invalid_argument("a" + std::to_string(i) + " is not a generator for n=" + std::to_string(n));
    for (const auto& [s, e] : d_)
        if (!is_admissible(s, n))
            throw std::invalid_argument("D" + s.to_string() + " is not admissible for n=" + std::to_string(n));
}

std::size_t Monomial::hash() const
{
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& [i, e] : a_)
        mix((std::uint64_t(i) << 32) | std::uint32_t(e));
    mix(0xffff);
    for (const auto& [s, e] : d_)
        mix((std::uint64_t(s.bits()) << 16) ^ std::uint64_t(e));
    return h;
}

int compare_d_parts(const Monomial& lhs, const Monomial& rhs, OrderConvention c)
{
    const auto& x = lhs.d_factors();
    const auto& y = rhs.d_factors();
    if (c == OrderConvention::Descending) {
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && subset_less(y[j].first, x[i].first)))
                return 1;
            if (i == x.size() || subset_less(x[i].first, y[j].first))
                return -1;
            if (x[i].second != y[j].second)
                return x[i].second < y[j].second ? -1 : 1;
            ++i;
            ++j;
        }
        return 0;
    }
    std::size_t i = x.size(), j = y.size();
    while (i > 0 || j > 0) {
        if (j == 0 || (i > 0 && subset_less(x[i - 1].first, y[j - 1].first)))
            return 1;
        if (i == 0 || subset_less(y[j - 1].first, x[i - 1].first))
            return -1;
        if (x[i - 1].second != y[j - 1].second)
            return x[i - 1].second < y[j - 1].second ? -1 : 1;
        --i;
        --j;
    }
    return 0;
}

bool a_part_less(const Monomial& lhs, const Monomial& rhs)
{
    const auto& x = lhs.a_factors();
    const auto& y = rhs.a_factors();
    const bool support_less = std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(),
        [](const Monomial::AFactor& p, const Monomial::AFactor& q) { return p.first < q.first; });
    const bool support_greater = std::lexicographical_compare(
        y.begin(), y.end(), x.begin(), x.end(),
        [](const Monomial::AFactor& p, const Monomial::AFactor& q) { return p.first < q.first; });
    if (support_less != support_greater)
        return support_less;
    if (lhs.a_degree() != rhs.a_degree())
        return lhs.a_degree() < rhs.a_degree();
    return x < y;
}

bool monomial_less(const Monomial& lhs, const Monomial& rhs, OrderConvention c)
{
    const int cmp = compare_d_parts(lhs, rhs, c);
    if (cmp != 0)
        return cmp < 0;
    return a_part_less(lhs, rhs);
}

bool monomial_much_less(const Monomial& lhs, const Monomial& rhs, OrderConvention c)
{
    for (const auto& [s, e] : rhs.d_factors())
        if (!monomial_less(lhs, Monomial::d(s), c))
            return false;
    return true;
}

std::vector<Monomial::DFactor> display_order(const Monomial& m)
{
    auto ds = m.d_factors();
    std::sort(ds.begin(), ds.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size())
            return x.first.size() > y.first.size();
        return subset_less(x.first, y.first);
    });
    return ds;
}

std::string render(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    auto sep = [&out] {
        if (!out.empty())
            out += '*';
    };
    for (const auto& [i, e] : m.a_factors()) {
        sep();
        out += 'a';
        out += std::to_string(i);
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    for (const auto& [s, e] : display_order(m)) {
        sep();
        out += 'D';
        out += s.to_string();
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace m0n
