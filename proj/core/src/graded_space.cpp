#include "linfkit/graded_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lk {

void axpy(Vec& y, const Scalar& a, const Vec& x)
{
    if (a == 0)
        return;
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            y.emplace(k, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

Vec scaled(const Vec& x, const Scalar& a)
{
    Vec r;
    if (a == 0)
        return r;
    for (const auto& [k, v] : x)
        r.emplace(k, a * v);
    return r;
}

Vec basis_vec(int id)
{
    return Vec{{id, Scalar(1)}};
}

bool is_zero(const Vec& v)
{
    for (const auto& [k, x] : v)
        if (x != 0)
            return false;
    return true;
}

GradedSpace::GradedSpace(const std::vector<Component>& components)
{
    std::vector<BasisElement> els;
    std::set<int> seen;
    for (const auto& c : components) {
        if (!seen.insert(c.degree).second)
            throw std::invalid_argument("repeated degree " + std::to_string(c.degree));
        if (c.labels.empty())
            throw std::invalid_argument("empty component in degree " + std::to_string(c.degree));
        for (const auto& l : c.labels)
            els.push_back({l, c.degree});
    }
    *this = from_elements(std::move(els));
}

GradedSpace GradedSpace::from_elements(std::vector<BasisElement> elements)
{
    GradedSpace s;
    std::sort(elements.begin(), elements.end(), [](const BasisElement& a, const BasisElement& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.label < b.label;
    });
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].label.empty())
            throw std::invalid_argument("empty basis label");
        if (!s.index_.emplace(elements[i].label, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate basis label '" + elements[i].label + "'");
    }
    s.basis_ = std::move(elements);
    return s;
}

int GradedSpace::id(std::string_view label) const
{
    auto f = find(label);
    if (!f)
        throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
    return *f;
}

std::optional<int> GradedSpace::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> GradedSpace::ids_of_degree(int d) const
{
    std::vector<int> r;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].degree == d)
            r.push_back(i);
    return r;
}

std::vector<int> GradedSpace::degrees() const
{
    std::vector<int> r;
    for (const auto& b : basis_)
        if (r.empty() || r.back() != b.degree)
            r.push_back(b.degree);
    return r;
}

std::vector<GradedSpace::Component> GradedSpace::components() const
{
    std::vector<Component> r;
    for (const auto& b : basis_) {
        if (r.empty() || r.back().degree != b.degree)
            r.push_back({b.degree, {}});
        r.back().labels.push_back(b.label);
    }
    return r;
}

int GradedSpace::min_degree() const
{
    return basis_.empty() ? 0 : basis_.front().degree;
}

int GradedSpace::max_degree() const
{
    return basis_.empty() ? 0 : basis_.back().degree;
}

int GradedSpace::terms() const
{
    if (basis_.empty())
        return 1;
    return max_degree() <= 0 ? 1 - min_degree() : max_degree() - min_degree() + 1;
}

GradedSpace GradedSpace::dual(const std::string& suffix) const
{
    std::vector<BasisElement> els;
    for (const auto& b : basis_)
        els.push_back({b.label + suffix, -b.degree});
    return from_elements(std::move(els));
}

std::optional<int> GradedSpace::homogeneous_degree(const Vec& v) const
{
    std::optional<int> d;
    for (const auto& [k, x] : v) {
        if (x == 0)
            continue;
        if (d && *d != degree(k))
            return std::nullopt;
        d = degree(k);
    }
    return d;
}

bool GradedSpace::operator==(const GradedSpace& o) const
{
    if (basis_.size() != o.basis_.size())
        return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label != o.basis_[i].label || basis_[i].degree != o.basis_[i].degree)
            return false;
    return true;
}

}  // namespace lk
