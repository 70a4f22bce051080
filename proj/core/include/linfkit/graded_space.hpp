#pragma once

#include "linfkit/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lk {

// Sparse vector over basis ids.
using Vec = std::map<int, Scalar>;

void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& x, const Scalar& a);
Vec basis_vec(int id);
bool is_zero(const Vec& v);

struct BasisElement {
    std::string label;
    int degree = 0;
};

// Graded vector space with labelled basis. Basis ids follow the
// canonical (degree, label) order.
class GradedSpace {
public:
    struct Component {
        int degree;
        std::vector<std::string> labels;
    };

    GradedSpace() = default;
    explicit GradedSpace(const std::vector<Component>& components);
    static GradedSpace from_elements(std::vector<BasisElement> elements);

    int dim() const { return static_cast<int>(basis_.size()); }
    int degree(int id) const { return basis_.at(id).degree; }
    const std::string& label(int id) const { return basis_.at(id).label; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    int id(std::string_view label) const;
    std::optional<int> find(std::string_view label) const;
    std::vector<int> ids_of_degree(int d) const;
    // Distinct degrees, increasing.
    std::vector<int> degrees() const;
    std::vector<Component> components() const;
    int min_degree() const;
    int max_degree() const;
    // Number of distinct degrees when they form a contiguous block 0, -1, ...
    int terms() const;

    // Negated degrees; labels get the suffix appended.
    GradedSpace dual(const std::string& suffix = "*") const;

    std::optional<int> homogeneous_degree(const Vec& v) const;

    bool operator==(const GradedSpace& o) const;

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, int> index_;
};

// The same basis seen in V[n]: an element of degree d has degree d - n.
struct ShiftedSpace {
    const GradedSpace* space = nullptr;
    int shift = 0;

    int degree(int id) const { return space->degree(id) - shift; }
};

}  // namespace lk
