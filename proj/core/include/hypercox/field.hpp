#pragma once

#include "hypercox/gram.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace hypercox {

/// Subfield of a tower given by generators. A Q-basis is computed on first
/// use by closing {1} under multiplication by the generators.
class SubfieldDescriptor {
public:
    SubfieldDescriptor();
    explicit SubfieldDescriptor(std::vector<AlgNum> generators);

    const std::vector<AlgNum>& generators() const noexcept { return gens_; }
    std::size_t degree() const;
    bool is_rational() const { return degree() == 1; }
    bool contains(const AlgNum& x) const;
    bool is_subfield_of(const SubfieldDescriptor& other) const;
    bool is_proper_subfield_of(const SubfieldDescriptor& other) const;
    bool equals(const SubfieldDescriptor& other) const;
    /// sigma fixes every generator; sigma's tower must contain them all.
    bool fixed_by(const Embedding& sigma) const;
    /// Greedy subset of the generators that still generates the field.
    std::vector<AlgNum> reduced_generators() const;
    /// Tower holding the basis.
    TowerPtr tower() const;

private:
    struct Basis;
    const Basis& basis() const;

    std::vector<AlgNum> gens_;
    std::shared_ptr<Basis> basis_;
};

/// Edge squares g_ij^2 plus one cycle product per non-tree edge of a spanning
/// forest of the nonzero-entry graph. They generate the field of all cyclic
/// products.
std::vector<AlgNum> cyclic_generators(const GramMatrix& g);

/// Product g_{v0 v1} g_{v1 v2} ... g_{vk v0} along a closed walk.
AlgNum cyclic_product(const GramMatrix& g, const std::vector<int>& walk);

/// Field generated by the cyclic products.
SubfieldDescriptor ground_field(const GramMatrix& g);
/// Field generated by the entries themselves.
SubfieldDescriptor adjacent_field(const GramMatrix& g);

/// Calls f once per simple cycle (length >= 3) of the nonzero-entry graph,
/// vertices listed from the smallest one. Throws CycleExplosion beyond cap.
void for_each_simple_cycle(const GramMatrix& g, std::size_t cap,
                           const std::function<void(const std::vector<int>&)>& f);

}  // namespace hypercox
