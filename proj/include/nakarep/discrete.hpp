#pragma once

// Basic connected Nakayama algebras given by their Kupisch series, the
// associated Kupisch function, and the embedding of their module categories
// into string modules on the circle.

#include "nakarep/interval.hpp"
#include "nakarep/kupisch.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nakarep {

struct KupischSeries {
    std::vector<std::size_t> lengths;  // l_0, ..., l_{n-1}

    std::size_t n() const { return lengths.size(); }
    bool linear() const { return !lengths.empty() && lengths.back() == 1; }
    std::size_t total() const;
    std::string str() const;  // "3,3,2"
};

// An indecomposable module: the string with top S_top and given length.
struct DiscreteModule {
    std::size_t top;
    std::size_t length;
    friend bool operator==(const DiscreteModule&, const DiscreteModule&) = default;
};

std::vector<std::string> validate_series(const KupischSeries& series);

// Circle profile with K = (i + l_i)/n on [i/n, (i+1)/n). Throws InvalidSeries.
KupischProfile associated_kupisch(const KupischSeries& series);

// (top/n, (top+length)/n]. Throws InvalidModule.
Interval embed_module(const KupischSeries& series, const DiscreteModule& m);

// Inverse of embed_module. Throws NotGridAligned, IncompatibleModule.
DiscreteModule extract_module(const KupischSeries& series, const Interval& u);

// Hom dimension between string modules over the cyclic quiver, by explicit
// linear algebra on basis vectors.
std::size_t discrete_hom_dim(const KupischSeries& series, const DiscreteModule& from, const DiscreteModule& to);

// Sum over i, j of dim Hom(F P_i, F P_j) computed on the circle.
std::size_t algebra_dim_check(const KupischSeries& series);

}  // namespace nakarep
