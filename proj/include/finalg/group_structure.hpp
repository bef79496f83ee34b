#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "finalg/finite_group.hpp"

namespace finalg {

std::uint64_t element_order(const FiniteGroup& g, Element x);

/// order -> number of elements of that order
std::map<std::uint64_t, std::uint64_t> order_spectrum(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> generators);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// A generating set chosen greedily: elements are scanned in decreasing order
/// of element order and kept when they enlarge the subgroup generated so far.
std::vector<Element> generating_set(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, std::span<const Element> s);
Subgroup center(const FiniteGroup& g);

/// Conjugacy classes, each sorted, listed by smallest member. Requires a table.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

/// Smallest normal subgroup containing s.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> s);

/// All normal subgroups, sorted by size then members. Requires a table.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

Subgroup derived_subgroup(const FiniteGroup& g);

/// Order spectrum of the abelianization G/G' (which determines it up to isomorphism).
std::map<std::uint64_t, std::uint64_t> abelianization_spectrum(const FiniteGroup& g);

std::size_t abelianization_order(const FiniteGroup& g);

bool is_p_group_order(std::uint64_t n, std::uint64_t p);

}  // namespace finalg
