#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ordseq/group.hpp"

namespace ordseq {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// 1..16, 20, 21, 60.
const std::vector<std::uint64_t>& supported_orders();
bool is_supported_order(std::uint64_t n);
// Number of isomorphism types of order n; throws UnsupportedOrderError.
std::size_t known_group_count(std::uint64_t n);

// Construction recipes before deduplication, in catalog order.
std::vector<NamedGroup> candidate_groups(std::uint64_t n);

// Deduplicates the candidates up to isomorphism and checks the result
// against known_group_count. Throws std::logic_error on a count mismatch.
std::vector<NamedGroup> build_catalog(std::uint64_t n);

// Memoized build_catalog. When ORDSEQ_CACHE_DIR is set, catalogs are also
// read from and written to that directory.
const std::vector<NamedGroup>& catalog(std::uint64_t n);

// Catalog entry by name; throws PreconditionError("UnknownGroup").
const NamedGroup& catalog_group(std::uint64_t n, const std::string& name);

// Abelian groups of order n in invariant-factor form, names like "C2xC6".
std::vector<NamedGroup> abelian_groups_of_order(std::uint64_t n);

// Every maximal prime power p^a dividing n must have a ≤ 2 or p^a ∈ {8, 16};
// otherwise throws UnsupportedOrderError.
std::vector<NamedGroup> nilpotent_groups_of_order(std::uint64_t n);

// SmallGroup id for the order-60 catalog, derived from invariants.
std::optional<int> small_group_id(std::uint64_t n, const std::string& name);

// Versioned text serialization of a catalog with explicit Cayley tables.
void save_catalog(const std::filesystem::path& path, std::uint64_t n, const std::vector<NamedGroup>& groups);
// Returns nullopt when the file is missing, malformed or from another version.
std::optional<std::vector<NamedGroup>> load_catalog(const std::filesystem::path& path, std::uint64_t n);

}  // namespace ordseq
