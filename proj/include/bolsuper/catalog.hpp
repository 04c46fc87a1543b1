#pragma once

// Built-in algebras. Every entry is checked against its declared kind when
// it is loaded; a failure there is an Internal error.

#include <string>
#include <string_view>
#include <vector>

#include "bolsuper/structures.hpp"

namespace bolsuper {

struct CatalogEntry {
    std::string key;
    AlgebraDef algebra;
    AxiomKind kind;
    std::string provenance;
};

// Fixed keys, then the "abelian_m_n" pattern.
std::vector<std::string> catalogKeys();

// Accepts the fixed keys and abelian_<m>_<n> with m + n <= 12.
// Throws Usage for anything else.
CatalogEntry catalogEntry(std::string_view key);

bool isCatalogKey(std::string_view key);

// The fixed entries plus abelian_2_2.
std::vector<CatalogEntry> catalogEntries();

}  // namespace bolsuper
