#include "bolsuper/catalog.hpp"

#include <charconv>

#include "bolsuper/algebra_io.hpp"
#include "bolsuper/constructions.hpp"
#include "bolsuper/error.hpp"

namespace bolsuper {

namespace {

constexpr std::string_view kL222 = R"(name L2(2,2)
even e1 e2
odd e3 e4
binary [e1,e2] = e2
binary [e1,e3] = e3
binary [e1,e4] = -e4
binary [e2,e3] = -e4
)";

constexpr std::string_view kL231 = R"(name L2(3,1)
even e1 e2 e3
odd e4
binary [e1,e3] = e1
binary [e2,e3] = e1 + e2
binary [e3,e4] = e4
binary [e4,e4] = e1
ternary [e1,e3,e3] = e1
ternary [e2,e3,e3] = 2*e1 + e2
ternary [e3,e4,e3] = -e4
)";

constexpr std::string_view kAff2 = R"(name aff2
even e1 e2
binary [e1,e2] = e2
)";

const std::vector<std::string> kFixedKeys = {"L2_2_2_malcev", "L2_2_2_bol", "L2_3_1_bol", "aff2_lie"};

CatalogEntry verified(CatalogEntry e) {
    if (!checkAxioms(e.algebra, e.kind).passed())
        throw Error(ErrorKind::Internal,
                    "catalog entry '" + e.key + "' fails its declared kind " + std::string(to_string(e.kind)));
    return e;
}

std::optional<std::size_t> number(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<std::pair<std::size_t, std::size_t>> abelianShape(std::string_view key) {
    constexpr std::string_view prefix = "abelian_";
    if (key.substr(0, prefix.size()) != prefix) return std::nullopt;
    key.remove_prefix(prefix.size());
    const auto sep = key.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    const auto m = number(key.substr(0, sep)), n = number(key.substr(sep + 1));
    if (!m || !n || *m + *n > 12) return std::nullopt;
    return std::pair{*m, *n};
}

}  // namespace

std::vector<std::string> catalogKeys() {
    auto keys = kFixedKeys;
    keys.push_back("abelian_m_n");
    return keys;
}

bool isCatalogKey(std::string_view key) {
    for (const auto& k : kFixedKeys)
        if (k == key) return true;
    return abelianShape(key).has_value();
}

CatalogEntry catalogEntry(std::string_view key) {
    if (key == "L2_2_2_malcev")
        return verified({std::string(key), parseAlgebra(kL222), AxiomKind::Malcev,
                         "non-Lie Malcev superalgebra L2(2,2), even span(e1,e2), odd span(e3,e4)"});
    if (key == "L2_2_2_bol")
        return verified({std::string(key), malcevToBol(parseAlgebra(kL222)), AxiomKind::Bol,
                         "Bol superalgebra obtained from L2(2,2) by the Malcev-to-Bol construction"});
    if (key == "L2_3_1_bol")
        return verified({std::string(key), parseAlgebra(kL231), AxiomKind::Bol,
                         "four-dimensional Bol superalgebra L2(3,1), even span(e1,e2,e3), odd span(e4)"});
    if (key == "aff2_lie")
        return verified({std::string(key), parseAlgebra(kAff2), AxiomKind::Lie,
                         "two-dimensional non-abelian Lie algebra, the even part of L2(2,2)"});
    if (const auto shape = abelianShape(key)) {
        const auto [m, n] = *shape;
        SuperSpace space(m, n);
        AlgebraDef a("abelian(" + std::to_string(m) + "," + std::to_string(n) + ")", space, BinaryStructure(space),
                     TernaryStructure(space));
        return verified({std::string(key), std::move(a), AxiomKind::Bol, "abelian superalgebra, all products zero"});
    }
    throw Error(ErrorKind::Usage, "unknown catalog key '" + std::string(key) + "'");
}

std::vector<CatalogEntry> catalogEntries() {
    std::vector<CatalogEntry> out;
    for (const auto& k : kFixedKeys) out.push_back(catalogEntry(k));
    out.push_back(catalogEntry("abelian_2_2"));
    return out;
}

}  // namespace bolsuper
