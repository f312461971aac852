#pragma once

#include "axsel/embedding.hpp"
#include "axsel/knowledge_base.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace axsel {

/// Lower value wins.
enum class MappingSource { bruteforce = 0, synonym = 1, hyponym = 2, instance = 3 };

const char* to_string(MappingSource source);
/// Throws UnknownSource.
MappingSource parse_mapping_source(std::string_view text);

struct NormalizerConfig {
    std::vector<std::string> prefixes{"c__", "p__", "f__", "r__", "s__"};
    std::vector<std::string> suffixes{"_fn", "_function"};
};

/// Strips the first matching prefix, splits camel case into `_`-joined
/// lowercase components, then strips the first matching suffix.
/// `c__SecondarySchool` becomes `secondary_school`, `c__MeasureFn` becomes `measure`.
std::string brute_force_normalize(std::string_view symbol, const NormalizerConfig& config = {});

struct MappingEntry {
    std::string kb_symbol;
    std::string token;
    MappingSource source = MappingSource::bruteforce;

    int priority() const noexcept { return static_cast<int>(source); }
    friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

/// Rows of an external lexical mapping (WordNet-style). Row order matters:
/// the first usable row for a symbol wins.
struct LexicalTable {
    MappingSource source = MappingSource::synonym;
    std::vector<std::pair<std::string, std::string>> rows;  // kb_symbol, token
};

/// Partial function from KB symbols to embedding tokens, with its inverse.
class SymbolMapping {
public:
    SymbolMapping() = default;

    /// Keeps, per symbol, the first entry of minimal priority. Entries whose
    /// token is outside `store` or whose symbol is not in `kb` are dropped.
    static SymbolMapping from_entries(const KnowledgeBase& kb, const EmbeddingStore& store,
                                      const std::vector<MappingEntry>& entries);

    const MappingEntry* lookup(std::string_view symbol) const;
    std::optional<std::string> token_for(std::string_view symbol) const;

    /// KB symbols whose winning entry maps to `token`, sorted.
    std::vector<std::string> inverse_lookup(std::string_view token) const;

    std::size_t size() const noexcept { return forward_.size(); }
    bool empty() const noexcept { return forward_.empty(); }
    double coverage() const noexcept { return coverage_; }
    std::size_t dropped() const noexcept { return dropped_; }

    /// Entries ordered by KB symbol id.
    const std::vector<MappingEntry>& entries() const noexcept { return ordered_; }

private:
    std::unordered_map<std::string, std::size_t> forward_;  // symbol -> position in ordered_
    std::unordered_map<std::string, std::vector<std::string>> inverse_;
    std::vector<MappingEntry> ordered_;
    double coverage_ = 0.0;
    std::size_t dropped_ = 0;
};

/// Brute-force candidates first, then each table in priority order; a
/// weaker source is consulted only when every stronger one is undefined.
/// Throws UnknownSource if a table claims the bruteforce source.
SymbolMapping build_mapping(const KnowledgeBase& kb, const EmbeddingStore& store,
                            const std::vector<LexicalTable>& tables, const NormalizerConfig& config = {});

/// mapsym: the image of the mapped subset; unmapped symbols are dropped.
std::set<std::string> map_symbols(const SymbolMapping& mapping, const std::vector<std::string>& symbols);

/// Mapping TSV, `kb_symbol<TAB>token<TAB>source`, one row per mapped symbol.
void write_mapping_tsv(std::ostream& out, const SymbolMapping& mapping);
std::vector<MappingEntry> read_mapping_tsv(std::istream& in);
std::vector<MappingEntry> read_mapping_tsv(const std::filesystem::path& path);

/// Splits rows of a mapping TSV into per-source lexical tables. Throws
/// UnknownSource on bruteforce rows.
std::vector<LexicalTable> tables_from_entries(const std::vector<MappingEntry>& entries);

}  // namespace axsel
