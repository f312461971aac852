#include "axsel/mapping.hpp"

#include "axsel/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace axsel {

const char* to_string(MappingSource source) {
    switch (source) {
        case MappingSource::bruteforce: return "bruteforce";
        case MappingSource::synonym: return "synonym";
        case MappingSource::hyponym: return "hyponym";
        case MappingSource::instance: return "instance";
    }
    return "?";
}

MappingSource parse_mapping_source(std::string_view text) {
    if (text == "bruteforce") return MappingSource::bruteforce;
    if (text == "synonym") return MappingSource::synonym;
    if (text == "hyponym") return MappingSource::hyponym;
    if (text == "instance") return MappingSource::instance;
    throw UnknownSource(std::string(text));
}

std::string brute_force_normalize(std::string_view symbol, const NormalizerConfig& config) {
    for (const auto& prefix : config.prefixes) {
        if (!prefix.empty() && symbol.size() > prefix.size() && symbol.starts_with(prefix)) {
            symbol.remove_prefix(prefix.size());
            break;
        }
    }

    auto is_upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    auto is_lower_or_digit = [](char c) {
        return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    };
    std::string out;
    out.reserve(symbol.size() + 4);
    for (std::size_t i = 0; i < symbol.size(); ++i) {
        const char c = symbol[i];
        if (is_upper(c) && i > 0 && !out.empty() && out.back() != '_') {
            const char prev = symbol[i - 1];
            const bool next_lower = i + 1 < symbol.size() && std::islower(static_cast<unsigned char>(symbol[i + 1]));
            // fooBar -> foo_bar, HTMLParser -> html_parser
            if (is_lower_or_digit(prev) || (is_upper(prev) && next_lower)) {
                out += '_';
            }
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }

    for (const auto& suffix : config.suffixes) {
        if (!suffix.empty() && out.size() > suffix.size() && out.ends_with(suffix)) {
            out.resize(out.size() - suffix.size());
            break;
        }
    }
    return out;
}

SymbolMapping SymbolMapping::from_entries(const KnowledgeBase& kb, const EmbeddingStore& store,
                                          const std::vector<MappingEntry>& entries) {
    std::vector<const MappingEntry*> winner(kb.symbol_count(), nullptr);
    SymbolMapping mapping;
    for (const auto& entry : entries) {
        auto id = kb.find_symbol(entry.kb_symbol);
        if (!id || !store.contains(entry.token)) {
            ++mapping.dropped_;
            continue;
        }
        if (!winner[*id] || entry.priority() < winner[*id]->priority()) {
            winner[*id] = &entry;
        }
    }
    for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
        if (!winner[s]) continue;
        mapping.forward_.emplace(winner[s]->kb_symbol, mapping.ordered_.size());
        mapping.inverse_[winner[s]->token].push_back(winner[s]->kb_symbol);
        mapping.ordered_.push_back(*winner[s]);
    }
    for (auto& [token, symbols] : mapping.inverse_) {
        std::sort(symbols.begin(), symbols.end());
    }
    mapping.coverage_ = kb.symbol_count() == 0
                            ? 0.0
                            : static_cast<double>(mapping.ordered_.size()) / static_cast<double>(kb.symbol_count());
    return mapping;
}

const MappingEntry* SymbolMapping::lookup(std::string_view symbol) const {
    auto it = forward_.find(std::string(symbol));
    return it == forward_.end() ? nullptr : &ordered_[it->second];
}

std::optional<std::string> SymbolMapping::token_for(std::string_view symbol) const {
    if (const auto* entry = lookup(symbol)) {
        return entry->token;
    }
    return std::nullopt;
}

std::vector<std::string> SymbolMapping::inverse_lookup(std::string_view token) const {
    auto it = inverse_.find(std::string(token));
    return it == inverse_.end() ? std::vector<std::string>{} : it->second;
}

SymbolMapping build_mapping(const KnowledgeBase& kb, const EmbeddingStore& store,
                            const std::vector<LexicalTable>& tables, const NormalizerConfig& config) {
    // Per source: first row per symbol whose token is in the vocabulary.
    std::array<std::unordered_map<std::string, std::string>, 4> first_rows;
    for (const auto& table : tables) {
        if (table.source == MappingSource::bruteforce) {
            throw UnknownSource("bruteforce (not a lexical table source)");
        }
        auto& rows = first_rows[static_cast<std::size_t>(table.source)];
        for (const auto& [symbol, token] : table.rows) {
            if (store.contains(token)) {
                rows.try_emplace(symbol, token);
            }
        }
    }

    std::vector<MappingEntry> entries;
    for (const auto& symbol : kb.symbol_names()) {
        auto candidate = brute_force_normalize(symbol, config);
        if (store.contains(candidate)) {
            entries.push_back({symbol, std::move(candidate), MappingSource::bruteforce});
            continue;
        }
        for (auto source : {MappingSource::synonym, MappingSource::hyponym, MappingSource::instance}) {
            const auto& rows = first_rows[static_cast<std::size_t>(source)];
            if (auto it = rows.find(symbol); it != rows.end()) {
                entries.push_back({symbol, it->second, source});
                break;
            }
        }
    }
    return SymbolMapping::from_entries(kb, store, entries);
}

std::set<std::string> map_symbols(const SymbolMapping& mapping, const std::vector<std::string>& symbols) {
    std::set<std::string> out;
    for (const auto& s : symbols) {
        if (const auto* entry = mapping.lookup(s)) {
            out.insert(entry->token);
        }
    }
    return out;
}

void write_mapping_tsv(std::ostream& out, const SymbolMapping& mapping) {
    for (const auto& e : mapping.entries()) {
        out << e.kb_symbol << '\t' << e.token << '\t' << to_string(e.source) << '\n';
    }
}

std::vector<MappingEntry> read_mapping_tsv(std::istream& in) {
    std::vector<MappingEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            throw ParseError("expected kb_symbol<TAB>token<TAB>source", line_no);
        }
        MappingEntry e;
        e.kb_symbol = line.substr(0, tab1);
        e.token = line.substr(tab1 + 1, tab2 - tab1 - 1);
        e.source = parse_mapping_source(std::string_view(line).substr(tab2 + 1));
        if (e.kb_symbol.empty() || e.token.empty()) {
            throw ParseError("empty symbol or token", line_no);
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<MappingEntry> read_mapping_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_mapping_tsv(in);
}

std::vector<LexicalTable> tables_from_entries(const std::vector<MappingEntry>& entries) {
    std::vector<LexicalTable> tables;
    for (auto source : {MappingSource::synonym, MappingSource::hyponym, MappingSource::instance}) {
        tables.push_back({source, {}});
    }
    for (const auto& e : entries) {
        if (e.source == MappingSource::bruteforce) {
            throw UnknownSource("bruteforce (not a lexical table source)");
        }
        tables[static_cast<std::size_t>(e.source) - 1].rows.emplace_back(e.kb_symbol, e.token);
    }
    return tables;
}

}  // namespace axsel
