#include "axsel/vector_select.hpp"

#include "axsel/digest.hpp"
#include "axsel/error.hpp"

#include <algorithm>
#include <unordered_map>
#include <fstream>
#include <unordered_set>

namespace axsel {

namespace {

struct Contribution {
    std::size_t row;
    double weight;
};

/// Sum of weight * f(token) over contributions divided by the weight sum; the
/// unweighted mean when every weight is zero. nullopt when nothing
/// contributes or the sum vanishes.
std::optional<std::vector<double>> weighted_mean(const EmbeddingStore& store,
                                                 const std::vector<Contribution>& contributions, bool& fallback) {
    fallback = false;
    if (contributions.empty()) {
        return std::nullopt;
    }
    double total = 0.0;
    for (const auto& c : contributions) total += c.weight;
    fallback = total == 0.0;
    if (fallback) total = static_cast<double>(contributions.size());

    std::vector<double> sum(store.dim(), 0.0);
    for (const auto& c : contributions) {
        const double w = fallback ? 1.0 : c.weight;
        const auto v = store.vector(c.row);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += w * v[i];
    }
    if (std::all_of(sum.begin(), sum.end(), [](double x) { return x == 0.0; })) {
        return std::nullopt;
    }
    for (auto& x : sum) x /= total;
    return sum;
}

constexpr char cache_magic[8] = {'A', 'X', 'S', 'E', 'L', 'V', 'E', 'C'};
constexpr std::uint32_t cache_version = 1;

template <typename T>
void write_pod(std::ofstream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& in, const std::filesystem::path& path) {
    T value{};
    if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
        throw IoError("truncated vector cache " + path.string());
    }
    return value;
}

}  // namespace

std::span<const double> KbVectorIndex::vector(AxiomIndex a) const {
    const auto row = axiom_row_.at(a);
    return row < 0 ? std::span<const double>{} : rows_.row(static_cast<std::size_t>(row));
}

void KbVectorIndex::append(std::optional<std::span<const double>> vector, bool fallback) {
    const auto axiom = static_cast<AxiomIndex>(axiom_row_.size());
    if (vector) {
        axiom_row_.push_back(static_cast<std::int64_t>(rows_.size()));
        rows_.push_back(*vector);
        row_axiom_.push_back(axiom);
    } else {
        axiom_row_.push_back(-1);
    }
    fallback_.push_back(fallback ? 1 : 0);
}

KbVectorIndex vectorize_kb(const KnowledgeBase& kb, const SymbolStats& stats, const EmbeddingStore& store,
                           const SymbolMapping& mapping) {
    std::vector<std::optional<std::size_t>> symbol_row(kb.symbol_count());
    for (SymbolId s = 0; s < kb.symbol_count(); ++s) {
        if (const auto* entry = mapping.lookup(kb.symbol_name(s))) {
            symbol_row[s] = store.find(entry->token);
        }
    }

    KbVectorIndex index;
    index.rows_ = DenseRows(store.dim());
    std::vector<Contribution> contributions;
    for (const auto& axiom : kb.axioms()) {
        contributions.clear();
        for (SymbolId s : axiom.symbols) {
            if (symbol_row[s]) contributions.push_back({*symbol_row[s], stats.idf[s]});
        }
        bool fallback = false;
        auto v = weighted_mean(store, contributions, fallback);
        index.append(v ? std::optional<std::span<const double>>(*v) : std::nullopt, v && fallback);
    }
    return index;
}

void KbVectorIndex::save(const std::filesystem::path& path) const {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp);
        }
        out.write(cache_magic, sizeof cache_magic);
        write_pod(out, cache_version);
        write_pod(out, static_cast<std::uint64_t>(size()));
        write_pod(out, static_cast<std::uint64_t>(dim()));
        for (AxiomIndex a = 0; a < size(); ++a) {
            const std::uint8_t flag = present(a) ? (used_fallback(a) ? 2 : 1) : 0;
            write_pod(out, flag);
            if (flag) {
                const auto v = vector(a);
                out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size_bytes()));
            }
        }
        if (!out) {
            throw IoError("failed writing " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

KbVectorIndex KbVectorIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    char magic[sizeof cache_magic];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, cache_magic) ||
        read_pod<std::uint32_t>(in, path) != cache_version) {
        throw IoError("not a vector cache file: " + path.string());
    }
    const auto n = read_pod<std::uint64_t>(in, path);
    const auto dim = read_pod<std::uint64_t>(in, path);
    KbVectorIndex index;
    index.rows_ = DenseRows(dim);
    std::vector<double> buffer(dim);
    for (std::uint64_t a = 0; a < n; ++a) {
        const auto flag = read_pod<std::uint8_t>(in, path);
        if (flag > 2) {
            throw IoError("corrupt vector cache " + path.string());
        }
        if (flag == 0) {
            index.append(std::nullopt, false);
            continue;
        }
        if (!in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(dim * sizeof(double)))) {
            throw IoError("truncated vector cache " + path.string());
        }
        index.append(std::span<const double>(buffer), flag == 2);
    }
    return index;
}

std::string cache_key(const KnowledgeBase& kb, const EmbeddingStore& store, const SymbolMapping& mapping) {
    Fnv1a kb_hash;
    for (const auto& axiom : kb.axioms()) {
        kb_hash.update(axiom.id);
        for (SymbolId s : axiom.symbols) kb_hash.update(kb.symbol_name(s));
        kb_hash.update(std::string_view("\n"));
    }
    Fnv1a store_hash;
    for (std::size_t row = 0; row < store.size(); ++row) {
        store_hash.update(store.token(row));
        const auto v = store.vector(row);
        store_hash.update({reinterpret_cast<const unsigned char*>(v.data()), v.size_bytes()});
    }
    Fnv1a mapping_hash;
    for (const auto& e : mapping.entries()) {
        mapping_hash.update(e.kb_symbol);
        mapping_hash.update(e.token);
    }
    return kb_hash.hex() + "-" + store_hash.hex() + "-" + mapping_hash.hex();
}

KbVectorIndex cached_vectorize_kb(const std::filesystem::path& cache_dir, const KnowledgeBase& kb,
                                  const SymbolStats& stats, const EmbeddingStore& store, const SymbolMapping& mapping) {
    const auto path = cache_dir / ("vectors-" + cache_key(kb, store, mapping) + ".bin");
    if (std::filesystem::exists(path)) {
        auto index = KbVectorIndex::load(path);
        if (index.size() == kb.size() && (index.present_count() == 0 || index.dim() == store.dim())) {
            return index;
        }
    }
    auto index = vectorize_kb(kb, stats, store, mapping);
    std::filesystem::create_directories(cache_dir);
    index.save(path);
    return index;
}

GoalVector vectorize_goal(const Goal& goal, const KnowledgeBase& kb, const SymbolStats& stats,
                          const EmbeddingStore& store, const SymbolMapping& mapping,
                          const NormalizerConfig& normalizer) {
    GoalVector out;
    const double unknown_weight = mean_idf(stats);
    std::vector<Contribution> contributions;
    for (const auto& name : goal.symbols) {
        if (auto id = kb.find_symbol(name)) {
            if (const auto* entry = mapping.lookup(name)) {
                if (auto row = store.find(entry->token)) contributions.push_back({*row, stats.idf[*id]});
            }
            continue;
        }
        ++out.unknown_symbol_count;
        if (auto row = store.find(brute_force_normalize(name, normalizer))) {
            contributions.push_back({*row, unknown_weight});
        }
    }
    out.vector = weighted_mean(store, contributions, out.used_fallback);
    if (!out.vector) out.used_fallback = false;
    return out;
}

SelectionResult most_similar(const KbVectorIndex& index, const GoalVector& goal, std::size_t k, unsigned workers) {
    if (goal.absent()) {
        throw GoalNotVectorizable();
    }
    if (k > index.present_count()) {
        throw KTooLarge(k, index.present_count());
    }
    SelectionResult result;
    result.strategy = "vector";
    if (k == 0) {
        return result;
    }
    // Rows are stored in source order, so row order is the source-order tiebreak.
    for (const auto& hit : top_k_rows(index.rows(), *goal.vector, k, std::nullopt, workers)) {
        result.axioms.push_back({index.axiom_of_row(hit.row), std::nullopt, hit.score, std::nullopt});
    }
    return result;
}

SelectionResult vb_union_sine(const KnowledgeBase& kb, const Goal& goal, const TriggerIndex& trigger_index, int depth,
                              const KbVectorIndex& kb_vectors, const GoalVector& goal_vector, std::size_t k,
                              unsigned workers) {
    SelectionResult result = sine_select(kb, goal, trigger_index, depth);
    result.strategy = "vb-union";
    for (auto& a : result.axioms) a.origin = Origin::sine;

    if (goal_vector.absent()) {
        return result;
    }
    const auto vector_part = most_similar(kb_vectors, goal_vector, std::min(k, kb_vectors.present_count()), workers);
    std::unordered_map<AxiomIndex, std::size_t> position;
    for (std::size_t i = 0; i < result.axioms.size(); ++i) position.emplace(result.axioms[i].axiom, i);
    for (const auto& hit : vector_part.axioms) {
        if (auto it = position.find(hit.axiom); it != position.end()) {
            auto& existing = result.axioms[it->second];
            existing.origin = Origin::both;
            existing.score = hit.score;
        } else {
            result.axioms.push_back({hit.axiom, std::nullopt, hit.score, Origin::vector});
        }
    }
    return result;
}

}  // namespace axsel
