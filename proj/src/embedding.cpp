#include "axsel/embedding.hpp"

#include "axsel/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <thread>

namespace axsel {

namespace {

double dot(std::span<const double> u, std::span<const double> v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += u[i] * v[i];
    }
    return sum;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

bool ranks_before(const RankedRow& a, const RankedRow& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.row < b.row;
}

std::vector<RankedRow> scan_range(const DenseRows& rows, std::span<const double> query, double query_norm,
                                  std::size_t begin, std::size_t end, std::size_t k,
                                  std::optional<std::size_t> exclude) {
    std::vector<RankedRow> hits;
    hits.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        if (exclude && *exclude == i) continue;
        hits.push_back({i, clamp_unit(dot(query, rows.row(i)) / (query_norm * rows.norm(i)))});
    }
    if (k < hits.size()) {
        std::nth_element(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(k), hits.end(), ranks_before);
        hits.resize(k);
    }
    std::sort(hits.begin(), hits.end(), ranks_before);
    return hits;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        const auto start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
        fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

double euclidean_norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double cos_sim(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch(u.size(), v.size());
    }
    const double nu = euclidean_norm(u);
    const double nv = euclidean_norm(v);
    if (nu == 0.0 || nv == 0.0) {
        throw ZeroVector("cosine similarity of a zero vector is undefined");
    }
    return clamp_unit(dot(u, v) / (nu * nv));
}

void DenseRows::push_back(std::span<const double> row) {
    if (row.size() != dim_) {
        throw DimensionMismatch(dim_, row.size());
    }
    const double n = euclidean_norm(row);
    if (n == 0.0) {
        throw ZeroVector();
    }
    data_.insert(data_.end(), row.begin(), row.end());
    norms_.push_back(n);
}

std::vector<RankedRow> top_k_rows(const DenseRows& rows, std::span<const double> query, std::size_t k,
                                  std::optional<std::size_t> exclude, unsigned workers) {
    if (query.size() != rows.dim()) {
        throw DimensionMismatch(rows.dim(), query.size());
    }
    const double query_norm = euclidean_norm(query);
    if (query_norm == 0.0) {
        throw ZeroVector("query vector is zero");
    }
    const std::size_t candidates = rows.size() - (exclude && *exclude < rows.size() ? 1 : 0);
    if (k > candidates) {
        throw KTooLarge(k, candidates);
    }

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size() / 4096 + 1)));
    if (workers == 1) {
        return scan_range(rows, query, query_norm, 0, rows.size(), k, exclude);
    }

    std::vector<std::vector<RankedRow>> partial(workers);
    {
        std::vector<std::jthread> threads;
        const std::size_t chunk = (rows.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(rows.size(), w * chunk);
            const std::size_t end = std::min(rows.size(), begin + chunk);
            threads.emplace_back([&, w, begin, end] {
                partial[w] = scan_range(rows, query, query_norm, begin, end, k, exclude);
            });
        }
    }
    std::vector<RankedRow> merged;
    for (auto& p : partial) {
        merged.insert(merged.end(), p.begin(), p.end());
    }
    std::sort(merged.begin(), merged.end(), ranks_before);
    merged.resize(k);
    return merged;
}

void EmbeddingStore::add(std::string token, std::span<const double> values) {
    if (vocabulary_.empty() && rows_.size() == 0 && rows_.dim() == 0) {
        rows_ = DenseRows(values.size());
    }
    if (index_.contains(token)) {
        throw DuplicateToken(token);
    }
    rows_.push_back(values);
    index_.emplace(token, vocabulary_.size());
    vocabulary_.push_back(std::move(token));
}

EmbeddingStore EmbeddingStore::load(std::istream& in) {
    EmbeddingStore store;
    std::optional<std::size_t> header_count;
    std::optional<std::size_t> dim;
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (first) {
            first = false;
            std::size_t count = 0, d = 0;
            if (fields.size() == 2 && parse_number(fields[0], count) && parse_number(fields[1], d)) {
                if (d == 0) {
                    throw ParseError("header declares dimension 0", line_no);
                }
                header_count = count;
                dim = d;
                store.rows_ = DenseRows(d);
                store.rows_.reserve(count);
                continue;
            }
        }

        if (fields.size() < 2) {
            throw ParseError("expected a token followed by vector components", line_no);
        }
        const std::size_t n = fields.size() - 1;
        if (!dim) {
            dim = n;
            store.rows_ = DenseRows(n);
        } else if (n != *dim) {
            throw DimensionMismatch(*dim, n, line_no);
        }
        values.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!parse_number(fields[i + 1], values[i]) || !std::isfinite(values[i])) {
                throw ParseError("invalid vector component '" + std::string(fields[i + 1]) + "'", line_no);
            }
        }
        std::string token(fields[0]);
        if (std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; })) {
            throw ZeroVector("line " + std::to_string(line_no) + ": zero vector for token '" + token + "'");
        }
        if (store.index_.contains(token)) {
            throw DuplicateToken(token);
        }
        store.add(std::move(token), values);
    }
    if (header_count && *header_count != store.size()) {
        throw ParseError("header declares " + std::to_string(*header_count) + " rows, found " +
                             std::to_string(store.size()),
                         line_no);
    }
    return store;
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return load(in);
}

EmbeddingStore EmbeddingStore::from_rows(const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
    EmbeddingStore store;
    for (const auto& [token, values] : rows) {
        if (!store.vocabulary_.empty() && values.size() != store.dim()) {
            throw DimensionMismatch(store.dim(), values.size());
        }
        store.add(token, values);
    }
    return store;
}

std::optional<std::size_t> EmbeddingStore::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<SimilarityHit> simwords(const EmbeddingStore& store, std::string_view word, std::size_t k) {
    if (k >= store.size()) {
        throw KTooLarge(k, store.size() == 0 ? 0 : store.size() - 1);
    }
    auto row = store.find(word);
    if (!row) {
        return {};
    }
    std::vector<SimilarityHit> out;
    for (const auto& hit : top_k_rows(store.rows(), store.vector(*row), k, *row)) {
        out.push_back({store.token(hit.row), hit.score});
    }
    return out;
}

std::vector<SimilarityHit> top_k_vectors(const EmbeddingStore& store, std::span<const double> query, std::size_t k) {
    std::vector<SimilarityHit> out;
    for (const auto& hit : top_k_rows(store.rows(), query, k)) {
        out.push_back({store.token(hit.row), hit.score});
    }
    return out;
}

}  // namespace axsel
