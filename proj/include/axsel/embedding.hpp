#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace axsel {

/// Cosine similarity in double precision, clamped to [-1, 1].
/// Throws ZeroVector or DimensionMismatch.
double cos_sim(std::span<const double> u, std::span<const double> v);

double euclidean_norm(std::span<const double> v);

/// Row-major table of equally sized non-zero vectors with cached norms.
class DenseRows {
public:
    explicit DenseRows(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return norms_.size(); }

    /// Throws DimensionMismatch or ZeroVector.
    void push_back(std::span<const double> row);

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
    double norm(std::size_t i) const { return norms_[i]; }

    void reserve(std::size_t rows) {
        data_.reserve(rows * dim_);
        norms_.reserve(rows);
    }

private:
    std::size_t dim_;
    std::vector<double> data_;
    std::vector<double> norms_;
};

struct RankedRow {
    std::size_t row = 0;
    double score = 0.0;
};

/// Exact top-k rows by cosine to `query`: descending score, ties by row
/// order. `exclude` removes one row from consideration. The scan is split
/// across `workers` threads and merged deterministically.
/// Throws ZeroVector, DimensionMismatch or KTooLarge (k > candidate rows).
std::vector<RankedRow> top_k_rows(const DenseRows& rows, std::span<const double> query, std::size_t k,
                                  std::optional<std::size_t> exclude = std::nullopt, unsigned workers = 1);

struct SimilarityHit {
    std::string token;
    double score = 0.0;

    friend bool operator==(const SimilarityHit&, const SimilarityHit&) = default;
};

/// Vocabulary-indexed word embedding.
class EmbeddingStore {
public:
    /// `token v1 ... vn` lines with an optional `count dim` header.
    /// Throws DimensionMismatch, DuplicateToken, ZeroVector or ParseError.
    static EmbeddingStore load(std::istream& in);
    static EmbeddingStore load(const std::filesystem::path& path);
    static EmbeddingStore from_rows(const std::vector<std::pair<std::string, std::vector<double>>>& rows);

    std::size_t size() const noexcept { return vocabulary_.size(); }
    std::size_t dim() const noexcept { return rows_.dim(); }

    const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
    const std::string& token(std::size_t row) const { return vocabulary_.at(row); }
    std::optional<std::size_t> find(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }

    std::span<const double> vector(std::size_t row) const { return rows_.row(row); }
    const DenseRows& rows() const noexcept { return rows_; }

private:
    void add(std::string token, std::span<const double> values);

    std::vector<std::string> vocabulary_;
    std::unordered_map<std::string, std::size_t> index_;
    DenseRows rows_;
};

/// The k tokens most similar to `word`, excluding `word` itself. Empty when
/// `word` is not in the vocabulary. Throws KTooLarge unless k < |V|.
std::vector<SimilarityHit> simwords(const EmbeddingStore& store, std::string_view word, std::size_t k);

/// Throws ZeroVector, DimensionMismatch or KTooLarge (k > |V|).
std::vector<SimilarityHit> top_k_vectors(const EmbeddingStore& store, std::span<const double> query, std::size_t k);

}  // namespace axsel
