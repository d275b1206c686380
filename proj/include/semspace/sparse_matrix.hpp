#ifndef SEMSPACE_SPARSE_MATRIX_HPP
#define SEMSPACE_SPARSE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/vocabulary.hpp"

namespace semspace {

enum class Weighting { RawCount, TfIdf };

// Term-by-document counts in compressed sparse row form (rows = terms).
// row_ptr has n_rows+1 entries; col_idx is strictly increasing within each
// row. The builders below guarantee RawCount values are positive integers
// and TfIdf values nonnegative reals.
struct SparseCountMatrix {
    std::size_t n_rows = 0; // V
    std::size_t n_cols = 0; // D
    std::vector<std::size_t> row_ptr;
    std::vector<std::uint32_t> col_idx;
    std::vector<double> values;
    Weighting weighting = Weighting::RawCount;

    std::size_t nnz() const { return values.size(); }
};

// Entry (t, d) = occurrences of term t in document d. Throws EmptyCorpus
// when no document contributes a retained token.
SparseCountMatrix build_term_doc(const std::vector<Document>& docs,
                                 const Vocabulary& vocab);

// value(t, d) := count(t, d) * ln(D / df(t)). Sparsity pattern unchanged;
// entries of terms present in every document become explicit zeros.
SparseCountMatrix apply_tfidf(const SparseCountMatrix& m);

} // namespace semspace

#endif
