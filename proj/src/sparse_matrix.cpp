#include "semspace/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "semspace/errors.hpp"

namespace semspace {

SparseCountMatrix build_term_doc(const std::vector<Document>& docs,
                                 const Vocabulary& vocab) {
    const std::size_t V = vocab.size();
    const std::size_t D = docs.size();

    // Per-term ordered (doc, count) accumulation.
    std::vector<std::map<std::uint32_t, double>> rows(V);
    std::size_t retained = 0;
    for (const auto& doc : docs) {
        for (TermId t : doc.token_ids) {
            rows[t][doc.doc_id] += 1.0;
            ++retained;
        }
    }
    if (D == 0 || retained == 0) {
        throw EmptyCorpus("term-document matrix: no retained tokens");
    }

    SparseCountMatrix m;
    m.n_rows = V;
    m.n_cols = D;
    m.row_ptr.resize(V + 1, 0);
    for (std::size_t t = 0; t < V; ++t) {
        m.row_ptr[t + 1] = m.row_ptr[t] + rows[t].size();
    }
    m.col_idx.reserve(m.row_ptr[V]);
    m.values.reserve(m.row_ptr[V]);
    for (std::size_t t = 0; t < V; ++t) {
        for (const auto& [d, count] : rows[t]) {
            m.col_idx.push_back(d);
            m.values.push_back(count);
        }
    }
    m.weighting = Weighting::RawCount;
    return m;
}

SparseCountMatrix apply_tfidf(const SparseCountMatrix& m) {
    if (m.weighting != Weighting::RawCount) {
        throw AlreadyWeighted("apply_tfidf: matrix is already TF-IDF weighted");
    }
    SparseCountMatrix out = m;
    out.weighting = Weighting::TfIdf;
    const double D = static_cast<double>(m.n_cols);
    for (std::size_t t = 0; t < m.n_rows; ++t) {
        const std::size_t begin = m.row_ptr[t];
        const std::size_t end = m.row_ptr[t + 1];
        const double df = static_cast<double>(end - begin);
        if (df == 0) continue;
        const double idf = std::log(D / df);
        for (std::size_t i = begin; i < end; ++i) {
            out.values[i] = m.values[i] * idf;
        }
    }
    return out;
}

} // namespace semspace
