// Batch front door: train semantic spaces (LSA / LDA / SGNS), query
// neighbors, convert vector files and run the relation-reproduction
// evaluation. Exit status: 0 success, 1 usage error, 2 data error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semspace/corpus.hpp"
#include "semspace/embedding_io.hpp"
#include "semspace/errors.hpp"
#include "semspace/evaluate.hpp"
#include "semspace/lda.hpp"
#include "semspace/lsa.hpp"
#include "semspace/report.hpp"
#include "semspace/sgns.hpp"
#include "semspace/sparse_matrix.hpp"

namespace fs = std::filesystem;
using namespace semspace;

namespace {

// All file outputs go through a temp file and a rename so failed runs
// leave nothing behind.
void write_file_atomic(const std::string& path,
                       const std::function<void(std::ostream&)>& writer) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + tmp);
        writer(out);
        if (!out) throw IoError("write failed: " + tmp);
    }
    fs::rename(tmp, path);
}

std::unordered_set<std::string> load_term_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::unordered_set<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        const std::string term = normalize_term(line);
        if (!term.empty()) terms.insert(term);
    }
    return terms;
}

std::vector<std::string> load_term_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::vector<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        const std::string term = normalize_term(line);
        if (!term.empty()) terms.push_back(term);
    }
    return terms;
}

EmbeddingSpace load_space(const std::string& path, const std::string& format,
                          const TermFilter& filter = std::nullopt) {
    if (format == "text") return read_text(path, filter);
    return read_binary(path, filter);
}

struct CorpusOptions {
    std::string path;
    std::uint64_t min_count = 5;
    TokenizerConfig tokenizer;
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& opts) {
    cmd->add_option("--corpus", opts.path,
                    "corpus file (one document per line) or directory of .txt")
        ->required();
    cmd->add_option("--min-count", opts.min_count,
                    "drop tokens with corpus frequency below this")
        ->capture_default_str();
    cmd->add_option("--min-token-len", opts.tokenizer.min_token_len)
        ->capture_default_str();
    cmd->add_flag("--no-lowercase",
                  [&opts](std::int64_t) { opts.tokenizer.lowercase = false; },
                  "keep original casing");
}

struct LoadedCorpus {
    Vocabulary vocab;
    std::vector<Document> docs;
};

LoadedCorpus load_corpus(const CorpusOptions& opts) {
    const CorpusReader reader(opts.path, opts.tokenizer);
    Vocabulary vocab = reader.build_vocabulary(opts.min_count);
    std::vector<Document> docs = reader.load_documents(vocab);
    return {std::move(vocab), std::move(docs)};
}

void report_trained(const EmbeddingSpace& space, double seconds,
                    const std::string& out_path) {
    std::cout << "model=" << model_kind_name(space.provenance().kind)
              << " dim=" << space.dim() << " V=" << space.size() << " time="
              << std::fixed << std::setprecision(2) << seconds << "s out="
              << out_path << "\n";
    std::cerr << "config: " << space.provenance().config << "\n";
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::string trim_ws(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Flat key=value config support: every "key=value" line becomes "--key"
// unless that flag was already given, so command-line flags win. The
// --config flag itself is consumed here, before CLI11 parsing.
std::vector<std::string> apply_flat_config(std::vector<std::string> args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (config_path.empty()) return args;
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + config_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim_ws(line);
        if (content.empty() || content[0] == '#') continue;
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error("config file " + config_path + " line " +
                        std::to_string(line_no) + ": expected key=value");
        }
        const std::string flag = "--" + trim_ws(content.substr(0, eq));
        const std::string value = trim_ws(content.substr(eq + 1));
        bool present = false;
        for (const auto& arg : args) {
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
                present = true;
                break;
            }
        }
        if (!present) args.push_back(flag + "=" + value);
    }
    return args;
}

// "auto" relation format sniffing: SemEval records start with an index, a
// tab and a quoted sentence.
std::string sniff_relations_format(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab != std::string::npos && tab > 0 &&
            line.find_first_not_of("0123456789") == tab &&
            tab + 1 < line.size() && line[tab + 1] == '"') {
            return "semeval";
        }
        return "tsv";
    }
    return "tsv";
}

int run(int argc, char** argv) {
    CLI::App app{"semantic spaces for word associations: trainers, neighbor "
                 "queries and relation-reproduction evaluation"};
    app.require_subcommand(1);

    // The --config flag is consumed by apply_flat_config before parsing;
    // registering it here keeps it in --help.
    static std::string config_path_for_help;
    const auto with_config = [](CLI::App* cmd) {
        cmd->add_option("--config", config_path_for_help,
                        "flat key=value config file; flags override");
        return cmd;
    };

    // ---- train-lsa ----
    auto* lsa_cmd = with_config(app.add_subcommand(
        "train-lsa", "truncated-SVD space from the term-document matrix"));
    CorpusOptions lsa_corpus;
    add_corpus_options(lsa_cmd, lsa_corpus);
    LsaConfig lsa_config;
    std::string lsa_out;
    bool lsa_tfidf = true;
    std::string lsa_vocab_out;
    lsa_cmd->add_option("--out", lsa_out, "output vectors (binary)")->required();
    lsa_cmd->add_option("--rank", lsa_config.rank)->capture_default_str()
        ->check(CLI::PositiveNumber);
    lsa_cmd->add_option("--power-iters", lsa_config.power_iters)
        ->capture_default_str();
    lsa_cmd->add_option("--oversample", lsa_config.oversample)
        ->capture_default_str();
    lsa_cmd->add_flag("--no-tfidf",
                      [&lsa_tfidf](std::int64_t) { lsa_tfidf = false; },
                      "train on raw counts instead of TF-IDF");
    lsa_cmd->add_option("--seed", lsa_config.seed)->capture_default_str();
    lsa_cmd->add_option("--save-vocab", lsa_vocab_out,
                        "also write the vocabulary (token<TAB>freq)");
    lsa_cmd->callback([&] {
        Timer timer;
        const LoadedCorpus corpus = load_corpus(lsa_corpus);
        SparseCountMatrix matrix = build_term_doc(corpus.docs, corpus.vocab);
        if (lsa_tfidf) matrix = apply_tfidf(matrix);
        const EmbeddingSpace space = train_lsa(matrix, corpus.vocab, lsa_config);
        write_file_atomic(lsa_out, [&](std::ostream& out) {
            write_binary(space, out);
        });
        if (!lsa_vocab_out.empty()) {
            write_file_atomic(lsa_vocab_out, [&](std::ostream& out) {
                out << corpus.vocab.serialize();
            });
        }
        report_trained(space, timer.seconds(), lsa_out);
    });

    // ---- train-lda ----
    auto* lda_cmd = with_config(app.add_subcommand(
        "train-lda", "collapsed-Gibbs LDA topic distributions per term"));
    CorpusOptions lda_corpus;
    add_corpus_options(lda_cmd, lda_corpus);
    LdaConfig lda_config;
    std::string lda_out;
    std::string lda_vocab_out;
    lda_cmd->add_option("--out", lda_out, "output vectors (binary)")->required();
    lda_cmd->add_option("--topics", lda_config.topics)->capture_default_str()
        ->check(CLI::PositiveNumber);
    lda_cmd->add_option("--alpha", lda_config.alpha,
                        "document-topic prior (default 50/K)");
    lda_cmd->add_option("--beta", lda_config.beta)->capture_default_str();
    lda_cmd->add_option("--sweeps", lda_config.sweeps)->capture_default_str()
        ->check(CLI::PositiveNumber);
    lda_cmd->add_option("--seed", lda_config.seed)->capture_default_str();
    lda_cmd->add_option("--save-vocab", lda_vocab_out);
    lda_cmd->callback([&] {
        Timer timer;
        const LoadedCorpus corpus = load_corpus(lda_corpus);
        const EmbeddingSpace space =
            train_lda(corpus.docs, corpus.vocab, lda_config);
        write_file_atomic(lda_out, [&](std::ostream& out) {
            write_binary(space, out);
        });
        if (!lda_vocab_out.empty()) {
            write_file_atomic(lda_vocab_out, [&](std::ostream& out) {
                out << corpus.vocab.serialize();
            });
        }
        report_trained(space, timer.seconds(), lda_out);
    });

    // ---- train-sgns ----
    auto* sgns_cmd = with_config(app.add_subcommand(
        "train-sgns", "skip-gram negative-sampling embeddings"));
    CorpusOptions sgns_corpus;
    add_corpus_options(sgns_cmd, sgns_corpus);
    SgnsConfig sgns_config;
    std::string sgns_out;
    std::string sgns_vocab_out;
    sgns_cmd->add_option("--out", sgns_out, "output vectors (binary)")->required();
    sgns_cmd->add_option("--dim", sgns_config.dim)->capture_default_str()
        ->check(CLI::PositiveNumber);
    sgns_cmd->add_option("--window", sgns_config.window)->capture_default_str()
        ->check(CLI::PositiveNumber);
    sgns_cmd->add_option("--negatives", sgns_config.negatives)
        ->capture_default_str()->check(CLI::PositiveNumber);
    sgns_cmd->add_option("--epochs", sgns_config.epochs)->capture_default_str();
    sgns_cmd->add_option("--lr-start", sgns_config.lr_start)
        ->capture_default_str();
    sgns_cmd->add_option("--lr-end", sgns_config.lr_end)->capture_default_str();
    sgns_cmd->add_option("--subsample", sgns_config.subsample,
                         "frequent-token subsampling threshold (0 = off)")
        ->capture_default_str();
    sgns_cmd->add_option("--seed", sgns_config.seed)->capture_default_str();
    sgns_cmd->add_option("--save-vocab", sgns_vocab_out);
    sgns_cmd->callback([&] {
        Timer timer;
        const LoadedCorpus corpus = load_corpus(sgns_corpus);
        const EmbeddingSpace space =
            train_sgns(corpus.docs, corpus.vocab, sgns_config);
        write_file_atomic(sgns_out, [&](std::ostream& out) {
            write_binary(space, out);
        });
        if (!sgns_vocab_out.empty()) {
            write_file_atomic(sgns_vocab_out, [&](std::ostream& out) {
                out << corpus.vocab.serialize();
            });
        }
        report_trained(space, timer.seconds(), sgns_out);
    });

    // ---- query ----
    auto* query_cmd =
        with_config(app.add_subcommand("query", "print the top-k cosine neighbors of a term"));
    std::string query_vectors, query_term, query_filter, query_format = "binary";
    std::size_t query_k = 10;
    query_cmd->add_option("--vectors", query_vectors)->required();
    query_cmd->add_option("--term", query_term)->required();
    query_cmd->add_option("--k", query_k)->capture_default_str()
        ->check(CLI::PositiveNumber);
    query_cmd->add_option("--filter-terms", query_filter,
                          "term list file; load only these vectors (the "
                          "query term must be listed)");
    query_cmd->add_option("--input-format", query_format)
        ->check(CLI::IsMember({"binary", "text"}))->capture_default_str();
    query_cmd->callback([&] {
        TermFilter filter;
        if (!query_filter.empty()) filter = load_term_set(query_filter);
        const EmbeddingSpace space = load_space(query_vectors, query_format, filter);
        const NeighborList list = top_k(space, query_term, query_k);
        for (const auto& nb : list.neighbors) {
            std::printf("%s\t%.6f\n", space.vocab().token(nb.id).c_str(), nb.score);
        }
    });

    // ---- eval ----
    auto* eval_cmd = with_config(app.add_subcommand(
        "eval", "replay extracted relations through one or more spaces"));
    std::vector<std::string> eval_vectors, eval_names;
    std::string eval_relations, eval_relations_format = "auto";
    std::string eval_format = "table", eval_out, eval_sample_terms, eval_allow;
    std::string eval_input_format = "binary";
    EvalOptions eval_options;
    SamplingSpec eval_sampling;
    eval_cmd->add_option("--vectors", eval_vectors, "vector file (repeatable)")
        ->required();
    eval_cmd->add_option("--name", eval_names,
                         "space name per vectors file (default: file stem)");
    eval_cmd->add_option("--relations", eval_relations)->required();
    eval_cmd->add_option("--relations-format", eval_relations_format)
        ->check(CLI::IsMember({"auto", "semeval", "tsv"}))->capture_default_str();
    eval_cmd->add_option("--k", eval_options.k)->capture_default_str()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--format", eval_format)
        ->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
    eval_cmd->add_option("--sample-size", eval_sampling.random_n)
        ->capture_default_str()->check(CLI::PositiveNumber);
    eval_cmd->add_option("--sample-terms", eval_sample_terms,
                         "file with one input term per line (overrides "
                         "--sample-size)");
    eval_cmd->add_option("--allow-terms", eval_allow,
                         "restrict sampling to terms in this file");
    eval_cmd->add_option("--seed", eval_sampling.seed)->capture_default_str();
    eval_cmd->add_flag("--no-symmetric",
                       [&eval_options](std::int64_t) {
                           eval_options.symmetric = false;
                       },
                       "only check tails within top-k of heads");
    eval_cmd->add_flag("--strict-oov",
                       [&eval_options](std::int64_t) {
                           eval_options.strict_oov = true;
                       },
                       "count out-of-vocabulary instances in the denominators");
    eval_cmd->add_option("--input-format", eval_input_format)
        ->check(CLI::IsMember({"binary", "text"}))->capture_default_str();
    eval_cmd->add_option("--out", eval_out, "write the report here instead of stdout");
    eval_cmd->callback([&] {
        if (!eval_names.empty() && eval_names.size() != eval_vectors.size()) {
            throw CLI::ValidationError(
                "--name", "need one --name per --vectors (or none)");
        }
        std::string format = eval_relations_format;
        if (format == "auto") format = sniff_relations_format(eval_relations);
        const std::vector<RelationInstance> relations =
            format == "semeval" ? parse_semeval(eval_relations)
                                : parse_tsv(eval_relations);
        if (!eval_sample_terms.empty()) {
            eval_sampling.explicit_terms = load_term_list(eval_sample_terms);
        }
        if (!eval_allow.empty()) {
            eval_sampling.allow_list = load_term_set(eval_allow);
        }
        std::vector<EvalReport> reports;
        for (std::size_t i = 0; i < eval_vectors.size(); ++i) {
            const std::string name =
                i < eval_names.size()
                    ? eval_names[i]
                    : fs::path(eval_vectors[i]).stem().string();
            const EmbeddingSpace space =
                load_space(eval_vectors[i], eval_input_format);
            reports.push_back(
                evaluate(space, relations, eval_options, eval_sampling, name));
            std::cerr << "evaluated " << name << ": V=" << space.size()
                      << " dim=" << space.dim() << " k=" << eval_options.k
                      << " seed=" << eval_sampling.seed << "\n";
        }
        const ReportFormat rf = eval_format == "csv"    ? ReportFormat::Csv
                                : eval_format == "json" ? ReportFormat::Json
                                                        : ReportFormat::Table;
        const std::string rendered = render_report(reports, rf);
        if (eval_out.empty()) {
            std::cout << rendered;
        } else {
            write_file_atomic(eval_out,
                              [&](std::ostream& out) { out << rendered; });
        }
    });

    // ---- convert ----
    auto* convert_cmd =
        with_config(app.add_subcommand("convert", "convert between binary and text vectors"));
    std::string conv_in, conv_out, conv_from = "binary", conv_to = "text";
    convert_cmd->add_option("--in", conv_in)->required();
    convert_cmd->add_option("--out", conv_out)->required();
    convert_cmd->add_option("--from", conv_from)
        ->check(CLI::IsMember({"binary", "text"}))->capture_default_str();
    convert_cmd->add_option("--to", conv_to)
        ->check(CLI::IsMember({"binary", "text"}))->capture_default_str();
    convert_cmd->callback([&] {
        const EmbeddingSpace space = load_space(conv_in, conv_from);
        write_file_atomic(conv_out, [&](std::ostream& out) {
            if (conv_to == "text") write_text(space, out);
            else write_binary(space, out);
        });
    });

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    args = apply_flat_config(std::move(args));
    std::vector<const char*> argv2;
    argv2.push_back(argc > 0 ? argv[0] : "semspace");
    for (const auto& arg : args) argv2.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv2.size()), argv2.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const semspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
