// End-to-end checks against the built CLI binary (path arrives via
// --cli=<path>, see doctest_main.cpp).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "semspace/embedding_io.hpp"
#include "semspace/report.hpp"
#include "test_util.hpp"

extern std::string g_cli_path;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    REQUIRE_MESSAGE(!g_cli_path.empty(), "pass --cli=<path-to-binary>");
    const std::string command = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("cli: train-sgns output is byte-stable across runs") {
    testutil::TempDir dir;
    const auto corpus = testutil::make_planted_corpus();
    testutil::write_file(dir.file("corpus.txt"),
                         testutil::corpus_to_lines(corpus.documents));
    const std::string base = " train-sgns --corpus " + dir.file("corpus.txt") +
                             " --dim 8 --window 2 --epochs 2 --min-count 1 "
                             "--seed 9 --out ";
    const CliResult first = run_cli(base + dir.file("a.bin"));
    REQUIRE(first.exit_code == 0);
    CHECK(first.out.find("dim=8") != std::string::npos);
    const CliResult second = run_cli(base + dir.file("b.bin"));
    REQUIRE(second.exit_code == 0);
    CHECK(testutil::read_file(dir.file("a.bin")) ==
          testutil::read_file(dir.file("b.bin")));
}

TEST_CASE("cli: train-lsa with an oversized rank exits 2 with a message") {
    testutil::TempDir dir;
    testutil::write_file(dir.file("tiny.txt"), "a b c\na b\n");
    const CliResult result = run_cli(
        "train-lsa --corpus " + dir.file("tiny.txt") +
        " --rank 50 --min-count 1 --out " + dir.file("x.bin"));
    CHECK(result.exit_code == 2);
    CHECK(!std::filesystem::exists(dir.file("x.bin")));
}

TEST_CASE("cli: query prints exact neighbor lines for the toy space") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space(
        semspace::Vocabulary::from_tokens({"a", "b", "c"}),
        {1, 0, 1, 0, 0, 1}, 2, {semspace::ModelKind::Pretrained, "toy"});
    semspace::write_binary(space, dir.file("toy.bin"));
    const CliResult result =
        run_cli("query --vectors " + dir.file("toy.bin") + " --term a --k 2");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "b\t1.000000\nc\t0.000000\n");
}

TEST_CASE("cli: query with k=0 is a usage error") {
    testutil::TempDir dir;
    const CliResult result =
        run_cli("query --vectors nowhere.bin --term a --k 0");
    CHECK(result.exit_code == 1);
}

TEST_CASE("cli: query remembers only filtered vectors") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space = testutil::random_space(50, 4, 21);
    semspace::write_binary(space, dir.file("big.bin"));
    testutil::write_file(dir.file("keep.txt"), "t1\nt2\nt3\n");
    const CliResult result =
        run_cli("query --vectors " + dir.file("big.bin") + " --filter-terms " +
                dir.file("keep.txt") + " --term t1 --k 10");
    CHECK(result.exit_code == 0);
    // only the two other filtered terms can appear
    int lines = 0;
    for (char ch : result.out) lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 2);
    const CliResult missing =
        run_cli("query --vectors " + dir.file("big.bin") + " --filter-terms " +
                dir.file("keep.txt") + " --term t9 --k 2");
    CHECK(missing.exit_code == 2); // t9 exists in the file but not the filter
}

TEST_CASE("cli: eval toy csv matches the library rendering") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space(
        semspace::Vocabulary::from_tokens({"p", "b", "x"}),
        {1.0, 0.0, 0.9, 0.1, 0.0, 1.0}, 2,
        {semspace::ModelKind::Pretrained, "toy"});
    semspace::write_binary(space, dir.file("toy.bin"));
    testutil::write_file(dir.file("rel.tsv"), "p\tb\tContent-Container\n");
    testutil::write_file(dir.file("sample.txt"), "p\n");
    const CliResult result = run_cli(
        "eval --vectors " + dir.file("toy.bin") + " --name toy --relations " +
        dir.file("rel.tsv") + " --k 1 --format csv --sample-terms " +
        dir.file("sample.txt"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("ContentContainer,1,1,1.0,1.0\n") != std::string::npos);
    CHECK(result.out.find("toy,1,1.0,1.0,1.0\n") != std::string::npos);
}

TEST_CASE("cli: eval with a missing relations file writes no output") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space = testutil::random_space(5, 2, 1);
    semspace::write_binary(space, dir.file("s.bin"));
    const CliResult result = run_cli(
        "eval --vectors " + dir.file("s.bin") + " --relations " +
        dir.file("absent.tsv") + " --out " + dir.file("report.json") +
        " --format json");
    CHECK(result.exit_code == 2);
    CHECK(!std::filesystem::exists(dir.file("report.json")));
}

TEST_CASE("cli: eval json output is byte-identical across reruns") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space = testutil::random_space(20, 4, 33);
    semspace::write_binary(space, dir.file("s.bin"));
    std::string tsv;
    for (int i = 0; i < 8; ++i) {
        tsv += "t" + std::to_string(i) + "\tt" + std::to_string(i + 9) +
               "\tMember-Collection\n";
    }
    testutil::write_file(dir.file("rel.tsv"), tsv);
    const std::string cmd = "eval --vectors " + dir.file("s.bin") +
                            " --relations " + dir.file("rel.tsv") +
                            " --k 3 --seed 5 --sample-size 4 --format json --out ";
    REQUIRE(run_cli(cmd + dir.file("r1.json")).exit_code == 0);
    REQUIRE(run_cli(cmd + dir.file("r2.json")).exit_code == 0);
    const std::string r1 = testutil::read_file(dir.file("r1.json"));
    CHECK(r1 == testutil::read_file(dir.file("r2.json")));
    CHECK(!semspace::reports_from_json(r1).empty());
}

TEST_CASE("cli: convert binary to text to binary round-trips") {
    testutil::TempDir dir;
    const semspace::EmbeddingSpace space = testutil::random_space(6, 3, 12);
    semspace::write_binary(space, dir.file("v.bin"));
    REQUIRE(run_cli("convert --in " + dir.file("v.bin") + " --out " +
                    dir.file("v.txt") + " --from binary --to text")
                .exit_code == 0);
    REQUIRE(run_cli("convert --in " + dir.file("v.txt") + " --out " +
                    dir.file("v2.bin") + " --from text --to binary")
                .exit_code == 0);
    CHECK(testutil::read_file(dir.file("v.bin")) ==
          testutil::read_file(dir.file("v2.bin")));
}

TEST_CASE("cli: train-lda on a two-topic corpus recovers the sides") {
    testutil::TempDir dir;
    std::mt19937 gen(66);
    std::uniform_int_distribution<int> word(0, 19);
    std::string lines;
    for (int d = 0; d < 200; ++d) {
        const char side = d % 2 == 0 ? 'u' : 'v';
        for (int i = 0; i < 30; ++i) {
            if (i > 0) lines.push_back(' ');
            lines += side + std::to_string(word(gen));
        }
        lines.push_back('\n');
    }
    testutil::write_file(dir.file("topics.txt"), lines);
    const CliResult result = run_cli(
        "train-lda --corpus " + dir.file("topics.txt") +
        " --topics 2 --alpha 0.1 --beta 0.01 --sweeps 200 --min-count 1 "
        "--seed 11 --out " + dir.file("lda.bin"));
    REQUIRE(result.exit_code == 0);
    const semspace::EmbeddingSpace space =
        semspace::read_binary(dir.file("lda.bin"));
    REQUIRE(space.size() == 40);
    int match_identity = 0, match_swapped = 0;
    for (semspace::TermId w = 0; w < space.size(); ++w) {
        const int side = space.vocab().token(w)[0] == 'u' ? 0 : 1;
        const auto row = space.vector_of(w);
        const int argmax = row[0] >= row[1] ? 0 : 1;
        if (argmax == side) ++match_identity;
        if (argmax == 1 - side) ++match_swapped;
    }
    const double purity =
        static_cast<double>(std::max(match_identity, match_swapped)) / 40.0;
    CHECK(purity >= 0.9);
}

TEST_CASE("cli: eval renders one table row per space") {
    testutil::TempDir dir;
    semspace::write_binary(testutil::random_space(12, 3, 71), dir.file("one.bin"));
    semspace::write_binary(testutil::random_space(12, 3, 72), dir.file("two.bin"));
    std::string tsv;
    for (int i = 0; i < 5; ++i) {
        tsv += "t" + std::to_string(i) + "\tt" + std::to_string(i + 5) +
               "\tComponent-Whole\n";
    }
    testutil::write_file(dir.file("rel.tsv"), tsv);
    const CliResult result = run_cli(
        "eval --vectors " + dir.file("one.bin") + " --vectors " +
        dir.file("two.bin") + " --name First --name Second --relations " +
        dir.file("rel.tsv") + " --k 3 --seed 2");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.rfind("| | RC | SSRIC | R-Prec | R-Rec |\n", 0) == 0);
    CHECK(result.out.find("| First | ") != std::string::npos);
    CHECK(result.out.find("| Second | ") != std::string::npos);
}

TEST_CASE("cli: config file supplies defaults, flags override") {
    testutil::TempDir dir;
    const auto corpus = testutil::make_planted_corpus();
    testutil::write_file(dir.file("corpus.txt"),
                         testutil::corpus_to_lines(corpus.documents));
    testutil::write_file(dir.file("run.cfg"),
                         "dim=6\nwindow=2\nepochs=1\nmin-count=1\nseed=3\n");
    const CliResult result = run_cli(
        "train-sgns --config " + dir.file("run.cfg") + " --corpus " +
        dir.file("corpus.txt") + " --out " + dir.file("cfg.bin"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("dim=6") != std::string::npos);
}
