#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "textseg/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "textseg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = textseg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

const std::string kDemo = std::string(TEXTSEG_TEST_DATA) + "/aaabbcccdd.txt";

// Small synthetic corpus, embeddings and generated dataset shared by the
// tests below.
class CliFixture : public ::testing::Test {
protected:
    static fs::path root;

    static void SetUpTestSuite() {
        root = fs::temp_directory_path() / "textseg_cli_test";
        fs::remove_all(root);
        fs::create_directories(root);
        textseg::SyntheticCorpusSpec spec;
        spec.documents = 24;
        spec.topics = 12;
        spec.dim = 16;
        spec.sentences_per_document = 12;
        const auto corpus = textseg::make_synthetic_corpus(spec);
        textseg::write_synthetic_corpus(corpus, root / "corpus", root / "vectors.txt");
        const auto r = run_cli({"gen", (root / "corpus").string(), (root / "data").string(), "--documents", "12",
                                "--seed", "3", "-q"});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    static void TearDownTestSuite() { fs::remove_all(root); }

    static std::string emb() { return (root / "vectors.txt").string(); }
    static std::string data() { return (root / "data").string(); }
};

fs::path CliFixture::root;

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"segment"}).code, 1);
    EXPECT_EQ(run_cli({"segment", kDemo, "--level", "paragraph"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    EXPECT_EQ(run_cli({"presets"}).code, 0);
}

TEST(Cli, CharacterDemo) {
    const auto r = run_cli({"segment", kDemo, "--level", "character", "--representation", "bow", "--scorer",
                            "euclidean", "--splitter", "dp", "-k", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("boundaries: (3,5,8,10)"), std::string::npos) << r.out;
}

TEST(Cli, SegmentJsonOffsetsSliceInput) {
    const auto r = run_cli({"segment", kDemo, "--level", "character", "--representation", "bow", "--scorer",
                            "euclidean", "--splitter", "greedy", "-k", "4", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const std::string text = slurp(kDemo);
    const std::vector<std::string> expected = {"aaa", "bb", "ccc", "dd"};
    ASSERT_EQ(j["segments"].size(), 4u);
    for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t b = j["segments"][s]["byte_begin"], e = j["segments"][s]["byte_end"];
        ASSERT_LE(e, text.size());
        EXPECT_EQ(text.substr(b, e - b), expected[s]);
    }
}

TEST(Cli, HtmlAnnotationEscapes) {
    const auto dir = fs::temp_directory_path() / "textseg_cli_html";
    fs::create_directories(dir);
    write_file(dir / "in.txt", "aa<b\n");
    const auto r = run_cli({"segment", (dir / "in.txt").string(), "--level", "character", "--representation", "bow",
                            "--scorer", "euclidean", "-k", "2", "--annotate", "html", "-o",
                            (dir / "report.txt").string()});
    fs::remove_all(dir);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("&lt;"), std::string::npos);
    EXPECT_EQ(r.out.find("<b"), std::string::npos);
    EXPECT_NE(r.out.find("data-segment=\"1\""), std::string::npos);
}

TEST(Cli, MissingEmbeddingsIsDataError) {
    const auto r = run_cli({"segment", kDemo, "--embeddings", "/nonexistent/vectors.txt", "-k", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("/nonexistent/vectors.txt"), std::string::npos) << r.err;
}

TEST(Cli, EvaluateIdenticalAndMismatched) {
    const auto dir = fs::temp_directory_path() / "textseg_cli_eval";
    fs::create_directories(dir);
    const std::string a = "==========\nx\ny\nz\n==========\nu\nv\nw\n==========\n";
    const std::string b = "==========\nx\ny\n==========\nz\nu\nv\nw\n==========\n";
    const std::string c = "==========\nx\n==========\ny\n==========\n";
    write_file(dir / "a.ref", a);
    write_file(dir / "b.ref", b);
    write_file(dir / "c.ref", c);
    const auto same = run_cli({"evaluate", (dir / "a.ref").string(), (dir / "a.ref").string(), "--json"});
    const auto diff = run_cli({"evaluate", (dir / "a.ref").string(), (dir / "b.ref").string(), "--probe", "1", "--json"});
    const auto bad = run_cli({"evaluate", (dir / "a.ref").string(), (dir / "c.ref").string()});
    fs::remove_all(dir);
    ASSERT_EQ(same.code, 0) << same.err;
    EXPECT_EQ(json::parse(same.out)["pk"], 0.0);
    EXPECT_EQ(json::parse(same.out)["wd"], 0.0);
    ASSERT_EQ(diff.code, 0) << diff.err;
    EXPECT_DOUBLE_EQ(json::parse(diff.out)["pk"].get<double>(), 2.0 / 5.0);
    EXPECT_EQ(json::parse(diff.out)["k_used"], 1);
    EXPECT_EQ(bad.code, 2);
}

TEST_F(CliFixture, GenIsDeterministic) {
    const auto other = root / "data2";
    const auto r = run_cli({"gen", (root / "corpus").string(), other.string(), "--documents", "12", "--seed", "3", "-q"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& entry : fs::directory_iterator(data()))
        EXPECT_EQ(slurp(entry.path()), slurp(other / entry.path().filename())) << entry.path();
    fs::remove_all(other);
}

TEST_F(CliFixture, BenchmarkReproducibleAndConsistent) {
    const std::vector<std::string> base = {"benchmark", data(), "--embeddings", emb(), "--compare", "dp",
                                           "--no-timings", "-q"};
    auto args1 = base, args2 = base;
    args1.insert(args1.end(), {"--summary", (root / "s1.json").string()});
    args2.insert(args2.end(), {"--summary", (root / "s2.json").string(), "-j", "3"});
    const auto r1 = run_cli(args1), r2 = run_cli(args2);
    ASSERT_EQ(r1.code, 0) << r1.err;
    ASSERT_EQ(r2.code, 0) << r2.err;
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_EQ(slurp(root / "s1.json"), slurp(root / "s2.json"));

    std::istringstream lines(r1.out);
    std::string line;
    double sum = 0, sum_between = 0;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        const auto rec = json::parse(line);
        ASSERT_FALSE(rec.contains("error")) << line;
        sum += rec["pk"].get<double>();
        sum_between += rec["compare"]["pk_between"].get<double>();
        ++n;
    }
    EXPECT_EQ(n, 12u);
    const auto summary = json::parse(slurp(root / "s1.json"));
    EXPECT_NEAR(summary["mean_pk"].get<double>(), sum / 12, 1e-12);
    EXPECT_NEAR(summary["compare"]["mean_pk_between"].get<double>(), sum_between / 12, 1e-12);
    EXPECT_EQ(summary["config"]["splitter"], "refine");
    EXPECT_EQ(summary["config"]["scorer"], "cvs");
}

TEST_F(CliFixture, ConfigEnvAndFlagPrecedence) {
    const auto cfg = root / "run.ini";
    write_file(cfg, "splitter = \"dp\"\nembeddings = \"" + emb() + "\"\n");
    const std::string doc = (fs::path(data()) / "0000.ref").string();

    ::setenv("TEXTSEG_EMBEDDINGS", "/nonexistent/env-vectors.txt", 1);
    const auto from_env = run_cli({"segment", doc, "--json"});
    const auto from_cfg = run_cli({"--config", cfg.string(), "segment", doc, "--json"});
    const auto from_flag = run_cli({"--config", cfg.string(), "--splitter", "greedy", "segment", doc, "--json"});
    ::unsetenv("TEXTSEG_EMBEDDINGS");

    EXPECT_EQ(from_env.code, 2);
    EXPECT_NE(from_env.err.find("env-vectors.txt"), std::string::npos);
    ASSERT_EQ(from_cfg.code, 0) << from_cfg.err;
    EXPECT_EQ(json::parse(from_cfg.out)["config"]["splitter"], "dp");
    ASSERT_EQ(from_flag.code, 0) << from_flag.err;
    EXPECT_EQ(json::parse(from_flag.out)["config"]["splitter"], "greedy");
}

TEST_F(CliFixture, PresetsApplyAndFlagsOverride) {
    const std::string doc = (fs::path(data()) / "0000.ref").string();
    const auto preset = run_cli({"--preset", "DP-CVS", "--embeddings", emb(), "segment", doc, "--json"});
    ASSERT_EQ(preset.code, 0) << preset.err;
    EXPECT_EQ(json::parse(preset.out)["config"]["splitter"], "dp");
    const auto over = run_cli({"--preset", "DP-CVS", "--splitter", "refine", "--embeddings", emb(), "segment", doc,
                               "--json"});
    ASSERT_EQ(over.code, 0) << over.err;
    EXPECT_EQ(json::parse(over.out)["config"]["splitter"], "refine");
    EXPECT_EQ(run_cli({"--preset", "nope", "presets"}).code, 1);
}

TEST_F(CliFixture, AuditAndIdf) {
    const auto audit = run_cli({"audit", data(), "--folds", "3", "--json"});
    ASSERT_EQ(audit.code, 0) << audit.err;
    const auto j = json::parse(audit.out);
    EXPECT_GE(j["accuracy"].get<double>(), 0.0);
    EXPECT_EQ(run_cli({"audit", data(), "--folds", "1"}).code, 1);

    const auto idf = run_cli({"idf", (root / "corpus").string()});
    ASSERT_EQ(idf.code, 0) << idf.err;
    EXPECT_EQ(idf.out.rfind("#documents 24", 0), 0u) << idf.out.substr(0, 40);
}

TEST_F(CliFixture, EmptyDatasetFails) {
    const auto empty = root / "empty";
    fs::create_directories(empty);
    EXPECT_EQ(run_cli({"benchmark", empty.string(), "--embeddings", emb()}).code, 2);
    EXPECT_EQ(run_cli({"gen", empty.string(), (root / "out").string()}).code, 2);
}
