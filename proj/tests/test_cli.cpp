#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nccumulants/cli.hpp"
#include "nccumulants/table_io.hpp"

using namespace nccum;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = NCCUM_TEST_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("nccum_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path file(const std::string& name, const std::string& contents = {}) const {
        const fs::path p = path_ / name;
        if (!contents.empty()) std::ofstream(p, std::ios::binary) << contents;
        return p;
    }

private:
    fs::path path_;
};

std::size_t count_lines(const std::string& s, bool skip_comments) {
    std::istringstream in(s);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (!(skip_comments && !line.empty() && line[0] == '#')) ++n;
    return n;
}

}  // namespace

TEST(TableIO, WordStrings) {
    const std::vector<std::string> single{"x", "y"}, multi{"x1", "y"};
    EXPECT_EQ(parse_word("xyx", single), (Word{0, 1, 0}));
    EXPECT_EQ(format_word(Word{0, 1, 0}, single), "xyx");
    EXPECT_EQ(parse_word("x1.y.x1", multi), (Word{0, 1, 0}));
    EXPECT_EQ(format_word(Word{0, 1, 0}, multi), "x1.y.x1");
    EXPECT_THROW(parse_word("xz", single), ParseError);
    EXPECT_THROW(parse_word("x1y", multi), ParseError);
    EXPECT_THROW(parse_word("", single), ParseError);
}

TEST(TableIO, RoundTripIsByteIdentical) {
    const std::string text = slurp(fs::path(data_dir) / "semicircle_moments.json");
    const TableDocument d = parse_table_document(text);
    EXPECT_EQ(d.table.kind, CumulantKind::moment);
    EXPECT_EQ(d.table.values.at(Word::power(0, 6)), 5);
    EXPECT_EQ(write_table_document(d), text);
}

TEST(TableIO, Rejections) {
    auto doc = [](const std::string& values, const std::string& extra = "") {
        return R"({"generators":["a"],"kind":"moment","max_degree":2,"values":{)" + values + "}" + extra + "}";
    };
    EXPECT_NO_THROW(parse_table_document(doc(R"("a":"1","aa":"2/3")")));
    EXPECT_NO_THROW(parse_table_document(doc(R"("a":1,"aa":"2/3")")));
    EXPECT_THROW(parse_table_document(doc(R"("a":"1")")), MissingValue);
    EXPECT_THROW(parse_table_document(doc(R"("a":0.5,"aa":"1")")), ParseError);
    EXPECT_THROW(parse_table_document(doc(R"("a":"1","aa":"1","aaa":"1")")), ParseError);
    EXPECT_THROW(parse_table_document(doc(R"("a":"1","aa":"x")")), ParseError);
    EXPECT_THROW(parse_table_document(doc(R"("a":"1","aa":"1")", R"(,"note":1)")), ParseError);
    EXPECT_THROW(parse_table_document("{"), ParseError);
    EXPECT_THROW(parse_table_document(R"({"generators":["a","a"],"kind":"moment","max_degree":1,"values":{}})"),
                 ParseError);
    EXPECT_THROW(parse_table_document(R"({"generators":["a"],"kind":"cubic","max_degree":1,"values":{}})"),
                 ParseError);
}

TEST(Cli, ConvertSemicircleToFree) {
    const auto r = run({"convert", "-i", data_dir + "/semicircle_moments.json", "--from", "moments", "--to", "free"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = parse_table_document(r.out);
    EXPECT_EQ(d.table.kind, CumulantKind::free);
    for (const auto& [w, v] : d.table.values.values()) EXPECT_EQ(v, w.degree() == 2 ? 1 : 0);
}

TEST(Cli, ConvertSemicircleToMonotone) {
    const auto r = run({"convert", "-i", data_dir + "/semicircle_moments.json", "--to", "monotone"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = parse_table_document(r.out);
    EXPECT_EQ(d.table.values.at(Word::power(0, 2)), 1);
    EXPECT_EQ(d.table.values.at(Word::power(0, 4)), Scalar(1, 2));
    // h6 straight from the shuffle logarithm
    const Form h = log_star(Form::character(parse_table_document(slurp(data_dir + "/semicircle_moments.json")).table.values));
    Evaluator ev;
    EXPECT_EQ(d.table.values.at(Word::power(0, 6)), ev(h, Word::power(0, 6)));
}

TEST(Cli, ConvertRoundTripThroughFiles) {
    TempDir tmp;
    const auto mid = tmp.file("free.json"), back = tmp.file("back.json");
    const std::string input = data_dir + "/semicircle_moments.json";
    ASSERT_EQ(run({"convert", "-i", input, "--to", "boolean", "-o", mid.string()}).code, 0);
    ASSERT_EQ(run({"convert", "-i", mid.string(), "--from", "boolean", "--to", "moment", "-o", back.string()}).code, 0);
    EXPECT_EQ(slurp(back), slurp(input));
}

TEST(Cli, ConvertOutputIsDeterministic) {
    const std::vector<std::string> args{"convert", "-i", data_dir + "/semicircle_moments.json", "--to", "boolean"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ConvertTextFormatAndTruncation) {
    const auto r = run({"convert", "-i", data_dir + "/semicircle_moments.json", "--to", "boolean", "--max-degree",
                        "4", "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "# boolean, degree <= 4\na = 0\naa = 1\naaa = 0\naaaa = 1\n");
    EXPECT_EQ(run({"convert", "-i", data_dir + "/semicircle_moments.json", "--to", "free", "--max-degree", "7"}).code,
              2);
}

TEST(Cli, ConvertErrors) {
    TempDir tmp;
    const std::string input = data_dir + "/semicircle_moments.json";
    const auto same = run({"convert", "-i", input, "--from", "free", "--to", "free"});
    EXPECT_EQ(same.code, 1);
    EXPECT_NE(same.err.find("usage:"), std::string::npos);
    EXPECT_EQ(run({"convert", "-i", input, "--to", "moment"}).code, 1);
    EXPECT_EQ(run({"convert", "-i", input, "--from", "boolean", "--to", "free"}).code, 1);
    EXPECT_EQ(run({"convert", "-i", input, "--to", "cubic"}).code, 1);
    EXPECT_EQ(run({"convert", "-i", (fs::path(data_dir) / "absent.json").string(), "--to", "free"}).code, 1);
    EXPECT_EQ(run({"convert", "--to", "free"}).code, 1);
    const auto bad = tmp.file("bad.json", "{ not json");
    EXPECT_EQ(run({"convert", "-i", bad.string(), "--to", "free"}).code, 1);
    const auto partial = tmp.file(
        "partial.json", R"({"generators":["a"],"kind":"moment","max_degree":3,"values":{"a":"0","aa":"1"}})");
    const auto r = run({"convert", "-i", partial.string(), "--to", "free"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("aaa"), std::string::npos);
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--degree", "4", "--generators", "1", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("identities hold"), std::string::npos);
    r = run({"verify", "--degree", "5", "--generators", "2", "--seed", "7", "--format", "structured"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_GE(count_lines(r.out, false), 12u);
    EXPECT_EQ(r.out.find("\tfail\t"), std::string::npos);
    EXPECT_EQ(run({"verify", "--generators", "0"}).code, 1);
    EXPECT_EQ(run({"verify", "--degree", "10", "--generators", "3"}).code, 1);
}

TEST(Cli, Partitions) {
    auto r = run({"partitions", "--n", "3", "--family", "nc"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out, true), 5u);
    EXPECT_NE(r.out.find("# 5 "), std::string::npos);

    r = run({"partitions", "--n", "4", "--family", "irr-nc"});
    EXPECT_EQ(count_lines(r.out, true), 5u);

    r = run({"partitions", "--n", "4", "--family", "nc", "--stats"});
    EXPECT_NE(r.out.find("{1,4}{2,3}  tau!=2  m=1\n"), std::string::npos);

    r = run({"partitions", "--n", "4", "--family", "interval"});
    EXPECT_EQ(count_lines(r.out, true), 8u);

    r = run({"partitions", "--n", "3", "--family", "monotone"});
    EXPECT_EQ(count_lines(r.out, true), 1u + 5u + 6u);

    EXPECT_EQ(run({"partitions", "--n", "11"}).code, 1);
    EXPECT_EQ(run({"partitions", "--n", "3", "--family", "crossing"}).code, 1);
}

TEST(Cli, Usage) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("convert"), std::string::npos);
}
