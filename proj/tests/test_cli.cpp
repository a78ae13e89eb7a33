#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace poscode;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "poscode");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("poscode_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

private:
    fs::path dir_;
};

} // namespace

TEST_F(Cli, MeshDecodesPrintedWindow) {
    const auto f = write("y.txt", "1 0 0 1\n0 0 1 0\n0 1 0 1\n0 1 1 1\n");
    const auto r = run({"decode", "--scheme", "mesh", "--window", f});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x=201 y=9\n");
}

TEST_F(Cli, MeshZeroWindowFailsWithStage) {
    const auto f = write("zero.pbm", "P1\n4 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    const auto r = run({"decode", "--scheme", "mesh", "--window", f});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("locate U"), std::string::npos) << r.err;
}

TEST_F(Cli, VerifyMesh) {
    const auto r = run({"verify", "--scheme", "mesh"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "duplicates=0\n");
}

TEST_F(Cli, VerifyReportsDuplicates) {
    // 2x2 windows of the mesh repeat
    const auto r = run({"verify", "--scheme", "mesh", "--win-h", "2", "--win-w", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("duplicates=", 0), 0u);
    EXPECT_NE(r.out, "duplicates=0\n");
}

TEST_F(Cli, VerifyOtherSchemes) {
    EXPECT_EQ(run({"verify", "--scheme", "rasnik", "--x0", "20", "--y0", "30", "--w", "4", "--h", "4"}).out,
              "duplicates=0\n");
    EXPECT_EQ(run({"verify", "--scheme", "anoto", "--x0", "1000", "--w", "20", "--h", "20"}).out, "duplicates=0\n");
    // whole blocks are distinct; sliding 4x4 windows of raw bits are not
    EXPECT_EQ(run({"verify", "--scheme", "wavelet"}).out, "duplicates=0\n");
    EXPECT_EQ(run({"verify", "--scheme", "wavelet", "--win-h", "4", "--win-w", "4"}).code, 1);
}

TEST_F(Cli, RasnikGenerateThenDecode) {
    const auto out = path("r.pbm");
    auto r = run({"generate", "--scheme", "rasnik", "--x0", "100", "--y0", "500", "--w", "2", "--h", "2", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto g = read_pbm(out);
    ASSERT_EQ(g.rows(), 22u);
    write_pbm(subgrid(g, 3, 4, 11, 9), path("w.pbm"));
    r = run({"decode", "--scheme", "rasnik", "--window", path("w.pbm")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x=904 y=5503 block_x=100 block_y=500\n");
}

TEST_F(Cli, AnotoGenerateThenDecode) {
    const auto out = path("a.pbm");
    auto r = run({"generate", "--scheme", "anoto", "--x0", "5000", "--y0", "7000", "--w", "6", "--h", "6",
                  "--section-x", "12", "--section-y", "34", "--scale", "6", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* ext : {".x.pbm", ".y.pbm", ".hdr", ".dots", ".render.pbm"})
        EXPECT_TRUE(fs::exists(path(std::string("a") + ext))) << ext;

    r = run({"decode", "--scheme", "anoto", "--window", path("a.dots")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x=5000 y=7000 section_x=12 section_y=34\n");

    r = run({"decode", "--scheme", "anoto", "--window", path("a.x.pbm"), "--window-y", path("a.y.pbm")});
    EXPECT_EQ(r.out, "x=5000 y=7000 section_x=12 section_y=34\n");

    std::ifstream hdr(path("a.hdr"));
    EXPECT_EQ(anoto::read_patch_header(hdr), (anoto::PatchHeader{12, 34, 5000, 7000, 6, 6}));
    EXPECT_EQ(anoto::read_rendered_dots(read_pbm(path("a.render.pbm")), 6), [&] {
        std::ifstream d(path("a.dots"));
        return anoto::read_dot_grid(d);
    }());
}

TEST_F(Cli, WaveletGenerateThenDecode) {
    const auto out = path("w.pbm");
    auto r = run({"generate", "--scheme", "wavelet", "--x0", "10", "--y0", "100", "--w", "4", "--h", "3", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_pbm(out).rows(), 12u);
    r = run({"decode", "--scheme", "wavelet", "--window", out, "--block-i", "2", "--block-j", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x=13 y=102\n");
}

TEST_F(Cli, MeshGenerateRegion) {
    const auto out = path("m.pbm");
    auto r = run({"generate", "--scheme", "mesh", "--x0", "200", "--y0", "8", "--w", "4", "--h", "4", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run({"decode", "--scheme", "mesh", "--window", out});
    EXPECT_EQ(r.out, "x=201 y=9\n");
}

TEST_F(Cli, Tables) {
    const auto r = run({"tables"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# secondary 3\n2 5 31\n0 0 0 0 0 1 0 0 0 1 1"), std::string::npos);
    EXPECT_NE(r.out.find("\n58 2 2 1 2\n"), std::string::npos);
    EXPECT_EQ(run({"tables"}).out, r.out);
}

TEST_F(Cli, GenerateIsDeterministic) {
    run({"generate", "--scheme", "rasnik", "--out", path("1.pbm")});
    run({"generate", "--scheme", "rasnik", "--out", path("2.pbm")});
    std::ifstream a(path("1.pbm")), b(path("2.pbm"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_FALSE(sa.str().empty());
    EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"decode", "--scheme", "qr", "--window", "x"}).code, 2);
    EXPECT_EQ(run({"verify", "--scheme", "mesh", "--bogus"}).code, 2);
    EXPECT_EQ(run({"generate", "--scheme", "mesh", "--section-x", "3", "--out", path("m.pbm")}).code, 2);
    EXPECT_EQ(run({"generate", "--scheme", "anoto", "--section-x", "63", "--out", path("m.pbm")}).code, 2);
    const auto r = run({"generate", "--scheme", "rasnik", "--x0", "300", "--out", path("r.pbm")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("usage error: ", 0), 0u);
}

TEST_F(Cli, MissingWindowFile) {
    const auto r = run({"decode", "--scheme", "mesh", "--window", path("nope.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("nope.txt"), std::string::npos);
}
