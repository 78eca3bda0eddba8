#include "translit/io.hpp"
#include "translit/model.hpp"
#include "translit/scripts.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace translit;

namespace {

struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / ("translit_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

/// Runs the CLI with `args`; stdout lands in `out` when given.
int run(const std::string& args, const std::string& out = "", const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" TRANSLIT_CLI "' " + args;
    cmd += out.empty() ? " >/dev/null" : " >'" + out + "'";
    cmd += " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string lexicon() { return (data_dir() / "lexicon.tsv").string(); }

}  // namespace

TEST_CASE("train then transliterate") {
    Scratch s;
    REQUIRE(run("train --dir cyr2lat -x 2 -y 3 --corpus '" + lexicon() + "' --out '" + s / "m.json" + "'") == 0);
    CHECK(load_model(s / "m.json").window == WindowSpec{2, 3});
    REQUIRE(run("transliterate --model '" + s / "m.json" + "' --word цирк", s / "out.txt") == 0);
    CHECK(io::read_file(s / "out.txt") == "sirk\n");

    io::write_file_atomic(s / "in.txt", "Бугун ОШ еймиз.\nЦирк 2020\n");
    REQUIRE(run("transliterate --model '" + s / "m.json" + "' --input '" + s / "in.txt" + "' --output '" +
                s / "t.txt" + "'") == 0);
    CHECK(io::read_file(s / "t.txt").substr(0, 8) == "Bugun OS");
    CHECK(io::read_file(s / "t.txt").find("Sirk 2020\n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    Scratch s;
    CHECK(run("train") == 1);
    CHECK(run("train --out '" + s / "m.json" + "'") == 1);
    CHECK(run("train --corpus '" + s / "missing.tsv" + "' --out '" + s / "m.json" + "'") == 1);
    CHECK(run("train --corpus '" + lexicon() + "' --out '" + s / "m.json" + "' --bogus") == 1);
    CHECK(run("train --corpus '" + lexicon() + "' --out '" + s / "m.json" + "' -x 11") == 1);
    CHECK(run("train --dir cyr2cyr --corpus '" + lexicon() + "' --out '" + s / "m.json" + "'") == 1);
    CHECK(run("") == 1);
    CHECK_FALSE(fs::exists(s / "m.json"));
    CHECK(run("--help") == 0);
}

TEST_CASE("data errors exit 2") {
    Scratch s;
    io::write_file_atomic(s / "bad.tsv", "бола\tbola\nкитоб kitob\n");
    CHECK(run("train --corpus '" + s / "bad.tsv" + "' --out '" + s / "m.json" + "'") == 2);
    CHECK(run("align --corpus '" + s / "bad.tsv" + "'") == 2);

    // a Latin/Cyrillic swap leaves almost nothing alignable
    io::write_file_atomic(s / "swapped.tsv", "bola\tбола\nkitob\tкитоб\n");
    CHECK(run("align --corpus '" + s / "swapped.tsv" + "'") == 2);

    io::write_file_atomic(s / "m.json", "{\"format_version\":1,");
    CHECK(run("transliterate --model '" + s / "m.json" + "' --word цирк") == 2);
    CHECK(run("evaluate --model '" + s / "m.json" + "' --corpus '" + lexicon() + "'") == 2);
}

TEST_CASE("align, discover and evaluate") {
    Scratch s;
    REQUIRE(run("align --dir lat2cyr --corpus '" + lexicon() + "' --out '" + s / "a.tsv" + "'") == 0);
    CHECK(io::read_file(s / "a.tsv").find("qo'zichoq\tқўзичоқ\tқ|ў|∅|з|и|∅|ч|о|қ\n") != std::string::npos);

    REQUIRE(run("discover --corpus '" + lexicon() + "'", s / "d.tsv") == 0);
    CHECK(io::read_file(s / "d.tsv").empty());

    REQUIRE(run("train --dir lat2cyr -x 4 -y 3 --corpus '" + lexicon() + "' --out '" + s / "m.json" + "'") == 0);
    REQUIRE(run("evaluate --model '" + s / "m.json" + "' --corpus '" + lexicon() + "' --format tsv --out '" +
                s / "r.tsv" + "'") == 0);
    CHECK(io::read_file(s / "r.tsv").rfind("char_precision\t", 0) == 0);
    REQUIRE(run("evaluate --model '" + s / "m.json" + "' --corpus '" + lexicon() + "'", s / "r.json") == 0);
    CHECK(io::read_file(s / "r.json").find("\"word_accuracy\"") != std::string::npos);
    CHECK(run("evaluate --model '" + s / "m.json" + "' --corpus '" + lexicon() + "' --format xml") == 1);
}

TEST_CASE("gen-corpus and grid-search are deterministic") {
    Scratch s;
    REQUIRE(run("gen-corpus --size 400 --seed 3 --out '" + s / "a.tsv" + "'") == 0);
    REQUIRE(run("gen-corpus --size 400 --seed 3 --out '" + s / "b.tsv" + "'") == 0);
    CHECK(io::read_file(s / "a.tsv") == io::read_file(s / "b.tsv"));
    REQUIRE(run("gen-corpus --size 400 --seed 4 --out '" + s / "c.tsv" + "'", "", "TRANSLIT_SEED=3") == 0);
    CHECK(io::read_file(s / "c.tsv") == io::read_file(s / "a.tsv"));
    CHECK(run("gen-corpus --size 0") == 1);

    const std::string grid = "grid-search --corpus '" + s / "a.tsv" + "' --x-max 2 --y-max 2 --threads 2";
    REQUIRE(run(grid + " --out '" + s / "g1.tsv" + "' --model-out '" + s / "m1.json" + "' --report '" +
                s / "r1.json" + "'") == 0);
    REQUIRE(run(grid + " --out '" + s / "g2.tsv" + "' --model-out '" + s / "m2.json" + "'") == 0);
    CHECK(io::read_file(s / "g1.tsv") == io::read_file(s / "g2.tsv"));
    CHECK(io::read_file(s / "m1.json") == io::read_file(s / "m2.json"));
    CHECK(io::read_file(s / "g1.tsv").rfind("x\ty\tvalidation_f1\n", 0) == 0);
    CHECK(fs::exists(s / "r1.json"));
    CHECK(run(grid + " --train-frac 0.9") == 1);
    CHECK(run(grid, "", "TRANSLIT_SEED=abc") == 1);

    // no temporary files left behind
    for (const auto& entry : fs::directory_iterator(s.dir)) {
        CHECK(entry.path().string().find(".tmp.") == std::string::npos);
    }
}
