// translit: command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include "translit/aligner.hpp"
#include "translit/corpus.hpp"
#include "translit/discover.hpp"
#include "translit/error.hpp"
#include "translit/io.hpp"
#include "translit/model.hpp"
#include "translit/pipeline.hpp"
#include "translit/synthetic.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace translit;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

/// A problem with the arguments that CLI11 cannot see on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string data_dir;

    std::string dir = "cyr2lat";
    std::string corpus;
    std::string table;
    std::string out;
    int x = 2;
    int y = 3;
    std::string dump_samples;

    std::string model;
    std::string word;
    std::string input;

    std::string format = "json";

    int x_min = 0, x_max = 4, y_min = 0, y_max = 4;
    double train_frac = 0.70, val_frac = 0.15, test_frac = 0.15;
    std::uint64_t seed = 42;
    unsigned threads = 0;
    std::string model_out;
    std::string report;

    std::size_t size = 5000;
};

std::uint64_t effective_seed(std::uint64_t flag) {
    const char* env = std::getenv("TRANSLIT_SEED");
    if (!env || !*env) {
        return flag;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (env[used] != '\0') {
            throw std::invalid_argument(env);
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("TRANSLIT_SEED is not an unsigned integer: ") + env);
    }
}

Direction direction_of(const Options& o) {
    try {
        return Direction::parse(o.dir);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

WindowSpec window_of(int x, int y) {
    try {
        return WindowSpec::checked(x, y);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

MappingTable table_of(const Options& o, const Direction& dir) {
    return o.table.empty() ? bundled_mapping_table(dir) : load_mapping_table(o.table, dir);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        io::write_file_atomic(path, content);
    }
}

/// Alignment failures above half the corpus mean the table or the direction is wrong.
void check_failure_rate(std::size_t failures, std::size_t total) {
    if (total > 0 && 2 * failures > total) {
        throw Error(std::to_string(failures) + " of " + std::to_string(total) +
                    " pairs cannot be aligned; wrong --dir or mapping table?");
    }
}

int run_align(const Options& o) {
    const auto dir = direction_of(o);
    const auto table = table_of(o, dir);
    const auto corpus = load_corpus(o.corpus);
    const auto pairs = corpus.pairs(dir);
    const auto result = align_corpus(pairs, table);
    std::string text;
    for (const auto& a : result.alignments) {
        text += format_alignment(a);
    }
    emit(o.out, text);
    if (!result.failures.empty()) {
        std::cerr << result.failures.size() << " unalignable pairs:\n" << format_failure_report(result.failures);
    }
    check_failure_rate(result.failures.size(), pairs.size());
    return 0;
}

int run_discover(const Options& o) {
    const auto dir = direction_of(o);
    const auto table = table_of(o, dir);
    const auto corpus = load_corpus(o.corpus);
    const auto pairs = corpus.pairs(dir);
    const auto failures = discover_unmapped(pairs, table);
    emit(o.out, format_failure_report(failures));
    std::cerr << failures.size() << " of " << pairs.size() << " pairs need table entries\n";
    return 0;
}

int run_train(const Options& o) {
    const auto dir = direction_of(o);
    const auto window = window_of(o.x, o.y);
    const auto table = table_of(o, dir);
    const auto corpus = load_corpus(o.corpus);
    const auto outcome = train_direction(corpus, window, table, dir);
    check_failure_rate(outcome.skipped.size(), corpus.size());
    save_model(outcome.model, o.out);
    if (!o.dump_samples.empty()) {
        const auto samples = corpus_samples(corpus.pairs(dir), window, table);
        io::write_file_atomic(o.dump_samples, format_sample_dump(samples));
    }
    const auto fit = score_samples(outcome.model, corpus_samples(corpus.pairs(dir), window, table));
    std::cout << "trained " << dir.tag() << " x=" << window.x << " y=" << window.y << ": " << corpus.size()
              << " pairs, " << outcome.skipped.size() << " skipped, " << outcome.sample_count << " samples, "
              << outcome.model.tree.nodes().size() << " nodes, depth " << outcome.model.tree.depth()
              << ", training F1 " << fit.f1() << "\n";
    if (!outcome.skipped.empty()) {
        std::cerr << "skipped:\n" << format_failure_report(outcome.skipped);
    }
    return 0;
}

int run_transliterate(const Options& o) {
    if (o.word.empty() == o.input.empty()) {
        throw UsageError("transliterate needs exactly one of --word or --input");
    }
    const auto model = load_model(o.model);
    if (!o.word.empty()) {
        emit(o.out, transliterate_text(model, o.word) + "\n");
    } else {
        emit(o.out, transliterate_text(model, io::read_file(o.input)));
    }
    return 0;
}

int run_evaluate(const Options& o) {
    if (o.format != "json" && o.format != "tsv") {
        throw UsageError("--format must be json or tsv");
    }
    const auto model = load_model(o.model);
    const auto table = table_of(o, model.direction);
    if (!model.table_fingerprint.empty() && model.table_fingerprint != table.fingerprint()) {
        std::cerr << "warning: model was trained with a different mapping table\n";
    }
    const auto report = evaluate(model, load_corpus(o.corpus), table);
    emit(o.out, o.format == "json" ? report.to_json() : report.to_tsv());
    return 0;
}

int run_grid_search(const Options& o) {
    const auto dir = direction_of(o);
    const SplitConfig split_config{o.train_frac, o.val_frac, o.test_frac, effective_seed(o.seed)};
    try {
        split_config.validate();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    window_of(o.x_min, o.y_min);
    window_of(o.x_max, o.y_max);
    const auto table = table_of(o, dir);
    const auto corpus = load_corpus(o.corpus);
    const auto parts = split_corpus(corpus, split_config);
    const auto result = grid_search(parts.train, parts.validation, table, dir, {o.x_min, o.x_max},
                                    {o.y_min, o.y_max}, o.threads);
    emit(o.out, result.to_tsv());
    if (!o.model_out.empty()) {
        save_model(result.best_model, o.model_out);
    }
    const auto test = score_part(result.best_model, parts.test, table);
    if (!o.report.empty()) {
        io::write_file_atomic(o.report, evaluate(result.best_model, parts.test, table).to_json());
    }
    std::cerr << "best x=" << result.best.x << " y=" << result.best.y << " validation F1 " << result.best_f1
              << ", test F1 " << test.f1() << " (" << parts.train.size() << "/" << parts.validation.size() << "/"
              << parts.test.size() << " pairs)\n";
    return 0;
}

int run_gen_corpus(const Options& o) {
    if (o.size == 0) {
        throw UsageError("--size must be positive");
    }
    emit(o.out, format_corpus(gen_corpus(o.size, effective_seed(o.seed))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Uzbek Cyrillic/Latin transliteration with context-window decision trees", "translit"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--data-dir", o.data_dir, "Directory with the bundled tables (default: build-time data/)")
        ->check(CLI::ExistingDirectory);

    const auto add_dir = [&](CLI::App* sub) {
        sub->add_option("--dir", o.dir, "cyr2lat or lat2cyr")->check(CLI::IsMember({"cyr2lat", "lat2cyr"}));
    };
    const auto add_table = [&](CLI::App* sub) {
        sub->add_option("--table", o.table, "Mapping table (default: bundled one for --dir)")
            ->check(CLI::ExistingFile);
    };
    const auto add_corpus = [&](CLI::App* sub) {
        sub->add_option("--corpus", o.corpus, "TSV corpus: cyrillic<TAB>latin")->required()->check(CLI::ExistingFile);
    };

    auto* align = app.add_subcommand("align", "Align every corpus pair with the mapping table");
    add_dir(align);
    add_corpus(align);
    add_table(align);
    align->add_option("--out", o.out, "Alignment TSV (default stdout)");

    auto* discover = app.add_subcommand("discover", "List pairs the mapping table cannot align");
    add_dir(discover);
    add_corpus(discover);
    add_table(discover);
    discover->add_option("--out", o.out, "Report TSV (default stdout)");

    auto* train = app.add_subcommand("train", "Train a model on a whole corpus");
    add_dir(train);
    add_corpus(train);
    add_table(train);
    train->add_option("-x", o.x, "Preceding context characters");
    train->add_option("-y", o.y, "Following context characters");
    train->add_option("--out", o.out, "Model JSON")->required();
    train->add_option("--dump-samples", o.dump_samples, "Also write the deduplicated training samples");

    auto* translit = app.add_subcommand("transliterate", "Convert a word or a text file");
    translit->add_option("--model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
    translit->add_option("--word", o.word, "Text to convert");
    translit->add_option("--input", o.input, "UTF-8 text file to convert")->check(CLI::ExistingFile);
    translit->add_option("--output,--out", o.out, "Output file (default stdout)");

    auto* eval = app.add_subcommand("evaluate", "Score a model on a held-out corpus");
    eval->add_option("--model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
    add_corpus(eval);
    add_table(eval);
    eval->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    eval->add_option("--out", o.out, "Report file (default stdout)");

    auto* grid = app.add_subcommand("grid-search", "Split a corpus and search the context window");
    add_dir(grid);
    add_corpus(grid);
    add_table(grid);
    grid->add_option("--x-min", o.x_min);
    grid->add_option("--x-max", o.x_max);
    grid->add_option("--y-min", o.y_min);
    grid->add_option("--y-max", o.y_max);
    grid->add_option("--train-frac", o.train_frac);
    grid->add_option("--val-frac", o.val_frac);
    grid->add_option("--test-frac", o.test_frac);
    grid->add_option("--seed", o.seed, "Shuffle seed (TRANSLIT_SEED overrides)");
    grid->add_option("--threads", o.threads, "0 = all cores");
    grid->add_option("--out", o.out, "Grid TSV (default stdout)");
    grid->add_option("--model-out", o.model_out, "Save the best model");
    grid->add_option("--report", o.report, "Test-part evaluation JSON for the best model");

    auto* gen = app.add_subcommand("gen-corpus", "Write a rule-generated synthetic corpus");
    gen->add_option("--size", o.size);
    gen->add_option("--seed", o.seed, "Generator seed (TRANSLIT_SEED overrides)");
    gen->add_option("--out", o.out, "Corpus TSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsageError;
    }

    if (!o.data_dir.empty()) {
        ::setenv("TRANSLIT_DATA_DIR", o.data_dir.c_str(), 1);
    }

    try {
        if (align->parsed()) return run_align(o);
        if (discover->parsed()) return run_discover(o);
        if (train->parsed()) return run_train(o);
        if (translit->parsed()) return run_transliterate(o);
        if (eval->parsed()) return run_evaluate(o);
        if (grid->parsed()) return run_grid_search(o);
        if (gen->parsed()) return run_gen_corpus(o);
    } catch (const UsageError& e) {
        std::cerr << "translit: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "translit: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}
