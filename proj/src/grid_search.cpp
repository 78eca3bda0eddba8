#include "translit/pipeline.hpp"

#include "translit/error.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace translit {

namespace {

__extension__ typedef unsigned __int128 UInt128;

std::vector<Sample> samples_at(std::span<const AlignedPair> alignments, WindowSpec window) {
    std::vector<Sample> samples;
    for (const auto& a : alignments) {
        auto s = extract_samples(a, window);
        samples.insert(samples.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    }
    return dedup_samples(samples);
}

void check_range(const GridRange& r, const char* axis) {
    if (r.min < 0 || r.max > WindowSpec::kMaxContext || r.min > r.max) {
        throw InvalidArgument(std::string("grid range for ") + axis + " must satisfy 0 <= min <= max <= " +
                              std::to_string(WindowSpec::kMaxContext));
    }
}

/// a beats b: higher F1, then smaller x + y, then smaller x. F1 is compared
/// as the exact fraction correct / total.
bool better(const CharCounts& a, WindowSpec wa, const CharCounts& b, WindowSpec wb) {
    const auto lhs = static_cast<UInt128>(a.correct) * b.total;
    const auto rhs = static_cast<UInt128>(b.correct) * a.total;
    if (lhs != rhs) {
        return lhs > rhs;
    }
    if (wa.x + wa.y != wb.x + wb.y) {
        return wa.x + wa.y < wb.x + wb.y;
    }
    return wa.x < wb.x;
}

}  // namespace

GridResult grid_search(const Corpus& train, const Corpus& validation, const MappingTable& table,
                       const Direction& direction, GridRange xs, GridRange ys, unsigned threads) {
    check_range(xs, "x");
    check_range(ys, "y");
    if (table.direction() != direction) {
        throw DirectionMismatch("mapping table is " + table.direction().tag() + ", searching " + direction.tag());
    }

    const auto train_pairs = train.pairs(direction);
    const CorpusAlignment train_aligned = align_corpus(train_pairs, table);
    if (train_aligned.alignments.empty()) {
        throw TrainingError(TrainingError::Kind::AllPairsUnalignable, "no alignable training pairs");
    }
    const auto val_pairs = validation.pairs(direction);
    const CorpusAlignment val_aligned = align_corpus(val_pairs, table);
    std::size_t val_unaligned_chars = 0;
    for (const auto& f : val_aligned.failures) {
        val_unaligned_chars += unicode::decode(f.pair.source).size();
    }

    std::vector<WindowSpec> windows;
    for (int x = xs.min; x <= xs.max; ++x) {
        for (int y = ys.min; y <= ys.max; ++y) {
            windows.push_back({x, y});
        }
    }
    std::vector<CharCounts> scores(windows.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < windows.size(); i = next++) {
            try {
                const auto samples = samples_at(train_aligned.alignments, windows[i]);
                const TranslitModel model = translit::train(samples, windows[i], direction, table.fingerprint());
                CharCounts c = score_samples(model, samples_at(val_aligned.alignments, windows[i]));
                c.total += val_unaligned_chars;
                scores[i] = c;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, windows.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::size_t best = 0;
    std::vector<GridCell> cells;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        cells.push_back({windows[i], scores[i].f1()});
        if (better(scores[i], windows[i], scores[best], windows[best])) {
            best = i;
        }
    }
    // Training is deterministic, so refitting the winner reproduces its cell model.
    TranslitModel best_model = translit::train(samples_at(train_aligned.alignments, windows[best]), windows[best],
                                               direction, table.fingerprint());
    return GridResult{windows[best], scores[best].f1(), std::move(cells), std::move(best_model)};
}

std::string GridResult::to_tsv() const {
    std::ostringstream out;
    out.precision(17);
    out << "x\ty\tvalidation_f1\n";
    for (const auto& c : cells) {
        out << c.window.x << '\t' << c.window.y << '\t' << c.validation_f1 << '\n';
    }
    return out.str();
}

}  // namespace translit
