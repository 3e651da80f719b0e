// Compares the serial reference kernels against the OpenMP ones on
// synthetic workloads and verifies the outputs stay bit-identical.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trafsig/detect.hpp"
#include "trafsig/mining.hpp"
#include "trafsig/serialize.hpp"

using namespace trafsig;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::vector<transaction> synth_transactions(std::mt19937& rng, std::size_t n_tx,
                                            std::size_t universe, std::size_t basket) {
    // skewed popularity so some itemsets actually co-occur
    std::vector<size_token> pool;
    for (std::size_t i = 0; i < universe; ++i)
        pool.push_back(size_token{i % 2 ? direction::to_device : direction::from_device,
                                  static_cast<std::uint32_t>(100 + i)});
    std::geometric_distribution<std::size_t> popular(0.08);
    std::vector<transaction> txs;
    txs.reserve(n_tx);
    for (std::size_t i = 0; i < n_tx; ++i) {
        std::vector<size_token> items;
        for (std::size_t j = 0; j < basket; ++j) items.push_back(pool[popular(rng) % universe]);
        txs.push_back(to_transaction(items, "tx" + std::to_string(i)));
    }
    return txs;
}

void bench_apriori() {
    std::mt19937 rng(99);
    auto txs = synth_transactions(rng, 8000, 140, 24);
    ratio min_support{1, 16};

    auto t0 = clock_type::now();
    auto serial = apriori_frequent_itemsets(txs, min_support, exec_mode::serial);
    double serial_ms = ms_since(t0);

    auto t1 = clock_type::now();
    auto parallel = apriori_frequent_itemsets(txs, min_support, exec_mode::parallel);
    double parallel_ms = ms_since(t1);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].tokens == parallel[i].tokens &&
                    serial[i].supp.count == parallel[i].supp.count;

    std::printf("apriori   %6zu tx, %3d items, %5zu frequent | serial %8.1f ms | omp %8.1f ms | x%.2f | %s\n",
                txs.size(), 140, serial.size(), serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "bit-identical" : "MISMATCH");
}

void bench_eval() {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> size(100, 400);
    std::uniform_int_distribution<int> dir(0, 1), ev(0, 5);

    std::vector<labeled_trace> dataset;
    for (int i = 0; i < 30000; ++i) {
        labeled_trace t;
        t.event = static_cast<event_class>(ev(rng));
        t.environment = "synthetic";
        t.id = "trace" + std::to_string(i);
        for (int j = 0; j < 40; ++j)
            t.tokens.push_back(
                size_token{dir(rng) ? direction::to_device : direction::from_device, size(rng)});
        dataset.push_back(std::move(t));
    }
    std::vector<signature> sigs;
    for (int i = 0; i < 160; ++i) {
        std::vector<size_token> toks;
        for (int j = 0; j < 4; ++j)
            toks.push_back(
                size_token{dir(rng) ? direction::to_device : direction::from_device, size(rng)});
        sigs.push_back(signature{token_set(toks), static_cast<event_class>(ev(rng)),
                                 strictness::strict});
    }

    auto t0 = clock_type::now();
    auto serial = evaluate_dataset(sigs, dataset, exec_mode::serial);
    double serial_ms = ms_since(t0);

    auto t1 = clock_type::now();
    auto parallel = evaluate_dataset(sigs, dataset, exec_mode::parallel);
    double parallel_ms = ms_since(t1);

    bool identical =
        eval_report_to_json(serial, false) == eval_report_to_json(parallel, false);
    std::printf("eval      %6zu traces, %3zu signatures          | serial %8.1f ms | omp %8.1f ms | x%.2f | %s\n",
                dataset.size(), sigs.size(), serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif
    bench_apriori();
    bench_eval();
    return 0;
}
