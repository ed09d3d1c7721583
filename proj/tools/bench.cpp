// Benchmark comparing the OpenMP kernels against their serial reference
// twins on generated data, checking that both produce identical results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "showprof/graphkit.hpp"
#include "showprof/profile_content.hpp"
#include "showprof/profile_propagation.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/rng.hpp"
#include "showprof/synth.hpp"

using namespace showprof;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

template <typename Fn>
std::pair<double, decltype(std::declval<Fn>()())> timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    return {ms_since(start), std::move(result)};
}

void report_row(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int n = 600;
    int threads = 0;
    std::uint64_t seed = 42;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string { return i + 1 < argc ? argv[++i] : "0"; };
        if (a == "--n") n = std::stoi(next());
        else if (a == "--threads") threads = std::stoi(next());
        else if (a == "--seed") seed = std::stoull(next());
        else {
            std::fprintf(stderr, "usage: %s [--n N] [--threads T] [--seed S]\n", argv[0]);
            return 2;
        }
    }
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("graph nodes: %d, OpenMP max threads: %d\n\n", n, omp_get_max_threads());
    std::printf("%-28s %13s %13s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
                "check");

    SocialGraph g = erdos_renyi(n, static_cast<std::size_t>(n) * 8, seed);

    {
        auto [s_ms, s_res] = timed([&] { return ref::path_stats(g); });
        auto [p_ms, p_res] = timed([&] { return path_stats(g); });
        bool equal = s_res.average_path_length == p_res.average_path_length &&
                     s_res.diameter == p_res.diameter &&
                     s_res.reachable_pairs == p_res.reachable_pairs;
        report_row("all-pairs BFS", s_ms, p_ms, equal);
    }
    {
        auto [s_ms, s_res] = timed([&] { return ref::local_clustering_all(g); });
        auto [p_ms, p_res] = timed([&] { return local_clustering_all(g); });
        report_row("clustering coefficients", s_ms, p_ms, s_res == p_res);
    }

    SyntheticSpec spec;
    spec.seed = seed;
    spec.n_users = 2000;
    spec.n_shows = 8;
    spec.n_microblogs = 40000;
    spec.planted_clusters = 4;
    auto [dataset, gt] = generate_synthetic(spec);
    std::printf("\ndataset: %zu microblogs, %zu users\n", dataset.microblogs.size(),
                dataset.users.size());

    {
        SentimentLexicons lex = SentimentLexicons::builtin();
        auto [s_ms, s_res] = timed([&] { return ref::classify_dataset(dataset, lex); });
        auto [p_ms, p_res] = timed([&] { return classify_dataset(dataset, lex); });
        report_row("sentiment classification", s_ms, p_ms, s_res == p_res);
    }

    auto corpora = retrieve_all_corpora(dataset);
    {
        auto [s_ms, s_res] = timed([&] {
            return ref::propagation_graph(dataset.shows, corpora, dataset, 86400);
        });
        auto [p_ms, p_res] =
            timed([&] { return propagation_graph(dataset.shows, corpora, dataset, 86400); });
        report_row("transition extraction", s_ms, p_ms,
                   s_res.graph.sorted_edges() == p_res.graph.sorted_edges());
    }
    return 0;
}
