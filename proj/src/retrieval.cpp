#include "showprof/retrieval.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "showprof/errors.hpp"
#include "showprof/json.hpp"
#include "showprof/textnorm.hpp"

namespace showprof {

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::actor_match: return "actor_match";
        case Kind::topic_match: return "topic_match:" + detail;
        default: return "expansion:" + detail;
    }
}

Provenance Provenance::parse(const std::string& tag) {
    if (tag == "actor_match") return {Kind::actor_match, ""};
    if (tag.starts_with("topic_match:")) return {Kind::topic_match, tag.substr(12)};
    if (tag.starts_with("expansion:")) return {Kind::expansion, tag.substr(10)};
    throw DataError("unknown provenance tag: " + tag);
}

RetrievalContext::RetrievalContext(const Dataset& dataset) : dataset_(&dataset) {
    const auto& mbs = dataset.microblogs;
    content_norm_.resize(mbs.size());
    const int n = static_cast<int>(mbs.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (int i = 0; i < n; ++i)
        content_norm_[static_cast<std::size_t>(i)] =
            normalize_fold(mbs[static_cast<std::size_t>(i)].content);
    for (std::size_t i = 0; i < mbs.size(); ++i) {
        by_author_[mbs[i].author_id].push_back(i);
        if (mbs[i].root_id) children_[*mbs[i].root_id].push_back(i);
    }
}

std::set<std::string> retrieve_actor_microblogs(const TvShow& show,
                                                const RetrievalContext& ctx) {
    std::set<std::string> out;
    const auto& mbs = ctx.dataset().microblogs;
    for (const auto& [actor, account] : show.actor_accounts) {
        if (!account) continue;
        auto it = ctx.by_author().find(*account);
        if (it == ctx.by_author().end()) continue;
        for (std::size_t idx : it->second) out.insert(mbs[idx].id);
    }
    return out;
}

std::set<std::string> retrieve_actor_microblogs(const TvShow& show, const Dataset& dataset) {
    RetrievalContext ctx(dataset);
    return retrieve_actor_microblogs(show, ctx);
}

std::map<std::string, std::vector<std::string>> retrieve_topic_microblogs(
    const TvShow& show, const RetrievalContext& ctx) {
    if (show.topics.empty())
        throw DataError("retrieve_topic_microblogs: show " + show.show_id + " has no topics");
    std::vector<std::pair<std::string, std::string>> keywords;  // normalized -> original
    for (const auto& t : show.topics) {
        std::string n = normalize_fold(t);
        if (!n.empty()) keywords.emplace_back(std::move(n), t);
    }
    if (keywords.empty())
        throw DataError("retrieve_topic_microblogs: show " + show.show_id +
                        " has no usable topics");
    std::sort(keywords.begin(), keywords.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    const auto& mbs = ctx.dataset().microblogs;
    const int n = static_cast<int>(mbs.size());
    std::vector<std::vector<std::string>> matched(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 256)
    for (int i = 0; i < n; ++i) {
        const std::string& content = ctx.content_norm()[static_cast<std::size_t>(i)];
        for (const auto& [norm, original] : keywords)
            if (contains_norm(content, norm))
                matched[static_cast<std::size_t>(i)].push_back(original);
    }
    std::map<std::string, std::vector<std::string>> out;
    for (std::size_t i = 0; i < mbs.size(); ++i)
        if (!matched[i].empty()) out[mbs[i].id] = std::move(matched[i]);
    return out;
}

std::map<std::string, std::vector<std::string>> retrieve_topic_microblogs(
    const TvShow& show, const Dataset& dataset) {
    RetrievalContext ctx(dataset);
    return retrieve_topic_microblogs(show, ctx);
}

std::set<std::string> expand_seed_set(const std::set<std::string>& seeds,
                                      const RetrievalContext& ctx) {
    const auto& mbs = ctx.dataset().microblogs;
    std::set<std::string> closure = seeds;
    std::deque<std::string> frontier(seeds.begin(), seeds.end());
    while (!frontier.empty()) {
        std::string id = std::move(frontier.front());
        frontier.pop_front();
        auto it = ctx.children().find(id);
        if (it == ctx.children().end()) continue;
        for (std::size_t idx : it->second) {
            const std::string& child = mbs[idx].id;
            if (closure.insert(child).second) frontier.push_back(child);
        }
    }
    return closure;
}

std::set<std::string> expand_seed_set(const std::set<std::string>& seeds,
                                      const Dataset& dataset) {
    RetrievalContext ctx(dataset);
    return expand_seed_set(seeds, ctx);
}

ShowCorpus retrieve_show_corpus(const TvShow& show, const RetrievalContext& ctx) {
    ShowCorpus corpus;
    corpus.show_id = show.show_id;

    auto actor_ids = retrieve_actor_microblogs(show, ctx);
    auto topic_matches = retrieve_topic_microblogs(show, ctx);

    std::set<std::string> seeds = actor_ids;
    for (const auto& [id, _] : topic_matches) seeds.insert(id);
    corpus.members = expand_seed_set(seeds, ctx);

    for (const auto& id : actor_ids)
        corpus.provenance[id].insert({Provenance::Kind::actor_match, ""});
    for (const auto& [id, kws] : topic_matches)
        for (const auto& kw : kws)
            corpus.provenance[id].insert({Provenance::Kind::topic_match, kw});

    // every member reached through a member root carries an expansion tag
    const auto& mbs = ctx.dataset().microblogs;
    for (const auto& m : mbs) {
        if (!m.root_id) continue;
        if (corpus.members.contains(m.id) && corpus.members.contains(*m.root_id))
            corpus.provenance[m.id].insert({Provenance::Kind::expansion, *m.root_id});
    }
    return corpus;
}

ShowCorpus retrieve_show_corpus(const TvShow& show, const Dataset& dataset) {
    RetrievalContext ctx(dataset);
    return retrieve_show_corpus(show, ctx);
}

std::vector<ShowCorpus> retrieve_all_corpora(const Dataset& dataset) {
    RetrievalContext ctx(dataset);
    std::vector<const TvShow*> shows;
    for (const auto& s : dataset.shows) shows.push_back(&s);
    std::sort(shows.begin(), shows.end(),
              [](const TvShow* a, const TvShow* b) { return a->show_id < b->show_id; });
    std::vector<ShowCorpus> out;
    out.reserve(shows.size());
    for (const TvShow* s : shows) out.push_back(retrieve_show_corpus(*s, ctx));
    return out;
}

void write_corpora(const std::vector<ShowCorpus>& corpora, const std::filesystem::path& file) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + file.string());
    std::vector<const ShowCorpus*> sorted;
    for (const auto& c : corpora) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const ShowCorpus* a, const ShowCorpus* b) { return a->show_id < b->show_id; });
    for (const ShowCorpus* c : sorted) {
        for (const auto& id : c->members) {
            Json j;
            j["show_id"] = c->show_id;
            j["microblog_id"] = id;
            Json tags = Json::array();
            if (auto it = c->provenance.find(id); it != c->provenance.end())
                for (const auto& p : it->second) tags.push_back(p.to_string());
            j["provenance"] = tags;
            out << j.dump() << '\n';
        }
    }
}

std::vector<ShowCorpus> read_corpora(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    std::map<std::string, ShowCorpus> by_show;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::parse_error& e) {
            throw DataError(file.filename().string() + ":" + std::to_string(lineno) +
                            ": malformed JSON: " + e.what());
        }
        std::string sid = j.at("show_id").get<std::string>();
        std::string mid = j.at("microblog_id").get<std::string>();
        ShowCorpus& c = by_show[sid];
        c.show_id = sid;
        c.members.insert(mid);
        for (const auto& tag : j.at("provenance"))
            c.provenance[mid].insert(Provenance::parse(tag.get<std::string>()));
    }
    std::vector<ShowCorpus> out;
    for (auto& [_, c] : by_show) out.push_back(std::move(c));
    return out;
}

}  // namespace showprof
