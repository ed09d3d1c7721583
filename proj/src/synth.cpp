#include "showprof/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "showprof/errors.hpp"
#include "showprof/ingest.hpp"
#include "showprof/rng.hpp"

namespace showprof {

namespace {

constexpr std::int64_t kEpochBase = 1'600'000'000;
constexpr std::int64_t kShowSpacing = 10'000'000;  // between shows' round blocks
constexpr std::int64_t kRoundLength = 500'000;
constexpr std::int64_t kUserGap = 1'728'000;  // min gap between one user's posts
constexpr std::int64_t kTransitionBlockGap = 10 * kUserGap;

const std::vector<std::string> kGenres = {
    "love",    "idol",   "modern",   "war",   "historical", "costume",
    "comedy",  "family", "suspense", "tragedy", "urban",    "fantasy",
    "youth",   "medical", "crime",   "action", "music",     "travel"};

const std::vector<std::string> kFillers = {
    "fill01", "fill02", "fill03", "fill04", "fill05", "fill06", "fill07",
    "fill08", "fill09", "fill10", "fill11", "fill12", "fill13", "fill14",
    "fill15", "fill16", "fill17", "fill18", "fill19", "fill20"};

std::string pad_id(const char* prefix, int index, int width) {
    std::string digits = std::to_string(index);
    std::string out = prefix;
    if (static_cast<int>(digits.size()) < width)
        out.append(width - digits.size(), '0');
    out += digits;
    return out;
}

int digits_for(int n) { return static_cast<int>(std::to_string(n).size()); }

}  // namespace

const std::vector<std::string>& builtin_positive_lexicon() {
    static const std::vector<std::string> lex = {"lovedit", "amazing", "wonderful",
                                                 "fantastic", "brilliant"};
    return lex;
}

const std::vector<std::string>& builtin_negative_lexicon() {
    static const std::vector<std::string> lex = {"boring", "awful", "terrible",
                                                 "dreadful", "letdown"};
    return lex;
}

SyntheticSpec SyntheticSpec::from_json(const Json& j) {
    SyntheticSpec s;
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n_users")) s.n_users = j.at("n_users").get<int>();
    if (j.contains("n_shows")) s.n_shows = j.at("n_shows").get<int>();
    if (j.contains("n_microblogs")) s.n_microblogs = j.at("n_microblogs").get<int>();
    if (j.contains("planted_clusters")) s.planted_clusters = j.at("planted_clusters").get<int>();
    if (j.contains("sentiment_mix")) {
        const auto& m = j.at("sentiment_mix");
        if (!m.is_array() || m.size() != 3)
            throw DataError("sentiment_mix must be [p_pos, p_neg, p_neu]");
        for (int i = 0; i < 3; ++i) s.sentiment_mix[i] = m[i].get<double>();
    }
    if (j.contains("planted_transitions"))
        for (const auto& t : j.at("planted_transitions"))
            s.planted_transitions.push_back({t.at("user_id").get<std::string>(),
                                             t.at("show_from").get<std::string>(),
                                             t.at("show_to").get<std::string>(),
                                             t.at("gap_seconds").get<std::int64_t>()});
    if (j.contains("planted_round_overlaps"))
        for (const auto& r : j.at("planted_round_overlaps"))
            s.planted_round_overlaps.push_back(
                {r.at("show_id").get<std::string>(), r.at("only_first").get<int>(),
                 r.at("only_second").get<int>(), r.at("both").get<int>()});
    if (j.contains("connected_author_fraction"))
        s.connected_author_fraction = j.at("connected_author_fraction").get<double>();
    if (j.contains("fan_follows_per_actor"))
        s.fan_follows_per_actor = j.at("fan_follows_per_actor").get<int>();
    return s;
}

Json SyntheticSpec::to_json() const {
    Json j;
    j["seed"] = seed;
    j["n_users"] = n_users;
    j["n_shows"] = n_shows;
    j["n_microblogs"] = n_microblogs;
    j["planted_clusters"] = planted_clusters;
    j["sentiment_mix"] = sentiment_mix;
    Json ts = Json::array();
    for (const auto& t : planted_transitions)
        ts.push_back({{"user_id", t.user_id},
                      {"show_from", t.show_from},
                      {"show_to", t.show_to},
                      {"gap_seconds", t.gap_seconds}});
    j["planted_transitions"] = ts;
    Json ros = Json::array();
    for (const auto& r : planted_round_overlaps)
        ros.push_back({{"show_id", r.show_id},
                       {"only_first", r.only_first},
                       {"only_second", r.only_second},
                       {"both", r.both}});
    j["planted_round_overlaps"] = ros;
    j["connected_author_fraction"] = connected_author_fraction;
    j["fan_follows_per_actor"] = fan_follows_per_actor;
    return j;
}

Json GroundTruth::to_json() const {
    Json j;
    Json attr = Json::object();
    for (const auto& [mid, shows] : attribution) attr[mid] = shows;
    j["attribution"] = attr;
    Json clusters = Json::object();
    for (const auto& [uid, c] : user_cluster) clusters[uid] = c;
    j["user_cluster"] = clusters;
    Json ts = Json::array();
    for (const auto& t : transitions)
        ts.push_back({{"user_id", t.user_id},
                      {"show_from", t.show_from},
                      {"show_to", t.show_to},
                      {"gap_seconds", t.gap_seconds}});
    j["transitions"] = ts;
    Json sent = Json::object();
    for (const auto& [mid, lbl] : sentiment) sent[mid] = to_string(lbl);
    j["sentiment"] = sent;
    Json ro = Json::object();
    for (const auto& [sid, c] : round_overlap)
        ro[sid] = {{"only_first", c.only_first}, {"only_second", c.only_second}, {"both", c.both}};
    j["round_overlap"] = ro;
    Json topo = Json::object();
    for (const auto& [sid, c] : viewer_topology)
        topo[sid] = {{"isolated", c.isolated}, {"connected", c.connected}};
    j["viewer_topology"] = topo;
    j["noise_gap_floor"] = noise_gap_floor;
    return j;
}

GroundTruth GroundTruth::from_json(const Json& j) {
    GroundTruth gt;
    for (const auto& [mid, shows] : j.at("attribution").items()) {
        std::set<std::string>& s = gt.attribution[mid];
        for (const auto& v : shows) s.insert(v.get<std::string>());
    }
    for (const auto& [uid, c] : j.at("user_cluster").items())
        gt.user_cluster[uid] = c.get<int>();
    for (const auto& t : j.at("transitions"))
        gt.transitions.push_back({t.at("user_id").get<std::string>(),
                                  t.at("show_from").get<std::string>(),
                                  t.at("show_to").get<std::string>(),
                                  t.at("gap_seconds").get<std::int64_t>()});
    for (const auto& [mid, lbl] : j.at("sentiment").items()) {
        std::string s = lbl.get<std::string>();
        gt.sentiment[mid] = s == "positive"   ? SentimentLabel::positive
                            : s == "negative" ? SentimentLabel::negative
                                              : SentimentLabel::non_sentiment;
    }
    for (const auto& [sid, c] : j.at("round_overlap").items())
        gt.round_overlap[sid] = {c.at("only_first").get<int>(), c.at("only_second").get<int>(),
                                 c.at("both").get<int>()};
    for (const auto& [sid, c] : j.at("viewer_topology").items())
        gt.viewer_topology[sid] = {c.at("isolated").get<int>(), c.at("connected").get<int>()};
    gt.noise_gap_floor = j.at("noise_gap_floor").get<std::int64_t>();
    return gt;
}

namespace {

class Generator {
public:
    explicit Generator(const SyntheticSpec& spec)
        : spec_(spec),
          rng_(stage_seed(spec.seed, "synth")),
          user_width_(std::max(5, digits_for(spec.n_users))),
          show_width_(std::max(2, digits_for(spec.n_shows))) {}

    std::pair<Dataset, GroundTruth> run() {
        check_spec();
        make_shows();
        make_users();
        make_actor_posts();
        make_viewer_posts();
        make_cross_posts();
        make_round_overlap_posts();
        make_transition_posts();
        make_noise_posts();
        make_follows();
        finish_topology_truth();
        gt_.transitions = spec_.planted_transitions;
        gt_.noise_gap_floor = kUserGap;
        // canonical record order, same as serialize-then-parse
        std::sort(dataset_.microblogs.begin(), dataset_.microblogs.end(),
                  [](const Microblog& a, const Microblog& b) { return a.id < b.id; });
        std::sort(dataset_.users.begin(), dataset_.users.end(),
                  [](const UserProfile& a, const UserProfile& b) {
                      return a.user_id < b.user_id;
                  });
        std::sort(dataset_.follows.begin(), dataset_.follows.end());
        std::sort(dataset_.shows.begin(), dataset_.shows.end(),
                  [](const TvShow& a, const TvShow& b) { return a.show_id < b.show_id; });
        return {std::move(dataset_), std::move(gt_)};
    }

private:
    std::string user_id(int i) const { return pad_id("u", i, user_width_); }
    std::string show_id(int i) const { return pad_id("s", i, show_width_); }

    void check_spec() {
        if (spec_.n_users <= 0 || spec_.n_shows <= 0 || spec_.n_microblogs <= 0)
            throw DataError("synthetic spec: counts must be positive");
        double mix_sum = 0.0;
        for (double p : spec_.sentiment_mix) {
            if (p < 0.0 || p > 1.0) throw DataError("synthetic spec: sentiment_mix entries must be in [0,1]");
            mix_sum += p;
        }
        if (std::abs(mix_sum - 1.0) > 1e-9)
            throw DataError("synthetic spec: sentiment_mix must sum to 1");
        if (spec_.planted_clusters < 1 || spec_.planted_clusters > spec_.n_users)
            throw DataError("synthetic spec: planted_clusters must be in [1, n_users]");
        if (spec_.planted_clusters > spec_.n_shows)
            throw DataError("synthetic spec: planted_clusters exceeds n_shows");
        if (spec_.connected_author_fraction < 0.0 || spec_.connected_author_fraction > 1.0)
            throw DataError("synthetic spec: connected_author_fraction must be in [0,1]");

        std::unordered_set<std::string> valid_users, valid_shows;
        for (int i = 1; i <= spec_.n_users; ++i) valid_users.insert(user_id(i));
        for (int i = 1; i <= spec_.n_shows; ++i) valid_shows.insert(show_id(i));
        for (const auto& t : spec_.planted_transitions) {
            if (!valid_users.contains(t.user_id))
                throw DataError("synthetic spec: transition user " + t.user_id +
                                " not among generated users");
            if (!valid_shows.contains(t.show_from) || !valid_shows.contains(t.show_to))
                throw DataError("synthetic spec: transition references unknown show");
            if (t.show_from == t.show_to)
                throw DataError("synthetic spec: transition endpoints must differ");
            if (t.gap_seconds < 0 || t.gap_seconds > 5 * kUserGap)
                throw DataError("synthetic spec: transition gap out of range");
            transition_users_.insert(t.user_id);
        }
        for (const auto& r : spec_.planted_round_overlaps) {
            if (!valid_shows.contains(r.show_id))
                throw DataError("synthetic spec: round overlap references unknown show");
            if (r.only_first < 0 || r.only_second < 0 || r.both < 0)
                throw DataError("synthetic spec: round overlap counts must be nonnegative");
        }

        planted_posts_ = 2 * static_cast<int>(spec_.planted_transitions.size());
        for (const auto& r : spec_.planted_round_overlaps)
            planted_posts_ += r.only_first + r.only_second + 2 * r.both;
        if (planted_posts_ > spec_.n_microblogs)
            throw DataError("synthetic spec: planted posts exceed n_microblogs");
    }

    std::vector<std::string> cluster_labels(int c) const {
        if (3 * (c + 1) <= static_cast<int>(kGenres.size()))
            return {kGenres[3 * c], kGenres[3 * c + 1], kGenres[3 * c + 2]};
        std::string base = "genre" + std::to_string(c);
        return {base + "a", base + "b", base + "c"};
    }

    void make_shows() {
        cluster_shows_.resize(spec_.planted_clusters);
        for (int i = 1; i <= spec_.n_shows; ++i) {
            TvShow s;
            s.show_id = show_id(i);
            int cluster = (i - 1) % spec_.planted_clusters;
            cluster_shows_[cluster].push_back(s.show_id);
            s.title = "title_" + s.show_id;
            s.labels = cluster_labels(cluster);
            std::string lead = "actor_" + s.show_id + "_a";
            std::string side = "actor_" + s.show_id + "_b";
            s.actors = {lead, side};
            std::string account = "uact_" + s.show_id;
            s.actor_accounts[lead] = account;
            s.actor_accounts[side] = std::nullopt;
            actor_account_of_[s.show_id] = account;
            s.topics = {s.title, "topic_" + s.show_id + "_a", "topic_" + s.show_id + "_b"};
            std::int64_t base = kEpochBase + static_cast<std::int64_t>(i - 1) * kShowSpacing;
            s.rounds = {{base, base + kRoundLength},
                        {base + 2 * kRoundLength, base + 3 * kRoundLength}};
            rounds_[s.show_id] = s.rounds;
            s.view_count = static_cast<std::uint64_t>((spec_.n_shows - i + 1)) * 1000 +
                           rng_.uniform_u64(500);
            dataset_.shows.push_back(std::move(s));
        }
        viewer_time_base_ =
            kEpochBase + static_cast<std::int64_t>(spec_.n_shows) * kShowSpacing + 1'000'000;
        transition_time_base_ = viewer_time_base_ + 500'000'000'000;  // far past viewer posts
    }

    void make_users() {
        for (int i = 1; i <= spec_.n_users; ++i) {
            UserProfile u;
            u.user_id = user_id(i);
            if (!rng_.bernoulli(0.15)) {
                int age = static_cast<int>(std::lround(rng_.normal(20.0, 4.0)));
                u.age = std::clamp(age, 10, 45);
            }
            if (!rng_.bernoulli(0.10)) {
                // zipf-ish weights over 15 regions
                std::vector<double> w(15);
                for (int r = 0; r < 15; ++r) w[r] = 1.0 / (1.0 + r);
                u.region = pad_id("r", static_cast<int>(rng_.weighted_index(w)) + 1, 2);
            }
            dataset_.users.push_back(std::move(u));
        }
        // dedicated accounts: actor accounts and one VIP per cluster
        for (int i = 1; i <= spec_.n_shows; ++i) {
            UserProfile u;
            u.user_id = actor_account_of_[show_id(i)];
            u.age = 30;
            u.region = "r01";
            dataset_.users.push_back(std::move(u));
        }
        for (int c = 0; c < spec_.planted_clusters; ++c) {
            UserProfile u;
            u.user_id = pad_id("uvip", c + 1, 2);
            u.is_vip = true;
            dataset_.users.push_back(std::move(u));
        }

        // partition the base population: viewers 80%, cross 10%, noise 10%
        std::vector<std::string> base;
        for (int i = 1; i <= spec_.n_users; ++i) {
            std::string id = user_id(i);
            if (!transition_users_.contains(id)) base.push_back(id);
        }
        std::size_t n_cross = base.size() / 10;
        std::size_t n_noise = base.size() / 10;
        std::size_t n_viewer = base.size() - n_cross - n_noise;
        viewers_.assign(base.begin(), base.begin() + n_viewer);
        cross_users_.assign(base.begin() + n_viewer, base.begin() + n_viewer + n_cross);
        noise_users_.assign(base.begin() + n_viewer + n_cross, base.end());
        for (std::size_t i = 0; i < viewers_.size(); ++i)
            user_cluster_plan_[viewers_[i]] = static_cast<int>(i % spec_.planted_clusters);
        for (std::size_t i = 0; i < cross_users_.size(); ++i)
            user_cluster_plan_[cross_users_[i]] = static_cast<int>(i % spec_.planted_clusters);

        // post budget: plants are reserved, actors post 2 each, cross users 2
        // each, noise users 1 each, viewers absorb the remainder
        int rest = spec_.n_microblogs - planted_posts_;
        actor_post_budget_ = std::min(rest, 2 * spec_.n_shows);
        rest -= actor_post_budget_;
        cross_post_budget_ = std::min(rest, 2 * static_cast<int>(cross_users_.size()));
        cross_post_budget_ &= ~1;  // cross users always post pairs
        rest -= cross_post_budget_;
        noise_post_budget_ = std::min(rest / 5, static_cast<int>(noise_users_.size()));
        rest -= noise_post_budget_;
        viewer_post_budget_ = viewers_.empty() ? 0 : rest;
    }

    std::int64_t next_time(const std::string& user, std::int64_t floor_time = 0) {
        auto it = last_time_.find(user);
        std::int64_t t;
        if (it == last_time_.end()) {
            std::int64_t stagger = static_cast<std::int64_t>(last_time_.size()) * 137;
            t = std::max(viewer_time_base_ + stagger, floor_time);
        } else {
            t = std::max(it->second + kUserGap, floor_time);
        }
        last_time_[user] = t;
        return t;
    }

    // Draws a sentiment category from the mix and appends matching tokens.
    SentimentLabel draw_sentiment(std::vector<std::string>& tokens) {
        double x = rng_.uniform_double();
        SentimentLabel label;
        if (x < spec_.sentiment_mix[0])
            label = SentimentLabel::positive;
        else if (x < spec_.sentiment_mix[0] + spec_.sentiment_mix[1])
            label = SentimentLabel::negative;
        else
            label = SentimentLabel::non_sentiment;
        if (label == SentimentLabel::positive) {
            const auto& lex = builtin_positive_lexicon();
            std::size_t n = 1 + rng_.uniform_u64(2);
            for (std::size_t i = 0; i < n; ++i)
                tokens.push_back(lex[rng_.uniform_u64(lex.size())]);
        } else if (label == SentimentLabel::negative) {
            const auto& lex = builtin_negative_lexicon();
            std::size_t n = 1 + rng_.uniform_u64(2);
            for (std::size_t i = 0; i < n; ++i)
                tokens.push_back(lex[rng_.uniform_u64(lex.size())]);
        }
        return label;
    }

    void append_fillers(std::vector<std::string>& tokens) {
        std::size_t n = 1 + rng_.uniform_u64(3);
        for (std::size_t i = 0; i < n; ++i)
            tokens.push_back(kFillers[rng_.uniform_u64(kFillers.size())]);
    }

    std::string join(const std::vector<std::string>& tokens) {
        std::string out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) out += ' ';
            out += tokens[i];
        }
        return out;
    }

    // Creates a microblog, records sentiment truth, and (when attributed)
    // attribution truth plus per-show corpus bookkeeping.
    std::string add_post(const std::string& author, std::int64_t t,
                         const std::vector<std::string>& show_attr, bool with_topic,
                         std::optional<std::string> root = std::nullopt) {
        Microblog m;
        m.id = pad_id("m", ++post_counter_, 8);
        m.author_id = author;
        m.author_name = "user " + author;
        m.author_ip = "10.0." + std::to_string(post_counter_ % 250) + "." +
                      std::to_string(post_counter_ / 250 % 250);
        m.timestamp = t;
        m.root_id = std::move(root);
        std::vector<std::string> tokens;
        if (with_topic)
            for (const auto& sid : show_attr) {
                const TvShow& s = dataset_.shows[static_cast<std::size_t>(
                    std::stoi(sid.substr(1)) - 1)];
                tokens.push_back(s.topics[1 + rng_.uniform_u64(2)]);
            }
        SentimentLabel lbl = draw_sentiment(tokens);
        append_fillers(tokens);
        m.content = join(tokens);
        gt_.sentiment[m.id] = lbl;
        post_time_[m.id] = t;
        for (const auto& sid : show_attr) {
            gt_.attribution[m.id].insert(sid);
            show_posts_[sid].push_back(m.id);
            show_authors_[sid].insert(author);
        }
        dataset_.microblogs.push_back(std::move(m));
        return dataset_.microblogs.back().id;
    }

    void make_actor_posts() {
        int remaining = actor_post_budget_;
        for (int i = 1; i <= spec_.n_shows && remaining > 0; ++i) {
            std::string sid = show_id(i);
            std::string account = actor_account_of_[sid];
            int quota = std::min(remaining, 2);
            for (int q = 0; q < quota; ++q) {
                // first post is a pure actor match (no topic token)
                bool with_topic = q > 0;
                add_post(account, next_time(account), {sid}, with_topic);
                --remaining;
            }
        }
    }

    void make_viewer_posts() {
        if (viewers_.empty()) return;
        int remaining = viewer_post_budget_;
        std::size_t vi = 0;
        while (remaining > 0) {
            const std::string& viewer = viewers_[vi % viewers_.size()];
            int cluster = user_cluster_plan_[viewer];
            const auto& shows = cluster_shows_[cluster];
            const std::string& sid = shows[rng_.uniform_u64(shows.size())];
            auto& pool = show_posts_[sid];
            bool repost = !pool.empty() && rng_.bernoulli(0.3);
            if (repost) {
                const std::string& root = pool[rng_.uniform_u64(pool.size())];
                std::int64_t root_time = post_time_.at(root);
                add_post(viewer, next_time(viewer, root_time + 60), {sid}, false, root);
            } else {
                add_post(viewer, next_time(viewer), {sid}, true);
            }
            gt_.user_cluster[viewer] = cluster;
            --remaining;
            ++vi;
        }
    }

    void make_cross_posts() {
        int remaining = cross_post_budget_;
        for (const auto& user : cross_users_) {
            if (remaining < 2) break;
            int cluster = user_cluster_plan_[user];
            const auto& shows = cluster_shows_[cluster];
            std::string first = shows[rng_.uniform_u64(shows.size())];
            std::string second =
                shows.size() > 1
                    ? shows[(std::find(shows.begin(), shows.end(), first) - shows.begin() + 1) %
                            shows.size()]
                    : first;
            for (const std::string& sid : {first, second}) {
                add_post(user, next_time(user), {sid}, true);
                --remaining;
            }
            gt_.user_cluster[user] = cluster;
        }
    }

    void make_round_overlap_posts() {
        for (const auto& plant : spec_.planted_round_overlaps) {
            const auto& rounds = rounds_[plant.show_id];
            const Round& r1 = rounds[0];
            const Round& r2 = rounds[1];
            int serial = 0;
            auto post_in = [&](const std::string& user, const Round& r, int k) {
                std::int64_t t = r.start + (k % (r.end - r.start));
                add_post(user, t, {plant.show_id}, true);
            };
            for (int k = 0; k < plant.only_first; ++k) {
                std::string u = "uro_" + plant.show_id + "_" + pad_id("", ++serial, 5);
                round_users_.push_back(u);
                post_in(u, r1, k);
            }
            for (int k = 0; k < plant.only_second; ++k) {
                std::string u = "uro_" + plant.show_id + "_" + pad_id("", ++serial, 5);
                round_users_.push_back(u);
                post_in(u, r2, k);
            }
            for (int k = 0; k < plant.both; ++k) {
                std::string u = "uro_" + plant.show_id + "_" + pad_id("", ++serial, 5);
                round_users_.push_back(u);
                post_in(u, r1, k);
                post_in(u, r2, k);
            }
            gt_.round_overlap[plant.show_id] = {plant.only_first, plant.only_second, plant.both};
        }
        for (const auto& u : round_users_) {
            UserProfile p;
            p.user_id = u;
            p.region = "r02";
            dataset_.users.push_back(std::move(p));
        }
    }

    void make_transition_posts() {
        int block = 0;
        for (const auto& t : spec_.planted_transitions) {
            std::int64_t base = transition_time_base_ +
                                static_cast<std::int64_t>(block++) * kTransitionBlockGap;
            std::int64_t t1 = next_time(t.user_id, base);
            add_post(t.user_id, t1, {t.show_from}, true);
            std::int64_t t2 = t1 + t.gap_seconds;
            last_time_[t.user_id] = t2;  // exact planted gap, bypassing the spacing rule
            add_post(t.user_id, t2, {t.show_to}, true);
        }
    }

    void make_noise_posts() {
        int remaining = noise_post_budget_;
        for (const auto& user : noise_users_) {
            if (remaining <= 0) break;
            add_post(user, next_time(user), {}, false);
            --remaining;
        }
    }

    void make_follows() {
        std::set<std::pair<std::string, std::string>> edges;
        auto add_follow = [&](const std::string& a, const std::string& b) {
            if (a != b && edges.insert({a, b}).second)
                dataset_.follows.push_back({a, b});
        };

        // cluster members follow the VIP account of their cluster
        for (const auto& [user, cluster] : user_cluster_plan_)
            add_follow(user, pad_id("uvip", cluster + 1, 2));

        // fans follow actor accounts
        if (spec_.fan_follows_per_actor > 0 && !viewers_.empty()) {
            for (int i = 1; i <= spec_.n_shows; ++i) {
                const std::string& account = actor_account_of_[show_id(i)];
                for (int f = 0; f < spec_.fan_follows_per_actor; ++f)
                    add_follow(viewers_[rng_.uniform_u64(viewers_.size())], account);
            }
        }

        // wire a planted fraction of each show's authors together pairwise
        for (int i = 1; i <= spec_.n_shows; ++i) {
            std::string sid = show_id(i);
            std::vector<std::string> authors(show_authors_[sid].begin(),
                                             show_authors_[sid].end());
            int target = static_cast<int>(
                std::lround(spec_.connected_author_fraction * authors.size()));
            if (target == 1) target = authors.size() >= 2 ? 2 : 0;
            for (int k = 0; k + 1 < target; k += 2) add_follow(authors[k], authors[k + 1]);
            if (target >= 2 && target % 2 == 1) add_follow(authors[target - 1], authors[0]);
        }
    }

    // Computed from the constructed author sets and follow edges alone.
    void finish_topology_truth() {
        std::unordered_map<std::string, std::vector<std::string>> neighbors;
        for (const auto& f : dataset_.follows) {
            neighbors[f.follower].push_back(f.followee);
            neighbors[f.followee].push_back(f.follower);
        }
        for (int i = 1; i <= spec_.n_shows; ++i) {
            std::string sid = show_id(i);
            const auto& authors = show_authors_[sid];
            int isolated = 0;
            for (const auto& a : authors) {
                bool has_edge = false;
                if (auto it = neighbors.find(a); it != neighbors.end())
                    for (const auto& b : it->second)
                        if (authors.contains(b)) {
                            has_edge = true;
                            break;
                        }
                if (!has_edge) ++isolated;
            }
            gt_.viewer_topology[sid] = {isolated, static_cast<int>(authors.size()) - isolated};
        }
    }

    const SyntheticSpec& spec_;
    Rng rng_;
    int user_width_;
    int show_width_;
    Dataset dataset_;
    GroundTruth gt_;

    std::unordered_set<std::string> transition_users_;
    std::vector<std::vector<std::string>> cluster_shows_;
    std::unordered_map<std::string, std::string> actor_account_of_;
    std::unordered_map<std::string, std::vector<Round>> rounds_;
    std::vector<std::string> viewers_, cross_users_, noise_users_, round_users_;
    std::map<std::string, int> user_cluster_plan_;
    std::unordered_map<std::string, std::int64_t> last_time_;
    std::unordered_map<std::string, std::int64_t> post_time_;
    std::unordered_map<std::string, std::vector<std::string>> show_posts_;
    std::unordered_map<std::string, std::set<std::string>> show_authors_;
    int post_counter_ = 0;
    int planted_posts_ = 0;
    int actor_post_budget_ = 0;
    int viewer_post_budget_ = 0;
    int cross_post_budget_ = 0;
    int noise_post_budget_ = 0;
    std::int64_t viewer_time_base_ = 0;
    std::int64_t transition_time_base_ = 0;
};

}  // namespace

std::pair<Dataset, GroundTruth> generate_synthetic(const SyntheticSpec& spec) {
    Generator gen(spec);
    return gen.run();
}

void write_synthetic(const SyntheticSpec& spec, const std::filesystem::path& dir) {
    auto [dataset, gt] = generate_synthetic(spec);
    write_dataset(dataset, dir);
    std::ofstream out(dir / "ground_truth.json", std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + (dir / "ground_truth.json").string());
    out << gt.to_json().dump(2) << '\n';
}

GroundTruth load_ground_truth(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    Json j = Json::parse(in);
    return GroundTruth::from_json(j);
}

SyntheticSpec demo_spec() {
    SyntheticSpec spec;
    spec.seed = 7;
    spec.n_users = 400;
    spec.n_shows = 6;
    spec.n_microblogs = 4000;
    spec.planted_clusters = 3;
    spec.planted_transitions = {{"u00009", "s01", "s02", 3600},
                                {"u00010", "s01", "s02", 7200},
                                {"u00011", "s02", "s03", 1800}};
    spec.planted_round_overlaps = {{"s01", 100, 80, 15}};
    return spec;
}

}  // namespace showprof
