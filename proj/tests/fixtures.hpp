#pragma once

// Hand-built dataset fixtures shared by the unit suites.

#include <optional>
#include <string>
#include <vector>

#include "showprof/types.hpp"

namespace fixtures {

using namespace showprof;

inline UserProfile user(std::string id, std::optional<int> age = std::nullopt,
                        std::optional<std::string> region = std::nullopt, bool vip = false) {
    UserProfile u;
    u.user_id = std::move(id);
    u.age = age;
    u.region = std::move(region);
    u.is_vip = vip;
    return u;
}

inline Microblog post(std::string id, std::string author, std::int64_t t, std::string content,
                      std::optional<std::string> root = std::nullopt) {
    Microblog m;
    m.id = std::move(id);
    m.author_id = author;
    m.author_name = "user " + author;
    m.author_ip = "127.0.0.1";
    m.timestamp = t;
    m.root_id = std::move(root);
    m.content = std::move(content);
    return m;
}

inline TvShow show(std::string id, std::vector<std::string> labels,
                   std::vector<std::string> topics,
                   std::vector<std::pair<std::string, std::optional<std::string>>> cast = {},
                   std::vector<Round> rounds = {}) {
    TvShow s;
    s.show_id = id;
    s.title = "title of " + id;
    s.labels = std::move(labels);
    for (auto& [name, account] : cast) {
        s.actors.push_back(name);
        s.actor_accounts[name] = account;
    }
    s.topics = std::move(topics);
    s.rounds = std::move(rounds);
    return s;
}

// Three shows, four users, a few posts and follows; passes validation.
inline Dataset basic_dataset() {
    Dataset d;
    d.users = {user("u01", 20, "r01"), user("u02", 25, "r02"), user("u03"),
               user("u04", 30, "r01", true), user("act01", 35, "r03")};
    d.shows = {
        show("s01", {"Love", "Idol", "Modern"}, {"mafuya", "mengqiyou"},
             {{"Ruby Lin", "act01"}, {"Side Actor", std::nullopt}},
             {{1000, 2000}, {3000, 4000}}),
        show("s02", {"War", "Love", "Historical"}, {"xuebao"}, {}, {{1000, 2000}}),
        show("s03", {"Comedy", "Love", "Urban"}, {"gongyu"}, {}, {}),
    };
    d.shows[0].view_count = 500;
    d.shows[1].view_count = 300;
    d.shows[2].view_count = 400;
    d.microblogs = {
        post("m01", "u01", 1100, "loving Mafuya tonight"),
        post("m02", "u02", 1200, "mafuya and mengqiyou!"),
        post("m03", "u03", 1300, "nothing to see here"),
        post("m04", "act01", 1400, "hello from the set"),
        post("m05", "u01", 3100, "xuebao was fine", "m02"),
    };
    d.follows = {{"u01", "u02"}, {"u02", "u01"}, {"u03", "act01"}, {"u01", "u04"}};
    return d;
}

}  // namespace fixtures
