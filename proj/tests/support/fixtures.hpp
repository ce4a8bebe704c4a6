#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pbtk/model.hpp"
#include "pbtk/parser.hpp"

namespace pbtk::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open test fixture: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string golden_path() {
    return std::string(PBTK_TEST_DATA_DIR) + "/wieliczka.pb";
}

inline std::string golden_text() { return read_file(golden_path()); }

inline PbInstance golden_instance() {
    ParseResult result = parse(golden_text());
    if (!result.ok()) throw std::runtime_error("golden fixture failed to parse");
    return std::move(*result.instance);
}

/// Minimal valid instance with the given vote type; two projects "a" (cost
/// 10) and "b" (cost 20), no votes. Callers add votes and adjust META.
inline PbInstance two_project_instance(VoteType type) {
    PbInstance in;
    in.meta.description = "fixture";
    in.meta.country = "Testland";
    in.meta.unit = "unit";
    in.meta.instance = "1";
    in.meta.num_projects = 2;
    in.meta.num_votes = 0;
    in.meta.budget = Decimal::from_int(100);
    in.meta.rule = "greedy";
    in.meta.vote_type = type;
    if (type == VoteType::cumulative) {
        in.meta.max_sum_points = Decimal::from_int(10);
        in.meta.mark_explicit("max_sum_points");
    }
    in.meta = resolve_defaults(in.meta);
    in.project_header = {"project_id", "cost"};
    in.vote_header = {"voter_id", "vote"};
    if (type == VoteType::cumulative || type == VoteType::scoring) {
        in.vote_header.push_back("points");
    }
    in.projects.push_back({"a", Decimal::from_int(10), {}, {}, {}, {}});
    in.projects.push_back({"b", Decimal::from_int(20), {}, {}, {}, {}});
    return in;
}

inline void add_vote(PbInstance& in, std::string voter, std::vector<std::string> vote,
                     std::optional<std::vector<Decimal>> points = std::nullopt) {
    VoteRecord v;
    v.voter_id = std::move(voter);
    v.vote = std::move(vote);
    v.points = std::move(points);
    in.votes.push_back(std::move(v));
    in.meta.num_votes = static_cast<Count>(in.votes.size());
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("pbtk_test_" + std::to_string(rd()) + "_" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const { return path_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        std::filesystem::path p = file(name);
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

}  // namespace pbtk::testing
