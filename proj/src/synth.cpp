#include "frl/synth.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "frl/rng.hpp"

namespace frl {

namespace {

constexpr std::array kNameTokens = {
    "MERCY",    "SAINT",   "GENERAL", "MEMORIAL", "REGIONAL", "COMMUNITY", "UNIVERSITY",
    "BAPTIST",  "METHODIST", "PROVIDENCE", "VALLEY", "LAKESIDE", "NORTH",  "SOUTH",
    "EAST",     "WEST",    "CENTRAL", "COUNTY",   "CHILDRENS", "VETERANS", "SACRED",
    "HEART",    "GOOD",    "SAMARITAN", "PARK",   "RIVERSIDE", "HIGHLAND", "UNITY"};

constexpr std::array kStreetTokens = {
    "OAK",   "MAPLE", "CEDAR",  "PINE",   "ELM",    "WASHINGTON", "LINCOLN", "JEFFERSON",
    "MAIN",  "SECOND", "THIRD", "SUNSET", "RIDGE",  "LAKE",       "HILL",    "GRAND"};

constexpr std::array kStreetSuffix = {"ST", "AVE", "RD", "BLVD", "LN", "WAY", "DR"};

struct CityState {
    const char* city;
    const char* state;
};

constexpr std::array<CityState, 24> kCities = {{
    {"EL PASO", "TX"},    {"HOUSTON", "TX"},   {"AUSTIN", "TX"},    {"TAVARES", "FL"},
    {"ORLANDO", "FL"},    {"TAMPA", "FL"},     {"FRESNO", "CA"},    {"OAKLAND", "CA"},
    {"SAN JOSE", "CA"},   {"ALBANY", "NY"},    {"BUFFALO", "NY"},   {"YONKERS", "NY"},
    {"DAYTON", "OH"},     {"AKRON", "OH"},     {"TOLEDO", "OH"},    {"TACOMA", "WA"},
    {"SPOKANE", "WA"},    {"EVERETT", "WA"},   {"PEORIA", "IL"},    {"AURORA", "IL"},
    {"JOLIET", "IL"},     {"MACON", "GA"},     {"ATHENS", "GA"},    {"AUGUSTA", "GA"},
}};

std::string make_name(Rng& rng) {
    std::string s = kNameTokens[rng.below(kNameTokens.size())];
    std::size_t extra = 1 + rng.below(2);
    for (std::size_t i = 0; i < extra; ++i) {
        s += ' ';
        s += kNameTokens[rng.below(kNameTokens.size())];
    }
    s += " HOSPITAL";
    return s;
}

std::string make_address(Rng& rng) {
    std::string s = std::to_string(1 + rng.below(9999));
    s += ' ';
    s += kStreetTokens[rng.below(kStreetTokens.size())];
    s += ' ';
    s += kStreetSuffix[rng.below(kStreetSuffix.size())];
    return s;
}

void swap_adjacent(std::string& s, Rng& rng) {
    if (s.size() < 2) return;
    std::size_t i = rng.below(s.size() - 1);
    std::swap(s[i], s[i + 1]);
}

void delete_char(std::string& s, Rng& rng) {
    if (s.empty()) return;
    s.erase(rng.below(s.size()), 1);
}

void drop_token(std::string& s, Rng& rng) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    if (tokens.size() < 2) return;
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(rng.below(tokens.size())));
    s.clear();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ' ';
        s += tokens[i];
    }
}

void scramble(std::string& s, Rng& rng) {
    for (std::size_t i = s.size(); i > 1; --i) {
        std::swap(s[i - 1], s[rng.below(i)]);
    }
}

void corrupt_field(std::string& s, double rate, Rng& rng) {
    if (rate <= 0.0 || !rng.chance(rate)) return;
    if (rate >= 0.999) {
        scramble(s, rng);
        return;
    }
    std::size_t ops = 1 + rng.below(1 + static_cast<std::size_t>(rate * 3.0));
    for (std::size_t i = 0; i < ops; ++i) {
        switch (rng.below(3)) {
            case 0: swap_adjacent(s, rng); break;
            case 1: delete_char(s, rng); break;
            default: drop_token(s, rng); break;
        }
    }
}

std::vector<std::string> fresh_record(Rng& rng, const std::string& id) {
    const CityState& cs = kCities[rng.below(kCities.size())];
    return {id, make_name(rng), make_address(rng), cs.city, cs.state};
}

std::string left_tag(std::size_t i) { return "L" + std::to_string(i + 1); }
std::string right_tag(std::size_t i) { return "R" + std::to_string(i + 1); }

}  // namespace

SyntheticData generate_synthetic(std::size_t n_left, std::size_t n_right, double corruption_rate,
                                 std::uint64_t seed) {
    if (!(corruption_rate >= 0.0 && corruption_rate <= 1.0)) {
        throw std::invalid_argument("corruption rate must lie in [0, 1]");
    }
    Rng rng(seed);
    SyntheticData data;
    data.left.columns = {"id", "name", "address", "city", "state"};
    data.right.columns = data.left.columns;

    for (std::size_t i = 0; i < n_left; ++i) {
        data.left.rows.push_back(fresh_record(rng, left_tag(i)));
    }

    // Copy a distinct subset of left rows, corrupt the link fields, and pad
    // with fresh records when the right side is larger.
    std::size_t copies = std::min(n_left, n_right);
    std::vector<std::uint32_t> pool(n_left);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t i = pool.size(); i > 1; --i) {
        std::swap(pool[i - 1], pool[rng.below(i)]);
    }

    for (std::size_t j = 0; j < n_right; ++j) {
        if (j < copies) {
            std::uint32_t src = pool[j];
            std::vector<std::string> row = data.left.rows[src];
            row[0] = right_tag(j);
            corrupt_field(row[1], corruption_rate, rng);
            corrupt_field(row[2], corruption_rate, rng);
            corrupt_field(row[3], corruption_rate, rng);
            data.right.rows.push_back(std::move(row));
            data.truth.push_back({src, static_cast<std::uint32_t>(j)});
        } else {
            data.right.rows.push_back(fresh_record(rng, right_tag(j)));
        }
    }
    return data;
}

void write_synthetic(const SyntheticData& data, const std::string& out_dir) {
    data.left.to_csv_file(out_dir + "/left.csv");
    data.right.to_csv_file(out_dir + "/right.csv");
    Dataset truth;
    truth.columns = {"left_id", "right_id"};
    for (const SyntheticPair& p : data.truth) {
        truth.rows.push_back({data.left.rows[p.left_id][0], data.right.rows[p.right_id][0]});
    }
    truth.to_csv_file(out_dir + "/truth.csv");
}

}  // namespace frl
