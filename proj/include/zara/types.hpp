#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zara/util.hpp"

namespace zara {

inline const std::vector<std::string> kDefaultChannels = {"a_x", "a_y", "a_z",
                                                          "g_x", "g_y", "g_z"};

struct DatasetManifest {
    std::string name;
    std::vector<std::string> placements;
    std::vector<std::string> channels;  // one ordered list, shared by all placements
    std::map<std::string, double> sampling_rate_hz;
    std::vector<std::string> activities;
    std::vector<std::string> subjects;
    std::size_t window_length = 0;

    double rate_for(const std::string& placement) const {
        auto it = sampling_rate_hz.find(placement);
        if (it == sampling_rate_hz.end()) fail("no sampling rate for placement: " + placement);
        return it->second;
    }

    bool has_placement(const std::string& placement) const {
        for (const auto& p : placements)
            if (p == placement) return true;
        return false;
    }

    void validate() const {
        if (name.empty()) fail("manifest: name is empty");
        if (placements.empty()) fail("manifest: no placements");
        if (channels.empty()) fail("manifest: no channels");
        if (window_length < 16) fail("manifest: window_length must be >= 16");
        for (const auto& p : placements) {
            const double rate = rate_for(p);
            if (!(rate > 0.0)) fail("manifest: sampling_rate_hz must be > 0 for " + p);
        }
        auto check_unique = [](const std::vector<std::string>& values, const char* what) {
            std::set<std::string> seen;
            for (const auto& v : values)
                if (!seen.insert(v).second) fail(std::string("manifest: duplicate ") + what + ": " + v);
        };
        check_unique(placements, "placement");
        check_unique(channels, "channel");
        check_unique(activities, "activity");
        check_unique(subjects, "subject");
    }
};

// Channel data keyed placement -> channel -> T samples. std::map keeps the
// in-memory layout independent of input ordering.
using ChannelData = std::map<std::string, std::vector<double>>;

struct Window {
    std::string id;
    std::string subject;
    std::optional<std::string> activity;
    std::map<std::string, ChannelData> data;

    bool has_placement(const std::string& placement) const {
        return data.count(placement) > 0;
    }

    const std::vector<double>& channel(const std::string& placement,
                                       const std::string& name) const {
        auto pit = data.find(placement);
        if (pit == data.end()) fail("window " + id + ": placement missing: " + placement);
        auto cit = pit->second.find(name);
        if (cit == pit->second.end())
            fail("window " + id + ": channel missing: " + placement + "/" + name);
        return cit->second;
    }
};

inline void validate_window(const Window& window, const DatasetManifest& manifest) {
    if (window.id.empty()) fail("window with empty id");
    if (window.data.empty()) fail("window " + window.id + ": no placement data");
    bool subject_known = false;
    for (const auto& s : manifest.subjects) subject_known |= (s == window.subject);
    if (!subject_known) fail("window " + window.id + ": unknown subject: " + window.subject);
    if (window.activity) {
        bool activity_known = false;
        for (const auto& a : manifest.activities) activity_known |= (a == *window.activity);
        if (!activity_known)
            fail("window " + window.id + ": unknown activity: " + *window.activity);
    }
    for (const auto& [placement, channels] : window.data) {
        if (!manifest.has_placement(placement))
            fail("window " + window.id + ": placement not in manifest: " + placement);
        if (channels.size() != manifest.channels.size())
            fail("window " + window.id + ": channel count mismatch for placement " + placement +
                 " (got " + std::to_string(channels.size()) + ", expected " +
                 std::to_string(manifest.channels.size()) + ")");
        for (const auto& name : manifest.channels) {
            auto it = channels.find(name);
            if (it == channels.end())
                fail("window " + window.id + ": channel missing: " + placement + "/" + name);
            if (it->second.size() != manifest.window_length)
                fail("window " + window.id + ": channel " + placement + "/" + name + " has " +
                     std::to_string(it->second.size()) + " samples, expected " +
                     std::to_string(manifest.window_length));
            for (double v : it->second)
                if (!std::isfinite(v))
                    fail("window " + window.id + ": non-finite sample in " + placement + "/" + name);
        }
    }
}

struct SplitPair {
    std::vector<Window> database;   // seen subjects
    std::vector<Window> inference;  // held-out subjects
};

struct QuerySet {
    std::vector<Window> queries;
    std::size_t per_class_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

}  // namespace zara
