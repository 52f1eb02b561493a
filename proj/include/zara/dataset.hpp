#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zara/rng.hpp"
#include "zara/types.hpp"
#include "zara/util.hpp"

namespace zara {

using json = nlohmann::json;

inline DatasetManifest manifest_from_json(const json& doc) {
    DatasetManifest manifest;
    manifest.name = doc.at("name").get<std::string>();
    manifest.placements = doc.at("placements").get<std::vector<std::string>>();
    if (doc.contains("channels_per_placement"))
        manifest.channels = doc.at("channels_per_placement").get<std::vector<std::string>>();
    else
        manifest.channels = kDefaultChannels;
    const auto& rate = doc.at("sampling_rate_hz");
    if (rate.is_number()) {
        for (const auto& p : manifest.placements)
            manifest.sampling_rate_hz[p] = rate.get<double>();
    } else {
        for (const auto& [placement, value] : rate.items())
            manifest.sampling_rate_hz[placement] = value.get<double>();
    }
    manifest.activities = doc.at("activities").get<std::vector<std::string>>();
    manifest.subjects = doc.at("subjects").get<std::vector<std::string>>();
    manifest.window_length = doc.at("window_length").get<std::size_t>();
    manifest.validate();
    return manifest;
}

inline json manifest_to_json(const DatasetManifest& manifest) {
    json doc;
    doc["name"] = manifest.name;
    doc["placements"] = manifest.placements;
    doc["channels_per_placement"] = manifest.channels;
    doc["sampling_rate_hz"] = manifest.sampling_rate_hz;
    doc["activities"] = manifest.activities;
    doc["subjects"] = manifest.subjects;
    doc["window_length"] = manifest.window_length;
    return doc;
}

inline DatasetManifest load_manifest(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        fail("manifest " + path + ": " + e.what());
    }
    try {
        return manifest_from_json(doc);
    } catch (const json::exception& e) {
        fail("manifest " + path + ": " + e.what());
    }
}

inline void save_manifest(const std::string& path, const DatasetManifest& manifest) {
    write_text_file(path, manifest_to_json(manifest).dump(2) + "\n");
}

inline Window window_from_json(const json& record, const DatasetManifest& manifest) {
    Window window;
    window.id = record.at("id").get<std::string>();
    window.subject = record.at("subject").get<std::string>();
    if (record.contains("activity") && !record.at("activity").is_null())
        window.activity = record.at("activity").get<std::string>();
    for (const auto& [placement, channels] : record.at("data").items()) {
        ChannelData data;
        for (const auto& [channel, samples] : channels.items()) {
            std::vector<double> row;
            row.reserve(samples.size());
            for (const auto& sample : samples) {
                if (!sample.is_number())
                    fail("window " + window.id + ": non-finite sample in " + placement + "/" +
                         channel);
                row.push_back(sample.get<double>());
            }
            data[channel] = std::move(row);
        }
        window.data[placement] = std::move(data);
    }
    validate_window(window, manifest);
    return window;
}

inline json window_to_json(const Window& window) {
    json record;
    record["id"] = window.id;
    record["subject"] = window.subject;
    if (window.activity)
        record["activity"] = *window.activity;
    else
        record["activity"] = nullptr;
    record["data"] = window.data;
    return record;
}

// One JSON record per line; errors carry the 1-based line number.
inline std::vector<Window> load_windows(const std::string& path,
                                        const DatasetManifest& manifest) {
    std::ifstream in(path);
    if (!in) fail("cannot open data file: " + path);
    std::vector<Window> windows;
    std::set<std::string> ids;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            fail("data line " + std::to_string(line_number) + ": " + e.what());
        }
        try {
            Window window = window_from_json(record, manifest);
            if (!ids.insert(window.id).second)
                fail("duplicate window id: " + window.id);
            windows.push_back(std::move(window));
        } catch (const json::exception& e) {
            fail("data line " + std::to_string(line_number) + ": " + e.what());
        } catch (const std::runtime_error& e) {
            fail("data line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return windows;
}

inline void save_windows(const std::string& path, const std::vector<Window>& windows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write data file: " + path);
    for (const auto& window : windows) out << window_to_json(window).dump() << "\n";
}

inline std::pair<DatasetManifest, std::vector<Window>> load_dataset(
    const std::string& manifest_path, const std::string& data_path) {
    DatasetManifest manifest = load_manifest(manifest_path);
    std::vector<Window> windows = load_windows(data_path, manifest);
    return {std::move(manifest), std::move(windows)};
}

inline SplitPair split_subjects(const std::vector<Window>& windows,
                                const std::set<std::string>& holdout,
                                const DatasetManifest& manifest) {
    if (holdout.empty()) fail("split: holdout subject set is empty");
    for (const auto& subject : holdout) {
        bool known = false;
        for (const auto& s : manifest.subjects) known |= (s == subject);
        if (!known) fail("split: holdout subject not in manifest: " + subject);
    }
    SplitPair split;
    for (const auto& window : windows) {
        if (holdout.count(window.subject))
            split.inference.push_back(window);
        else
            split.database.push_back(window);
    }
    if (split.database.empty()) fail("split: holdout covers all subjects, database side is empty");
    if (split.inference.empty()) fail("split: no windows from holdout subjects, inference side is empty");
    return split;
}

// Per class, windows are drawn round-robin over a seeded shuffle of subject
// order (each subject's list itself seeded-shuffled), so counts stay as even
// across subjects as availability permits and remainders follow the draw.
inline QuerySet sample_balanced(const std::vector<Window>& inference, std::size_t per_class,
                                std::uint64_t seed, const DatasetManifest& manifest) {
    if (per_class < 1) fail("sample: per_class must be >= 1");
    QuerySet result;
    result.per_class_count = per_class;
    result.seed = seed;

    std::map<std::string, std::map<std::string, std::vector<const Window*>>> by_class_subject;
    for (const auto& window : inference) {
        if (!window.activity) continue;
        by_class_subject[*window.activity][window.subject].push_back(&window);
    }

    std::vector<std::string> missing;
    for (const auto& activity : manifest.activities)
        if (!by_class_subject.count(activity)) missing.push_back(activity);
    if (!missing.empty())
        fail("sample: no inference windows for class(es): " + join(missing, ", "));

    Rng rng(seed);
    for (const auto& activity : manifest.activities) {
        auto& per_subject = by_class_subject[activity];
        std::vector<std::string> subjects;
        subjects.reserve(per_subject.size());
        for (const auto& [subject, _] : per_subject) subjects.push_back(subject);
        rng.shuffle(subjects);
        std::map<std::string, std::vector<const Window*>> pools;
        for (const auto& subject : subjects) {
            auto pool = per_subject[subject];
            rng.shuffle(pool);
            pools[subject] = std::move(pool);
        }
        std::size_t available = 0;
        for (const auto& [_, pool] : pools) available += pool.size();
        std::size_t want = per_class;
        if (available < per_class) {
            result.warnings.push_back("class " + activity + " has only " +
                                      std::to_string(available) + " inference windows (requested " +
                                      std::to_string(per_class) + ")");
            want = available;
        }
        std::size_t taken = 0;
        std::vector<std::size_t> cursor(subjects.size(), 0);
        while (taken < want) {
            bool advanced = false;
            for (std::size_t i = 0; i < subjects.size() && taken < want; ++i) {
                auto& pool = pools[subjects[i]];
                if (cursor[i] < pool.size()) {
                    result.queries.push_back(*pool[cursor[i]++]);
                    ++taken;
                    advanced = true;
                }
            }
            if (!advanced) break;
        }
    }
    return result;
}

}  // namespace zara
