#pragma once

#include <map>
#include <string>
#include <vector>

namespace pkn {

/// Engine tuning knobs. Precedence when loading: built-in defaults <
/// config file < PKN_* environment variables < command-line flags.
struct EngineConfig {
    // query / fuzzy
    double few_threshold = 0.2;
    double many_threshold = 0.5;
    double most_threshold = 0.75;
    double alpha = 0.5;               // fuzzy condition acceptance
    double crossfade_fraction = 0.1;  // of the narrower adjacent term's width
    double ceiling = 120.0;           // symbolic upper bound resolution

    // reasoner
    int max_depth = 6;
    double min_certainty = 0.1;
    int candidate_cap = 1000;
    double weight_specialization = 0.8;
    double weight_generalization = 0.5;
    double weight_similarity = 0.8;
    double weight_strength = 0.8;
    double weight_inverse = 0.2;
    double weight_analogy = 0.8;
    std::vector<std::string> functional_descriptors;

    // argumentation
    double undecided_band = 0.1;

    /// Applies `key=value` pairs; unknown keys are reported back.
    /// Recognized keys mirror the field names (e.g. few_threshold=0.2,
    /// functional_descriptors=age,capital).
    std::vector<std::string> apply(const std::map<std::string, std::string>& kv);

    /// Loads a simple key=value config file ('#' comments allowed).
    /// Returns false when the file cannot be read.
    bool load_file(const std::string& path, std::string* error = nullptr);

    /// Applies PKN_* environment variables (PKN_DEPTH, PKN_ALPHA, ...).
    void load_env();
};

}  // namespace pkn
