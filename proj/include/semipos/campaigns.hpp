#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace semipos::campaigns {

struct CampaignSummary {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t passed = 0;
    // Coverage tallies, e.g. which construction case fired.
    std::map<std::string, std::size_t> counters;
    // First few failure descriptions, tagged with the trial index.
    std::vector<std::string> failures;

    bool ok() const { return passed == trials; }
    std::size_t count(const std::string& key) const {
        const auto it = counters.find(key);
        return it == counters.end() ? 0 : it->second;
    }
};

// Known names:
//   np, pos, rect, key1, msp-char, into-msp-sound, into-msp-complete,
//   into-sp-sound, into-sp-complete, onto, column, lp
// Trial k uses seed derive_seed(seed, k), so any failing trial can be
// replayed alone. Throws std::invalid_argument for an unknown name.
CampaignSummary run_campaign(std::string_view name, std::uint64_t seed, std::size_t trials);

const std::vector<std::string>& campaign_names();

}  // namespace semipos::campaigns
