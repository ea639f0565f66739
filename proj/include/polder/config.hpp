#pragma once

// key=value record parsing shared by material files, atom files and the
// CLI --config option. Lines starting with '#' and blank lines are skipped.

#include <string>
#include <utility>
#include <vector>

namespace polder {

std::vector<std::pair<std::string, std::string>> parse_key_values(
    const std::string& text);

double parse_number(const std::string& value, const std::string& key);

std::vector<double> parse_number_list(const std::string& value,
                                      const std::string& key);

}  // namespace polder
