#ifndef NOMA_CONFIG_FILE_HPP
#define NOMA_CONFIG_FILE_HPP

#include <map>
#include <string>

namespace noma {

/// Flat `key = value` config text. Blank lines and lines starting with '#'
/// are ignored; inline comments are not supported. Duplicate keys keep the
/// last value. Throws std::runtime_error on malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text);

std::map<std::string, std::string> load_config_file(const std::string& path);

}  // namespace noma

#endif  // NOMA_CONFIG_FILE_HPP
