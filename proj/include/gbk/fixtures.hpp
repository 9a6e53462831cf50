#pragma once

#include <string>
#include <vector>

namespace gbk {

// Names of the built-in example files, in catalogue order.
std::vector<std::string> fixture_names();

// Canonical spec-file text for a catalogue fixture. The text is produced by
// running the stored definition through the strict parser and re-emitting it,
// so every fixture is guaranteed to parse and to be a round-trip fixed point.
// Unknown names raise InputError listing the catalogue.
std::string fixture_json(const std::string& name);

} // namespace gbk
