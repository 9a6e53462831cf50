#include "gbk/fixtures.hpp"

#include <utility>

#include "gbk/errors.hpp"
#include "gbk/io.hpp"

namespace gbk {

namespace {

// Raw definitions; fixture_json canonicalizes them through parse + emit.
const std::vector<std::pair<const char*, const char*>>& catalogue() {
    static const std::vector<std::pair<const char*, const char*>> table = {

        {"regular_FZ2", R"json({
  "version": "1",
  "algebras": {
    "B": {"kind": "twisted_group", "H": "Z2",
          "sigma": {"group": "Z2", "values": {}}}
  },
  "bimodules": {
    "M": {"kind": "regular", "algebra": "B"}
  },
  "task": {"command": "decompose-bimodule", "bimodule": "M"}
})json"},

        {"twisted_regular_FZ2_sgn", R"json({
  "version": "1",
  "algebras": {
    "B": {"kind": "twisted_group", "H": "Z2",
          "sigma": {"group": "Z2", "values": {}}}
  },
  "bimodules": {
    "M": {"kind": "twisted_regular", "algebra": "B", "character": "1"}
  },
  "task": {"command": "decompose-bimodule", "bimodule": "M"}
})json"},

        {"regular_M2", R"json({
  "version": "1",
  "algebras": {
    "B": {"kind": "matrix_twisted", "n": "2", "grading_group": "Z2",
          "H": "Z1", "H_map": ["e"],
          "sigma": {"group": "Z1", "values": {}},
          "tuple": ["e", "1"]}
  },
  "bimodules": {
    "M": {"kind": "regular", "algebra": "B"}
  },
  "task": {"command": "decompose-bimodule", "bimodule": "M"}
})json"},

        {"quaternion_z2z2", R"json({
  "version": "1",
  "algebras": {
    "B": {"kind": "twisted_group", "H": "Z2xZ2",
          "sigma": {"group": "Z2xZ2",
                    "values": {"(0.1,1.0)": "-1", "(0.1,1.1)": "-1",
                               "(1.1,1.0)": "-1", "(1.1,1.1)": "-1"}}}
  },
  "task": {"command": "validate"}
})json"},

        {"ut2_split", R"json({
  "version": "1",
  "algebras": {
    "A": {"kind": "raw", "grading_group": "Z2",
          "basis": ["e11", "e12", "e22"],
          "degrees": ["e", "1", "e"],
          "mult": [["0", "0", "0", "1"], ["0", "1", "1", "1"],
                   ["1", "2", "1", "1"], ["2", "2", "2", "1"]]},
    "B0": {"kind": "matrix_twisted", "n": "1", "grading_group": "Z2",
           "H": "Z1", "H_map": ["e"],
           "sigma": {"group": "Z1", "values": {}}, "tuple": ["e"]},
    "B1": {"kind": "matrix_twisted", "n": "1", "grading_group": "Z2",
           "H": "Z1", "H_map": ["e"],
           "sigma": {"group": "Z1", "values": {}}, "tuple": ["e"]}
  },
  "task": {"command": "radical-report", "ambient": "A",
           "blocks": ["B0", "B1"],
           "embeddings": [[["1", "0", "0"]], [["0", "0", "1"]]],
           "radical": [["0", "1", "0"]]}
})json"},

        {"fz2_central_split", R"json({
  "version": "1",
  "algebras": {
    "A": {"kind": "raw", "grading_group": "Z2",
          "basis": ["e", "u", "z", "zu"],
          "degrees": ["e", "1", "e", "1"],
          "mult": [["0", "0", "0", "1"], ["0", "1", "1", "1"],
                   ["0", "2", "2", "1"], ["0", "3", "3", "1"],
                   ["1", "0", "1", "1"], ["1", "1", "0", "1"],
                   ["1", "2", "3", "1"], ["1", "3", "2", "1"],
                   ["2", "0", "2", "1"], ["2", "1", "3", "1"],
                   ["3", "0", "3", "1"], ["3", "1", "2", "1"]]},
    "B": {"kind": "twisted_group", "H": "Z2",
          "sigma": {"group": "Z2", "values": {}}}
  },
  "task": {"command": "radical-report", "ambient": "A",
           "blocks": ["B"],
           "embeddings": [[["1", "0", "0", "0"], ["0", "1", "0", "0"]]],
           "radical": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]}
})json"},

        {"two_block_split", R"json({
  "version": "1",
  "algebras": {
    "A": {"kind": "raw", "grading_group": "Z2",
          "basis": ["a", "au", "b", "bu"],
          "degrees": ["e", "1", "e", "1"],
          "mult": [["0", "0", "0", "1"], ["0", "1", "1", "1"],
                   ["1", "0", "1", "1"], ["1", "1", "0", "1"],
                   ["2", "2", "2", "1"], ["2", "3", "3", "1"],
                   ["3", "2", "3", "1"], ["3", "3", "2", "1"]]},
    "B0": {"kind": "twisted_group", "H": "Z2",
           "sigma": {"group": "Z2", "values": {}}},
    "B1": {"kind": "twisted_group", "H": "Z2",
           "sigma": {"group": "Z2", "values": {}}}
  },
  "task": {"command": "radical-report", "ambient": "A",
           "blocks": ["B0", "B1"],
           "embeddings": [[["1", "0", "0", "0"], ["0", "1", "0", "0"]],
                          [["0", "0", "1", "0"], ["0", "0", "0", "1"]]],
           "radical": []}
})json"},

        {"peirce_halfunits", R"json({
  "version": "1",
  "algebras": {
    "A": {"kind": "raw", "grading_group": "Z1",
          "basis": ["u"], "degrees": ["e"],
          "mult": [["0", "0", "0", "1"]]}
  },
  "bimodules": {
    "M": {"left": "A", "right": "A", "dim": "4",
          "degrees": ["e", "e", "e", "e"],
          "left_act": [["0", "1", "1", "1"], ["0", "3", "3", "1"]],
          "right_act": [["2", "0", "2", "1"], ["3", "0", "3", "1"]]}
  },
  "task": {"command": "peirce", "bimodule": "M"}
})json"},

        {"grassmann_ut2", R"json({
  "version": "1",
  "algebras": {
    "A": {"kind": "raw", "grading_group": "Z2",
          "basis": ["e11", "e12", "e22"],
          "degrees": ["e", "1", "e"],
          "mult": [["0", "0", "0", "1"], ["0", "1", "1", "1"],
                   ["1", "2", "1", "1"], ["2", "2", "2", "1"]]},
    "B0": {"kind": "matrix_twisted", "n": "1", "grading_group": "Z2",
           "H": "Z1", "H_map": ["e"],
           "sigma": {"group": "Z1", "values": {}}, "tuple": ["e"]},
    "B1": {"kind": "matrix_twisted", "n": "1", "grading_group": "Z2",
           "H": "Z1", "H_map": ["e"],
           "sigma": {"group": "Z1", "values": {}}, "tuple": ["e"]}
  },
  "task": {"command": "check-nilpotency", "ambient": "A",
           "blocks": ["B0", "B1"],
           "embeddings": [[["1", "0", "0"]], [["0", "0", "1"]]],
           "radical": [["0", "1", "0"]]}
})json"},

        {"cocycle_z2_sign", R"json({
  "version": "1",
  "task": {"command": "cocycle-check",
           "cocycle": {"group": "Z2", "values": {"(1,1)": "-1"}}}
})json"},
    };
    return table;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : catalogue()) names.push_back(name);
    return names;
}

std::string fixture_json(const std::string& name) {
    for (const auto& [n, text] : catalogue())
        if (name == n) return emit_spec(parse_spec(text));
    std::string msg = "unknown fixture \"" + name + "\"; catalogue:";
    for (const auto& [n, text] : catalogue()) msg += std::string(" ") + n;
    throw InputError(msg);
}

} // namespace gbk
