#pragma once

#include <cstdint>
#include <string>

namespace trieig {

// Three-valued verdict. Comparisons of overlapping intervals must yield
// Indeterminate, never a guess.
enum class TriBool : std::uint8_t { False = 0, True = 1, Indeterminate = 2 };

inline bool is_true(TriBool t) { return t == TriBool::True; }
inline bool is_false(TriBool t) { return t == TriBool::False; }
inline bool is_indeterminate(TriBool t) { return t == TriBool::Indeterminate; }

inline const char* to_string(TriBool t) {
    switch (t) {
        case TriBool::False: return "false";
        case TriBool::True: return "true";
        default: return "indeterminate";
    }
}

TriBool tribool_from_string(const std::string& s);

}  // namespace trieig
