// Shared fixtures for the test suites.
#pragma once

#include <string>
#include <vector>

#include "cobhamlab/substitutions.hpp"
#include "cobhamlab/words.hpp"

namespace testutil {

using namespace cobhamlab;

inline Alphabet binary() { return Alphabet::decimal(2); }

inline Word wd(const std::string& digits) {
    std::vector<Letter> letters;
    for (char c : digits) letters.push_back(c - '0');
    return Word(std::move(letters));
}

// 0 -> 01, 1 -> 0
inline Substitution fibonacci() {
    return Substitution(binary(), {wd("01"), wd("0")}, 0);
}

// 0 -> 01, 1 -> 10
inline Substitution thue_morse() {
    return Substitution(binary(), {wd("01"), wd("10")}, 0);
}

// 1 -> 112, 2 -> 12 over names {"1","2"}
inline Substitution phi_squared() {
    Alphabet a({"1", "2"});
    return Substitution(a, {Word{0, 0, 1}, Word{0, 1}}, 0);
}

// The three-letter/two-letter projection pair:
// sigma: a -> ab, b -> c, c -> cb    tau: 0 -> 01, 1 -> 0
inline Substitution sigma_abc() {
    Alphabet a({"a", "b", "c"});
    return Substitution(a, {Word{0, 1}, Word{2}, Word{2, 1}}, 0);
}

// 0 -> 01, 1 -> 02, 2 -> 0; its eigenvalue is the tribonacci constant.
inline Substitution tribonacci() {
    return Substitution(Alphabet::decimal(3), {Word{0, 1}, Word{0, 2}, Word{0}}, 0);
}

}  // namespace testutil
