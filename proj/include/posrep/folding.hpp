#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "posrep/posrep.hpp"

namespace posrep {

struct FoldingError : std::runtime_error {
    std::vector<std::string> offenders;
    FoldingError(const std::string& what, std::vector<std::string> off)
        : std::runtime_error(what), offenders(std::move(off)) {}
};

struct FoldingScheme {
    std::string name;  // e.g. "C2:D3"
    TypeTag target, source;
    std::vector<std::vector<int>> orbits;  // target node i -> source nodes (mutually orthogonal)
};

// "B2:A3", "C3:D4", "G2:D4", "F4:E6", or "X:X" for the identity scheme
FoldingScheme folding_scheme(const std::string& name);
// each target letter replaced by its orbit
Word fold_word(const FoldingScheme& s, const Word& target_word);

struct FoldResult {
    Presentation folded;
    Word source_word;
    int quantized = 0;    // coincident integer multiples replaced by [m]_{q_s}
    int q_multiples = 0;  // coefficients that came out as [m]_{q_s}, m >= 2
    int dropped = 0;      // product monomials leaving the folded locus
};
// empty word: canonical word of the target
FoldResult fold(const FoldingScheme& s, const Word& target_word = {});

struct FoldCertificate {
    std::string scheme;
    Word target_word, source_word;
    bool equal = false;
    std::vector<std::string> mismatches;  // generators differing from the direct construction
    int quantized = 0, q_multiples = 0, dropped = 0;
    bool relations_checked = false;
    RelationReport relations;
    bool passed() const { return equal && (!relations_checked || relations.all_hold()); }
};
FoldCertificate fold_certify(const FoldingScheme& s, const Word& target_word = {}, bool relations = true,
                             const CheckOptions& opt = {});

}  // namespace posrep
