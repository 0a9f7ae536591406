#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hlc/diagram.hpp"

namespace hlc {

// Letters are signed 1-based generator indices: +i is x_i, -i its inverse.
using Word = std::vector<int>;

struct Peripheral {
    int comp = -1;
    Word m, l;
};

struct Presentation {
    int gens = 0;
    std::vector<Word> rels;
    std::vector<Peripheral> peripheral;

    bool is_valid() const;
};

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word parse_word(const std::string& s);  // space or '.' separated signed indices
std::string word_to_string(const Word& w);

// One generator per arc, one relator per crossing and per trivalent vertex.
// Peripheral pairs are attached for every component without trivalent vertices.
Presentation presentation_from_diagram(const Diagram& d);
std::pair<Word, Word> peripheral_words(const Diagram& d, int comp);

// free rank of the abelianization
int abelianization_rank(const Presentation& p);

// Tietze reductions with a step budget; the generator count is a rank bound
Presentation tietze_simplify(const Presentation& p, int effort = 2000);

std::string to_text(const Presentation& p);
Presentation presentation_from_text(std::istream& in);

}  // namespace hlc
