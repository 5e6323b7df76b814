#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

// Standard Young tableau: rows weakly decrease in length, entries 1..n each
// used once, rows and columns strictly increase.
class StandardTableau {
public:
    StandardTableau() = default;

    static StandardTableau from_rows(std::vector<std::vector<int>> rows);

    // Rows separated by '/', entries by spaces: "1 2 5 / 3 4 / 6 8 / 7".
    static StandardTableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n() const { return n_; }
    bool empty() const { return rows_.empty(); }
    Partition shape() const;

    int row_of(int entry) const;    // 0-based
    int column_of(int entry) const; // 1-based

    std::string str() const; // parse format

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int n_ = 0;
};

// All standard tableaux of the given shape, sorted by row-reading word
// (rows concatenated top to bottom). Throws bound_error past the cap.
std::vector<StandardTableau> enumerate_standard(const Partition& shape);
std::vector<StandardTableau> enumerate_standard(const Partition& shape, int max_n);

StandardTableau transpose(const StandardTableau& t);

// Tableau attached to a composition pi: split 1..n into consecutive groups
// of sizes pi_1, pi_2, ...; the entry at offset c within its group lands in
// column c, and each column is filled top to bottom in increasing order.
StandardTableau tableau_from_composition(const Composition& pi);

// Dual construction: the entry at offset m within its group lands in row m,
// appended left to right. The shape is the conjugate of sorted(pi).
StandardTableau tableau_from_cocomposition(const Composition& pi);

// Shapes of the subtableaux on entries 1..i, for i = 1..n.
std::vector<Partition> shape_chain(const StandardTableau& t);

// Row-wise concatenation with the right operand's entries shifted by n1.
// Throws parse_error when the combined row lengths fail to be a partition.
StandardTableau tableau_sum(const StandardTableau& t1, const StandardTableau& t2);

// Schuetzenberger involution: iterate delete-min followed by an inward
// jeu-de-taquin slide; the cell vacated at step k receives n+1-k.
StandardTableau evacuation(const StandardTableau& t);

} // namespace springer
