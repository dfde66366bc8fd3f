#pragma once

#include "qsymb/combinat.hpp"

#include <string>
#include <vector>

namespace qsymb {

/// Young tableau in English notation: row 1 on top, rows weakly increase
/// left to right, columns strictly increase downward.
class YoungTableau {
public:
    YoungTableau() = default;
    YoungTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int cell_count() const { return shape_.weight(); }
    int entry(int row, int col) const { return rows_[row][col]; }  // 0-based

    bool is_semistandard() const;
    /// Entries are exactly 1..n, each once, on top of semistandardness.
    bool is_standard() const;

    bool operator==(const YoungTableau&) const = default;
    auto operator<=>(const YoungTableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Positions i whose successor label sits in a strictly lower row.
DescentSetA descent_set(const YoungTableau& t);

std::vector<YoungTableau> standard_tableaux(const Partition& shape);
/// Semistandard fillings with entries drawn from {lo, ..., hi}.
std::vector<YoungTableau> semistandard_tableaux(const Partition& shape, int lo, int hi);
inline std::vector<YoungTableau> semistandard_tableaux(const Partition& shape, int alphabet_max) {
    return semistandard_tableaux(shape, 1, alphabet_max);
}

/// Pair of a one-row tableau and a tableau of arbitrary shape; labels of the
/// standard variant run through both components.
struct PTableau {
    std::vector<int> minus;  // single row
    YoungTableau plus;

    int label_count() const { return static_cast<int>(minus.size()) + plus.cell_count(); }
    bool is_semistandard() const;
    bool is_standard() const;

    bool operator==(const PTableau&) const = default;
    auto operator<=>(const PTableau&) const = default;
};

std::vector<PTableau> standard_bitableaux(const Partition& shape, int p);
std::vector<PTableau> semistandard_bitableaux(const Partition& shape, int p, int alphabet_max);

/// Order-preserving relabelling by 1..n+p; ties go to the one-row component
/// first, then left to right by column inside the other component.
PTableau standardize(const PTableau& t);

/// Weak composition read off a standard pair: one zero per label in the
/// one-row component, run lengths of descent-free label stretches elsewhere.
WeakComposition weak_composition_of(const PTableau& t);

/// One domino of a tiling: the top-left cell plus an orientation.
struct Domino {
    int row = 0;       // 1-based
    int col = 0;       // 1-based
    bool vertical = false;
    int label = 0;

    /// The two covered cells, (row, col) pairs.
    std::pair<std::pair<int, int>, std::pair<int, int>> cells() const;
    int top_row() const { return row; }
    int bottom_row() const { return row + (vertical ? 1 : 0); }

    bool operator==(const Domino&) const = default;
    auto operator<=>(const Domino&) const = default;
};

/// Labelled domino tiling of a partition shape. Labels weakly increase along
/// rows and strictly increase down columns, comparing cells of distinct
/// dominoes; a vertical domino covering the top-left cell may not carry
/// label 0.
class DominoTableau {
public:
    DominoTableau() = default;
    DominoTableau(Partition shape, std::vector<Domino> dominoes);

    const Partition& shape() const { return shape_; }
    const std::vector<Domino>& dominoes() const { return dominoes_; }
    int domino_count() const { return static_cast<int>(dominoes_.size()); }

    /// Twice the spin, i.e. the number of vertical dominoes.
    int two_spin() const;
    /// Entry i counts dominoes labelled i; index 0 first.
    std::vector<int> weight() const;

    bool is_semistandard(int alphabet_max) const;
    bool is_standard() const;

    bool operator==(const DominoTableau&) const = default;
    auto operator<=>(const DominoTableau&) const = default;

private:
    Partition shape_;
    std::vector<Domino> dominoes_;  // sorted by (label, row, col)
};

/// Descents of a standard domino tableau: i > 0 when the top of domino i+1
/// lies strictly below the bottom of domino i; 0 when domino 1 is vertical.
DescentSetB descent_set(const DominoTableau& t);

/// All domino tilings of the shape, dominoes in reading order, unlabelled
/// (labels zeroed).
std::vector<std::vector<Domino>> domino_tilings(const Partition& shape);

std::vector<DominoTableau> standard_domino_tableaux(const Partition& shape);
std::vector<DominoTableau> semistandard_domino_tableaux(const Partition& shape, int alphabet_max);

/// Pair of partitions carried by a domino-tileable shape.
struct BiShape {
    Partition minus;
    Partition plus;

    bool operator==(const BiShape&) const = default;
};

/// Two-runner abacus decomposition of a tileable shape; the component
/// weights add up to half the shape's weight.
BiShape two_quotient(const Partition& shape);

// --- serialization ----------------------------------------------------------

std::string to_string(const YoungTableau& t);      // "1 3/2"
std::string to_string(const PTableau& t);          // "[2 3 4][1 5/6 7/8]"
std::string to_string(const DominoTableau& t);     // "(1,1,V,1)(1,2,V,2)..."

YoungTableau parse_young_tableau(std::string_view s);
DominoTableau parse_domino_tableau(std::string_view shape, std::string_view dominoes);

} // namespace qsymb
