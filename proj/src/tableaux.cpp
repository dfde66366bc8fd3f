#include "qsymb/tableaux.hpp"

#include "qsymb/config.hpp"
#include "qsymb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qsymb {

namespace {

void check_cap(size_t produced, const char* what) {
    if (static_cast<long long>(produced) > config().cap_enum_items)
        throw SizeLimit(std::string(what) + " enumeration exceeds the configured item cap");
}

} // namespace

// --- YoungTableau -----------------------------------------------------------

YoungTableau::YoungTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw MalformedInput("tableau row count does not match shape");
    for (int i = 0; i < shape_.length(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.part(i))
            throw MalformedInput("tableau row length does not match shape");
    }
}

bool YoungTableau::is_semistandard() const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
            if (r > 0 && c < rows_[r - 1].size() && rows_[r][c] <= rows_[r - 1][c]) return false;
        }
    }
    return true;
}

bool YoungTableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<bool> seen(cell_count(), false);
    for (const auto& row : rows_) {
        for (int v : row) {
            if (v < 1 || v > cell_count() || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
    }
    return true;
}

DescentSetA descent_set(const YoungTableau& t) {
    if (!t.is_standard()) throw MalformedInput("descent set needs a standard tableau");
    const int n = t.cell_count();
    std::vector<int> row_of(n + 1, 0);
    for (size_t r = 0; r < t.rows().size(); ++r) {
        for (int v : t.rows()[r]) row_of[v] = static_cast<int>(r) + 1;
    }
    std::vector<int> elems;
    for (int i = 1; i < n; ++i) {
        if (row_of[i] < row_of[i + 1]) elems.push_back(i);
    }
    return {n, std::move(elems)};
}

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
    const int n = shape.weight();
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<int> fill(shape.length(), 0);
    std::vector<YoungTableau> out;
    auto rec = [&](auto&& self, int label) -> void {
        if (label > n) {
            check_cap(out.size() + 1, "standard tableau");
            out.emplace_back(shape, rows);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (fill[r] >= shape.part(r)) continue;
            if (r > 0 && fill[r] >= fill[r - 1]) continue;
            rows[r].push_back(label);
            ++fill[r];
            self(self, label + 1);
            --fill[r];
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<YoungTableau> semistandard_tableaux(const Partition& shape, int lo, int hi) {
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.part(r), 0);
    std::vector<YoungTableau> out;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            check_cap(out.size() + 1, "semistandard tableau");
            out.emplace_back(shape, rows);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int min_v = lo;
        if (c > 0) min_v = std::max(min_v, rows[r][c - 1]);
        if (r > 0 && c < shape.part(r - 1)) min_v = std::max(min_v, rows[r - 1][c] + 1);
        for (int v = min_v; v <= hi; ++v) {
            rows[r][c] = v;
            self(self, nr, nc);
        }
        rows[r][c] = 0;
    };
    if (shape.length() == 0) {
        out.emplace_back(shape, rows);
    } else {
        rec(rec, 0, 0);
    }
    return out;
}

// --- PTableau ---------------------------------------------------------------

bool PTableau::is_semistandard() const {
    if (!std::is_sorted(minus.begin(), minus.end())) return false;
    return plus.is_semistandard();
}

bool PTableau::is_standard() const {
    if (!plus.is_semistandard()) return false;
    std::vector<int> all = minus;
    for (const auto& row : plus.rows()) all.insert(all.end(), row.begin(), row.end());
    std::vector<bool> seen(all.size(), false);
    for (int v : all) {
        if (v < 1 || v > static_cast<int>(all.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return std::is_sorted(minus.begin(), minus.end());
}

std::vector<PTableau> standard_bitableaux(const Partition& shape, int p) {
    if (p < 0) throw MalformedInput("negative overline count");
    const int total = shape.weight() + p;
    // choose the sorted label set of the one-row component
    std::vector<std::vector<int>> choices;
    std::vector<int> acc;
    auto choose = [&](auto&& self, int from) -> void {
        if (static_cast<int>(acc.size()) == p) {
            choices.push_back(acc);
            return;
        }
        for (int v = from; v <= total; ++v) {
            acc.push_back(v);
            self(self, v + 1);
            acc.pop_back();
        }
    };
    choose(choose, 1);
    auto skeletons = standard_tableaux(shape);
    std::vector<PTableau> out;
    for (const auto& minus : choices) {
        std::vector<int> rest;
        std::vector<bool> taken(total + 1, false);
        for (int v : minus) taken[v] = true;
        for (int v = 1; v <= total; ++v) {
            if (!taken[v]) rest.push_back(v);
        }
        for (const auto& sk : skeletons) {
            std::vector<std::vector<int>> rows = sk.rows();
            for (auto& row : rows) {
                for (int& v : row) v = rest[v - 1];
            }
            check_cap(out.size() + 1, "standard bi-tableau");
            out.push_back({minus, YoungTableau(shape, std::move(rows))});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PTableau> semistandard_bitableaux(const Partition& shape, int p, int alphabet_max) {
    if (p < 0) throw MalformedInput("negative overline count");
    // weakly increasing p-tuples in [1..alphabet_max]
    std::vector<std::vector<int>> fills;
    std::vector<int> row;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(row.size()) == p) {
            fills.push_back(row);
            return;
        }
        for (int v = from; v <= alphabet_max; ++v) {
            row.push_back(v);
            self(self, v);
            row.pop_back();
        }
    };
    rec(rec, 1);
    auto pluses = semistandard_tableaux(shape, 1, alphabet_max);
    std::vector<PTableau> out;
    for (const auto& minus : fills) {
        for (const auto& plus : pluses) {
            check_cap(out.size() + 1, "semistandard bi-tableau");
            out.push_back({minus, plus});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PTableau standardize(const PTableau& t) {
    if (!t.is_semistandard()) throw MalformedInput("standardize needs a semistandard pair");
    struct Box {
        int value;
        int component;  // 0 = one-row part, 1 = shaped part
        int col;
        int row;
    };
    std::vector<Box> boxes;
    for (size_t i = 0; i < t.minus.size(); ++i)
        boxes.push_back({t.minus[i], 0, static_cast<int>(i), 0});
    for (size_t r = 0; r < t.plus.rows().size(); ++r) {
        for (size_t c = 0; c < t.plus.rows()[r].size(); ++c)
            boxes.push_back({t.plus.entry(static_cast<int>(r), static_cast<int>(c)), 1,
                             static_cast<int>(c), static_cast<int>(r)});
    }
    // equal values: one-row component first, then left to right by column
    std::stable_sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        return std::tie(a.value, a.component, a.col, a.row) <
               std::tie(b.value, b.component, b.col, b.row);
    });
    PTableau out = t;
    std::vector<std::vector<int>> rows = t.plus.rows();
    int label = 1;
    for (const auto& b : boxes) {
        if (b.component == 0)
            out.minus[b.col] = label++;
        else
            rows[b.row][b.col] = label++;
    }
    out.plus = YoungTableau(t.plus.shape(), std::move(rows));
    return out;
}

WeakComposition weak_composition_of(const PTableau& t) {
    if (!t.is_standard()) throw MalformedInput("composition needs a standard pair");
    const int total = t.label_count();
    // component and row of every label
    std::vector<int> comp_of(total + 1, 0), row_of(total + 1, 0);
    for (int v : t.minus) comp_of[v] = 0;
    for (size_t r = 0; r < t.plus.rows().size(); ++r) {
        for (int v : t.plus.rows()[r]) {
            comp_of[v] = 1;
            row_of[v] = static_cast<int>(r) + 1;
        }
    }
    std::vector<int> entries;
    int run = 0;
    for (int k = 1; k <= total; ++k) {
        if (comp_of[k] == 0) {
            if (run > 0) entries.push_back(run);
            run = 0;
            entries.push_back(0);
        } else {
            ++run;
            bool breaks = k == total || comp_of[k + 1] == 0 || row_of[k] < row_of[k + 1];
            if (breaks) {
                entries.push_back(run);
                run = 0;
            }
        }
    }
    return WeakComposition(std::move(entries));
}

// --- dominoes ---------------------------------------------------------------

std::pair<std::pair<int, int>, std::pair<int, int>> Domino::cells() const {
    if (vertical) return {{row, col}, {row + 1, col}};
    return {{row, col}, {row, col + 1}};
}

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
    std::sort(dominoes_.begin(), dominoes_.end(),
              [](const Domino& a, const Domino& b) {
                  return std::tie(a.label, a.row, a.col) < std::tie(b.label, b.row, b.col);
              });
    if (2 * static_cast<int>(dominoes_.size()) != shape_.weight())
        throw MalformedInput("domino count does not match shape weight");
    std::map<std::pair<int, int>, int> owner;
    for (size_t i = 0; i < dominoes_.size(); ++i) {
        auto [c1, c2] = dominoes_[i].cells();
        for (auto cell : {c1, c2}) {
            if (cell.first < 1 || cell.second < 1 || cell.second > shape_.part(cell.first - 1))
                throw MalformedInput("domino outside the shape");
            if (!owner.emplace(cell, static_cast<int>(i)).second)
                throw MalformedInput("overlapping dominoes");
        }
    }
}

int DominoTableau::two_spin() const {
    return static_cast<int>(std::count_if(dominoes_.begin(), dominoes_.end(),
                                          [](const Domino& d) { return d.vertical; }));
}

std::vector<int> DominoTableau::weight() const {
    int max_label = 0;
    for (const auto& d : dominoes_) max_label = std::max(max_label, d.label);
    std::vector<int> w(dominoes_.empty() ? 0 : max_label + 1, 0);
    for (const auto& d : dominoes_) ++w[d.label];
    return w;
}

namespace {

struct Grid {
    std::vector<std::vector<int>> label;
    std::vector<std::vector<int>> owner;
};

Grid make_grid(const Partition& shape, const std::vector<Domino>& dominoes) {
    Grid g;
    g.label.resize(shape.length());
    g.owner.resize(shape.length());
    for (int r = 0; r < shape.length(); ++r) {
        g.label[r].assign(shape.part(r), -1);
        g.owner[r].assign(shape.part(r), -1);
    }
    for (size_t i = 0; i < dominoes.size(); ++i) {
        auto [c1, c2] = dominoes[i].cells();
        for (auto cell : {c1, c2}) {
            g.label[cell.first - 1][cell.second - 1] = dominoes[i].label;
            g.owner[cell.first - 1][cell.second - 1] = static_cast<int>(i);
        }
    }
    return g;
}

bool grid_constraints_hold(const Partition& shape, const Grid& g) {
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.part(r); ++c) {
            if (c + 1 < shape.part(r) && g.owner[r][c] != g.owner[r][c + 1] &&
                g.label[r][c] > g.label[r][c + 1])
                return false;
            if (r + 1 < shape.length() && c < shape.part(r + 1) &&
                g.owner[r][c] != g.owner[r + 1][c] && g.label[r][c] >= g.label[r + 1][c])
                return false;
        }
    }
    return true;
}

} // namespace

bool DominoTableau::is_semistandard(int alphabet_max) const {
    for (const auto& d : dominoes_) {
        if (d.label < 0 || d.label > alphabet_max) return false;
        if (d.row == 1 && d.col == 1 && d.vertical && d.label == 0) return false;
    }
    Grid g = make_grid(shape_, dominoes_);
    return grid_constraints_hold(shape_, g);
}

bool DominoTableau::is_standard() const {
    std::vector<bool> seen(dominoes_.size(), false);
    for (const auto& d : dominoes_) {
        if (d.label < 1 || d.label > domino_count() || seen[d.label - 1]) return false;
        seen[d.label - 1] = true;
    }
    Grid g = make_grid(shape_, dominoes_);
    return grid_constraints_hold(shape_, g);
}

DescentSetB descent_set(const DominoTableau& t) {
    if (!t.is_standard()) throw MalformedInput("descent set needs a standard domino tableau");
    const auto& ds = t.dominoes();  // sorted by label
    std::vector<int> elems;
    if (!ds.empty() && ds[0].vertical) elems.push_back(0);
    for (size_t i = 0; i + 1 < ds.size(); ++i) {
        if (ds[i + 1].top_row() > ds[i].bottom_row()) elems.push_back(static_cast<int>(i) + 1);
    }
    return {t.domino_count(), std::move(elems)};
}

std::vector<std::vector<Domino>> domino_tilings(const Partition& shape) {
    std::vector<std::vector<Domino>> out;
    std::vector<std::vector<bool>> covered(shape.length());
    for (int r = 0; r < shape.length(); ++r) covered[r].assign(shape.part(r), false);
    std::vector<Domino> acc;
    auto in_shape = [&](int r, int c) {
        return r >= 0 && r < shape.length() && c >= 0 && c < shape.part(r);
    };
    auto rec = [&](auto&& self) -> void {
        int fr = -1, fc = -1;
        for (int r = 0; r < shape.length() && fr < 0; ++r) {
            for (int c = 0; c < shape.part(r); ++c) {
                if (!covered[r][c]) {
                    fr = r;
                    fc = c;
                    break;
                }
            }
        }
        if (fr < 0) {
            out.push_back(acc);
            return;
        }
        if (in_shape(fr, fc + 1) && !covered[fr][fc + 1]) {
            covered[fr][fc] = covered[fr][fc + 1] = true;
            acc.push_back({fr + 1, fc + 1, false, 0});
            self(self);
            acc.pop_back();
            covered[fr][fc] = covered[fr][fc + 1] = false;
        }
        if (in_shape(fr + 1, fc) && !covered[fr + 1][fc]) {
            covered[fr][fc] = covered[fr + 1][fc] = true;
            acc.push_back({fr + 1, fc + 1, true, 0});
            self(self);
            acc.pop_back();
            covered[fr][fc] = covered[fr + 1][fc] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<DominoTableau> standard_domino_tableaux(const Partition& shape) {
    if (!is_domino_tileable(shape))
        throw MalformedInput("shape has no domino tiling");
    const int n = shape.weight() / 2;
    std::vector<int> cur(shape.length() + 1, 0);  // row lengths, extendable
    std::vector<Domino> acc;
    std::vector<DominoTableau> out;
    auto rec = [&](auto&& self, int label) -> void {
        if (label > n) {
            check_cap(out.size() + 1, "standard domino tableau");
            out.emplace_back(shape, acc);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            int len = cur[r];
            int above = r == 0 ? shape.part(0) : cur[r - 1];
            // horizontal at row r
            if (len + 2 <= shape.part(r) && len + 2 <= above) {
                acc.push_back({r + 1, len + 1, false, label});
                cur[r] += 2;
                self(self, label + 1);
                cur[r] -= 2;
                acc.pop_back();
            }
            // vertical at rows r, r+1
            if (r + 1 < shape.length() && cur[r + 1] == len && len + 1 <= shape.part(r + 1) &&
                len + 1 <= above) {
                acc.push_back({r + 1, len + 1, true, label});
                cur[r] += 1;
                cur[r + 1] += 1;
                self(self, label + 1);
                cur[r] -= 1;
                cur[r + 1] -= 1;
                acc.pop_back();
            }
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DominoTableau> semistandard_domino_tableaux(const Partition& shape, int alphabet_max) {
    if (!is_domino_tileable(shape))
        throw MalformedInput("shape has no domino tiling");
    std::vector<DominoTableau> out;
    for (auto& tiling : domino_tilings(shape)) {
        // reading order by top-left cell
        std::sort(tiling.begin(), tiling.end(), [](const Domino& a, const Domino& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        // cell -> domino index
        std::map<std::pair<int, int>, int> owner;
        for (size_t i = 0; i < tiling.size(); ++i) {
            auto [c1, c2] = tiling[i].cells();
            owner[c1] = static_cast<int>(i);
            owner[c2] = static_cast<int>(i);
        }
        std::vector<int> labels(tiling.size(), -1);
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == tiling.size()) {
                std::vector<Domino> ds = tiling;
                for (size_t i = 0; i < ds.size(); ++i) ds[i].label = labels[i];
                check_cap(out.size() + 1, "semistandard domino tableau");
                out.emplace_back(shape, std::move(ds));
                return;
            }
            int lo = 0, hi = alphabet_max;
            if (tiling[idx].row == 1 && tiling[idx].col == 1 && tiling[idx].vertical) lo = 1;
            auto [c1, c2] = tiling[idx].cells();
            for (auto cell : {c1, c2}) {
                auto [r, c] = cell;
                for (auto [nr, nc, dir] : {std::tuple{r, c - 1, -1}, {r, c + 1, +1},
                                           {r - 1, c, -2}, {r + 1, c, +2}}) {
                    auto it = owner.find({nr, nc});
                    if (it == owner.end() || it->second == static_cast<int>(idx)) continue;
                    int lab = labels[it->second];
                    if (lab < 0) continue;
                    switch (dir) {
                        case -1: lo = std::max(lo, lab); break;          // left neighbour
                        case +1: hi = std::min(hi, lab); break;          // right neighbour
                        case -2: lo = std::max(lo, lab + 1); break;      // above
                        case +2: hi = std::min(hi, lab - 1); break;      // below
                    }
                }
            }
            for (int v = lo; v <= hi; ++v) {
                labels[idx] = v;
                self(self, idx + 1);
            }
            labels[idx] = -1;
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BiShape two_quotient(const Partition& shape) {
    if (!is_domino_tileable(shape))
        throw MalformedInput("shape has no domino tiling");
    int len = shape.length();
    int padded = len + (len % 2);
    if (padded == 0) padded = 2;
    std::vector<int> runner_even, runner_odd;
    for (int i = 0; i < padded; ++i) {
        int beta = shape.part(i) + padded - 1 - i;
        (beta % 2 == 0 ? runner_even : runner_odd).push_back(beta / 2);
    }
    auto to_partition = [](std::vector<int> levels) {
        std::sort(levels.begin(), levels.end());
        std::vector<int> parts;
        for (size_t j = 0; j < levels.size(); ++j) {
            int part = levels[j] - static_cast<int>(j);
            if (part > 0) parts.push_back(part);
        }
        std::sort(parts.rbegin(), parts.rend());
        return Partition(std::move(parts));
    };
    return {to_partition(std::move(runner_even)), to_partition(std::move(runner_odd))};
}

// --- serialization ----------------------------------------------------------

std::string to_string(const YoungTableau& t) {
    std::ostringstream os;
    for (size_t r = 0; r < t.rows().size(); ++r) {
        if (r) os << "/";
        for (size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c) os << " ";
            os << t.rows()[r][c];
        }
    }
    return os.str();
}

std::string to_string(const PTableau& t) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < t.minus.size(); ++i) {
        if (i) os << " ";
        os << t.minus[i];
    }
    os << "][" << to_string(t.plus) << "]";
    return os.str();
}

std::string to_string(const DominoTableau& t) {
    std::ostringstream os;
    for (const auto& d : t.dominoes()) {
        os << "(" << d.row << "," << d.col << "," << (d.vertical ? "V" : "H") << "," << d.label
           << ")";
    }
    return os.str();
}

YoungTableau parse_young_tableau(std::string_view s) {
    std::vector<std::vector<int>> rows;
    std::vector<int> parts;
    std::string cur;
    auto flush_row = [&]() {
        std::istringstream is(cur);
        std::vector<int> row;
        int v;
        while (is >> v) row.push_back(v);
        cur.clear();
        if (row.empty()) return;
        parts.push_back(static_cast<int>(row.size()));
        rows.push_back(std::move(row));
    };
    for (char c : s) {
        if (c == '/')
            flush_row();
        else
            cur.push_back(c);
    }
    flush_row();
    return {Partition(std::move(parts)), std::move(rows)};
}

DominoTableau parse_domino_tableau(std::string_view shape, std::string_view dominoes) {
    Partition sh = parse_partition(shape);
    std::vector<Domino> ds;
    std::string body(dominoes);
    size_t pos = 0;
    while ((pos = body.find('(', pos)) != std::string::npos) {
        size_t end = body.find(')', pos);
        if (end == std::string::npos) throw MalformedInput("unbalanced domino list");
        std::string item = body.substr(pos + 1, end - pos - 1);
        for (char& c : item) {
            if (c == ',') c = ' ';
        }
        std::istringstream is(item);
        int r, c;
        std::string orient;
        int label;
        if (!(is >> r >> c >> orient >> label) || (orient != "H" && orient != "V"))
            throw MalformedInput("bad domino item: " + item);
        ds.push_back({r, c, orient == "V", label});
        pos = end + 1;
    }
    return {std::move(sh), std::move(ds)};
}

} // namespace qsymb
