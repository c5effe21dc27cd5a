#include "sevlab/wedge.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "sevlab/datasets.hpp"
#include "sevlab/error.hpp"
#include "sevlab/linalg.hpp"

namespace sevlab {

namespace {

using Row = SparseEchelon<Monomial>::Row;

int popcount(Monomial m) { return std::popcount(m); }

// (-1)^(number of set bits strictly between positions lo and hi).
int between_sign(Monomial m, int lo, int hi) {
    if (lo > hi) std::swap(lo, hi);
    if (hi - lo <= 1) return 1;
    const Monomial window = ((Monomial{1} << hi) - 1) & ~((Monomial{1} << (lo + 1)) - 1);
    return popcount(m & window) % 2 ? -1 : 1;
}

// Sign of x ^ y relative to the sorted monomial x | y.
int merge_sign(Monomial x, Monomial y) {
    int inversions = 0;
    for (Monomial rest = y; rest; rest &= rest - 1) {
        const int b = std::countr_zero(rest);
        inversions += popcount(x >> (b + 1));
    }
    return inversions % 2 ? -1 : 1;
}

std::vector<int> bits(Monomial m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

BasisOperator make_op(std::vector<std::vector<std::pair<int, Rational>>> images) {
    for (auto& img : images) {
        std::map<int, Rational> merged;
        for (const auto& [t, c] : img) merged[t] += c;
        img.clear();
        for (const auto& [t, c] : merged)
            if (!c.is_zero()) img.emplace_back(t, c);
    }
    return BasisOperator{std::move(images)};
}

// S^2 C^3 with labels ii <= jj in lexicographic order.
int sym_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static const int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return table[i][j];
}

BasisOperator sym_op(int x, int y) {
    std::vector<std::vector<std::pair<int, Rational>>> images(6);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto& img = images[static_cast<std::size_t>(sym_index(i, j))];
            if (i == x) img.emplace_back(sym_index(y, j), Rational(1));
            if (j == x) img.emplace_back(sym_index(i, y), Rational(1));
        }
    return make_op(std::move(images));
}

BasisOperator tensor_op(int factor, int x, int y) {
    std::vector<std::vector<std::pair<int, Rational>>> images(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto& img = images[static_cast<std::size_t>(3 * i + j)];
            if (factor == 0 && i == x) img.emplace_back(3 * y + j, Rational(1));
            if (factor == 1 && j == x) img.emplace_back(3 * i + y, Rational(1));
        }
    return make_op(std::move(images));
}

int pair_index(int i, int j) {
    // Lexicographic index of {i < j} among pairs of 0..5.
    return i * 6 - i * (i + 1) / 2 + (j - i - 1);
}

BasisOperator exterior_op(int x, int y) {
    std::vector<std::vector<std::pair<int, Rational>>> images(15);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            auto& img = images[static_cast<std::size_t>(pair_index(i, j))];
            auto push = [&](int p, int q) {
                if (p == q) return;
                if (p < q) img.emplace_back(pair_index(p, q), Rational(1));
                else img.emplace_back(pair_index(q, p), Rational(-1));
            };
            if (i == x) push(y, j);
            if (j == x) push(i, y);
        }
    return make_op(std::move(images));
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
    std::vector<Monomial> out;
    if (k < 0 || k > n) return out;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Monomial m = 0;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) m |= Monomial{1} << i;
        out.push_back(m);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

WedgeVector from_row(int degree, Row row) {
    WedgeVector v;
    v.degree = degree;
    v.coords = std::move(row);
    return v;
}

// Monomial of label indices to vertex mask through a label -> vertex table.
Face to_face(Monomial m, const std::vector<int>& vertex_of_label) {
    Face f = 0;
    for (int b : bits(m)) f |= Face{1} << (vertex_of_label[static_cast<std::size_t>(b)] - 1);
    return f;
}

}  // namespace

void WedgeVector::add(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto& slot = coords[m];
    slot += c;
    if (slot.is_zero()) coords.erase(m);
}

int WedgeModel::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw Error(ErrorCode::ParseError, "unknown label '" + label + "' in " + name);
}

std::vector<int> WedgeModel::weight(Monomial m) const {
    std::vector<int> w(weights.front().size(), 0);
    for (int b : bits(m))
        for (std::size_t c = 0; c < w.size(); ++c) w[c] += weights[static_cast<std::size_t>(b)][c];
    return w;
}

Weight WedgeModel::dynkin(const std::vector<int>& gl) const {
    Weight out;
    std::size_t start = 0;
    for (int size : factor_sizes) {
        for (int i = 0; i + 1 < size; ++i)
            out.push_back(gl[start + static_cast<std::size_t>(i)] - gl[start + static_cast<std::size_t>(i) + 1]);
        start += static_cast<std::size_t>(size);
    }
    return out;
}

WedgeModel wedge_model(int a) {
    if (a == 1) {
        WedgeModel m{"S2C3", {}, {}, {3}, {}, {}, build_root_system("A", 2)};
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                m.labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
                std::vector<int> w(3, 0);
                ++w[static_cast<std::size_t>(i)];
                ++w[static_cast<std::size_t>(j)];
                m.weights.push_back(w);
            }
        for (int i = 0; i < 2; ++i) {
            m.lowering.push_back(sym_op(i, i + 1));
            m.raising.push_back(sym_op(i + 1, i));
        }
        return m;
    }
    if (a == 2) {
        WedgeModel m{"C3xC3", {}, {}, {3, 3}, {}, {}, root_system_from_label("A2xA2")};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m.labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
                std::vector<int> w(6, 0);
                w[static_cast<std::size_t>(i)] = 1;
                w[static_cast<std::size_t>(3 + j)] = 1;
                m.weights.push_back(w);
            }
        for (int factor = 0; factor < 2; ++factor)
            for (int i = 0; i < 2; ++i) {
                m.lowering.push_back(tensor_op(factor, i, i + 1));
                m.raising.push_back(tensor_op(factor, i + 1, i));
            }
        return m;
    }
    if (a == 4) {
        WedgeModel m{"L2C6", {}, {}, {6}, {}, {}, build_root_system("A", 5)};
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                m.labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
                std::vector<int> w(6, 0);
                w[static_cast<std::size_t>(i)] = 1;
                w[static_cast<std::size_t>(j)] = 1;
                m.weights.push_back(w);
            }
        for (int i = 0; i < 5; ++i) {
            m.lowering.push_back(exterior_op(i, i + 1));
            m.raising.push_back(exterior_op(i + 1, i));
        }
        return m;
    }
    throw Error(ErrorCode::UnsupportedCase, "no wedge model for a = " + std::to_string(a));
}

WedgeVector apply_operator(const BasisOperator& op, const WedgeVector& v) {
    WedgeVector out;
    out.degree = v.degree;
    for (const auto& [m, c] : v.coords) {
        for (int p : bits(m)) {
            const Monomial rest = m & ~(Monomial{1} << p);
            for (const auto& [t, e] : op.images[static_cast<std::size_t>(p)]) {
                if ((rest >> t) & 1u) continue;
                out.add(rest | (Monomial{1} << t), c * e * Rational(between_sign(rest, p, t)));
            }
        }
    }
    return out;
}

WedgeVector lowering(const WedgeModel& model, int op_index, const WedgeVector& v) {
    return apply_operator(model.lowering.at(static_cast<std::size_t>(op_index)), v);
}

WedgeVector raising(const WedgeModel& model, int op_index, const WedgeVector& v) {
    return apply_operator(model.raising.at(static_cast<std::size_t>(op_index)), v);
}

WedgeVector wedge(const WedgeVector& x, const WedgeVector& y) {
    WedgeVector out;
    out.degree = x.degree + y.degree;
    for (const auto& [mx, cx] : x.coords)
        for (const auto& [my, cy] : y.coords) {
            if (mx & my) continue;
            out.add(mx | my, cx * cy * Rational(merge_sign(mx, my)));
        }
    return out;
}

WedgeVector contract(const std::vector<Rational>& phi, const WedgeVector& v) {
    WedgeVector out;
    out.degree = v.degree - 1;
    for (const auto& [m, c] : v.coords) {
        int position = 0;
        for (int b : bits(m)) {
            const Rational& value = phi.at(static_cast<std::size_t>(b));
            if (!value.is_zero())
                out.add(m & ~(Monomial{1} << b), c * value * Rational(position % 2 ? -1 : 1));
            ++position;
        }
    }
    return out;
}

WedgeVector parse_wedge(const WedgeModel& model, const std::string& text) {
    WedgeVector out;
    out.degree = -1;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(i) + " in '" + text + "'");
    };
    skip();
    if (i == text.size()) fail("empty expression");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::string digits;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) digits += text[i++];
        Rational coef = digits.empty() ? Rational(1) : Rational::parse(digits);
        skip();
        std::vector<int> factors;
        while (i < text.size() && text[i] == '(') {
            const auto close = text.find(')', i);
            if (close == std::string::npos) fail("unclosed '('");
            factors.push_back(model.index_of(text.substr(i + 1, close - i - 1)));
            i = close + 1;
            skip();
        }
        if (factors.empty()) fail("term without factors");
        if (out.degree >= 0 && out.degree != static_cast<int>(factors.size())) fail("mixed degrees");
        out.degree = static_cast<int>(factors.size());
        // Sort the factors, tracking the permutation parity.
        int parity = 0;
        for (std::size_t p = 0; p < factors.size(); ++p)
            for (std::size_t q = p + 1; q < factors.size(); ++q) {
                if (factors[p] == factors[q]) fail("repeated factor");
                if (factors[p] > factors[q]) ++parity;
            }
        Monomial m = 0;
        for (int f : factors) m |= Monomial{1} << f;
        out.add(m, coef * Rational(sign * (parity % 2 ? -1 : 1)));
    }
    return out;
}

std::string format_wedge(const WedgeModel& model, const WedgeVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.coords) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        if (magnitude != Rational(1)) os << magnitude;
        for (int b : bits(m)) os << "(" << model.labels[static_cast<std::size_t>(b)] << ")";
        first = false;
    }
    return os.str();
}

std::size_t ModuleSpan::dim() const {
    std::size_t n = 0;
    for (const auto& [w, vs] : by_weight) n += vs.size();
    return n;
}

std::vector<WedgeVector> ModuleSpan::basis() const {
    std::vector<WedgeVector> out;
    for (const auto& [w, vs] : by_weight) out.insert(out.end(), vs.begin(), vs.end());
    return out;
}

ModuleSpan generate_module(const WedgeModel& model, const WedgeVector& highest) {
    if (highest.is_zero()) throw Error(ErrorCode::NotHighestWeight, "zero vector");
    const auto weight = model.weight(highest.coords.begin()->first);
    for (const auto& [m, c] : highest.coords)
        if (model.weight(m) != weight)
            throw Error(ErrorCode::NotHighestWeight, "not a weight vector: " + format_wedge(model, highest));
    for (std::size_t r = 0; r < model.raising.size(); ++r)
        if (!raising(model, static_cast<int>(r), highest).is_zero())
            throw Error(ErrorCode::NotHighestWeight,
                        "raising operator " + std::to_string(r + 1) + " does not kill " + format_wedge(model, highest));

    ModuleSpan span;
    span.degree = highest.degree;
    span.highest = highest;
    std::map<std::vector<int>, SparseEchelon<Monomial>> spaces;
    std::deque<WedgeVector> queue;
    auto consider = [&](const WedgeVector& v) {
        if (v.is_zero()) return;
        const auto w = model.weight(v.coords.begin()->first);
        if (auto row = spaces[w].insert(v.coords)) {
            auto vec = from_row(span.degree, *row);
            span.by_weight[w].push_back(vec);
            queue.push_back(std::move(vec));
        }
    };
    consider(highest);
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (std::size_t l = 0; l < model.lowering.size(); ++l) consider(lowering(model, static_cast<int>(l), v));
    }
    const BigInt expected = weyl_dim(model.levi, model.dynkin(weight));
    if (BigInt(static_cast<unsigned long>(span.dim())) != expected)
        throw Error(ErrorCode::DimensionMismatch, "span has dimension " + std::to_string(span.dim()) +
                                                      ", Weyl dimension " + to_string(expected));
    return span;
}

std::vector<WeightSupport> diagram_supports(const ModuleSpan& span) {
    std::vector<WeightSupport> out;
    for (const auto& [w, vs] : span.by_weight) {
        if (vs.size() != 1) {
            std::ostringstream os;
            os << "weight space of dimension " << vs.size() << " at (";
            for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
            os << ")";
            throw Error(ErrorCode::MultiplicityNotFree, os.str());
        }
        out.push_back({w, vs.front()});
    }
    return out;
}

bool matches_weight_vector(const ModuleSpan& span, const WedgeModel& model, const WedgeVector& expected) {
    if (expected.is_zero() || expected.degree != span.degree) return false;
    const auto w = model.weight(expected.coords.begin()->first);
    for (const auto& [m, c] : expected.coords)
        if (model.weight(m) != w) return false;
    const auto it = span.by_weight.find(w);
    if (it == span.by_weight.end()) return false;
    SparseEchelon<Monomial> space;
    for (const auto& v : it->second) space.insert(v.coords);
    return space.contains(expected.coords);
}

const std::vector<DiagramEntry>& rp2_diagram() {
    static const std::vector<DiagramEntry> entries = {
        {"(11)(12)(13)", "(11)(12)(13)"},
        {"(11)(12)(23) + (11)(22)(13)", "(11)(22)(13)"},
        {"(11)(22)(23) + (12)(22)(13)", "(11)(22)(23)"},
        {"(11)(12)(33) + (11)(23)(13)", "(11)(12)(33)"},
        {"(12)(22)(23)", "(12)(22)(23)"},
        {"(11)(22)(33) + 2(12)(23)(13)", "(12)(23)(13)"},
        {"(13)(22)(23) + (12)(22)(33)", "(12)(22)(33)"},
        {"(11)(23)(33) + (12)(33)(13)", "(11)(23)(33)"},
        {"(12)(23)(33) + (13)(22)(33)", "(13)(22)(33)"},
        {"(13)(23)(33)", "(13)(23)(33)"},
    };
    return entries;
}

BoldSelection bold_selection(const ModuleSpan& span, const SimplicialComplex& complex) {
    const std::set<Face> facets(complex.facet_masks().begin(), complex.facet_masks().end());
    std::vector<std::vector<Monomial>> hits;
    for (const auto& ws : diagram_supports(span)) {
        hits.emplace_back();
        for (const auto& [m, c] : ws.vector.coords)
            if (facets.count(m)) hits.back().push_back(m);
    }
    for (const auto& h : hits)
        if (h.empty()) throw Error(ErrorCode::SelectionMissing, "weight vector with no facet in its support");
    for (const auto& h : hits)
        if (h.size() > 1) throw Error(ErrorCode::SelectionAmbiguous, "weight vector with several facets in its support");
    BoldSelection out;
    for (const auto& h : hits) out.selected.push_back(h.front());
    if (std::set<Face>(out.selected.begin(), out.selected.end()) != facets)
        throw Error(ErrorCode::SelectionMissing, "some facet is not selected by any weight vector");
    out.equals_facets = true;
    return out;
}

std::vector<WedgeVector> contraction_image(const std::vector<WedgeVector>& space,
                                           const std::vector<std::vector<Rational>>& phis) {
    SparseEchelon<Monomial> image;
    int degree = 0;
    for (const auto& phi : phis)
        for (const auto& v : space) {
            auto c = contract(phi, v);
            degree = c.degree;
            image.insert(c.coords);
        }
    std::vector<WedgeVector> out;
    for (const auto& [pivot, row] : image.rows()) out.push_back(from_row(degree, row));
    return out;
}

std::size_t contraction_rank(const std::vector<WedgeVector>& space, const std::vector<Rational>& phi) {
    return contraction_image(space, {phi}).size();
}

std::size_t contraction_image_rank(const std::vector<WedgeVector>& space,
                                   const std::vector<std::vector<Rational>>& phis) {
    return contraction_image(space, phis).size();
}

std::vector<WedgeVector> standard_basis(int n_labels, int k) {
    std::vector<WedgeVector> out;
    for (Monomial m : monomials_of_degree(n_labels, k)) {
        WedgeVector v;
        v.degree = k;
        v.coords[m] = Rational(1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<WedgeVector> highest_weight_vectors(const WedgeModel& model, int k, const std::vector<int>& gl_weight) {
    std::vector<Monomial> columns;
    for (Monomial m : monomials_of_degree(static_cast<int>(model.labels.size()), k))
        if (model.weight(m) == gl_weight) columns.push_back(m);
    if (columns.empty()) return {};
    // One row per (raising operator, target monomial).
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        WedgeVector unit;
        unit.degree = k;
        unit.coords[columns[c]] = Rational(1);
        for (std::size_t r = 0; r < model.raising.size(); ++r)
            for (const auto& [m, e] : raising(model, static_cast<int>(r), unit).coords) {
                const auto key = std::pair{r, m};
                auto it = row_of.find(key);
                if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
                entries[c].emplace_back(it->second, e);
            }
    }
    RationalMatrix mat(std::max<std::size_t>(row_of.size(), 1), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, e] : entries[c]) mat(r, c) += e;
    const auto pivots = mat.rref();
    std::vector<bool> is_pivot(columns.size(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<WedgeVector> out;
    for (std::size_t free = 0; free < columns.size(); ++free) {
        if (is_pivot[free]) continue;
        WedgeVector v;
        v.degree = k;
        v.add(columns[free], Rational(1));
        for (std::size_t i = 0; i < pivots.size(); ++i) v.add(columns[pivots[i]], -mat(i, free));
        out.push_back(std::move(v));
    }
    return out;
}

DefectivityReport defectivity_check(int a) {
    if (a != 1 && a != 2) throw Error(ErrorCode::UnsupportedCase, "defectivity model only for a = 1, 2");
    const auto model = wedge_model(a);
    const std::string text = a == 1 ? "(11)(12)(22)" : "(11)(12)(21)(22)";
    const auto hw = parse_wedge(model, text);
    DefectivityReport report;
    report.highest_weight = model.weight(hw.coords.begin()->first);
    const auto candidates = highest_weight_vectors(model, a + 2, report.highest_weight);
    if (candidates.size() != 1)
        throw Error(ErrorCode::MultiplicityNotFree,
                    std::to_string(candidates.size()) + " highest weight vectors of the dual top constituent");
    const auto span = generate_module(model, candidates.front());
    const auto basis = span.basis();
    report.dim = basis.size();
    report.vanishes = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            ++report.pairs_checked;
            if (!wedge(basis[i], basis[j]).is_zero()) report.vanishes = false;
        }
    return report;
}

bool Cp2Report::ok() const {
    return failures.empty() && decomposables == 9 && decomposables_are_facets && weight_orbits == 4 &&
           facet_orbits == 4 && orbits_correspond && supports_ok && twisted_ok && h_is_a3xa3 && tau_is_transpose;
}

Cp2Report cp2_match() {
    Cp2Report report;
    const auto model = wedge_model(2);
    const auto complex = *dataset("CP2_min").complex;
    const auto dict = dataset("CP2_dictionary").dictionary;
    const auto gens = dataset("CP2_generators").generators;
    const std::set<Face> facets(complex.facet_masks().begin(), complex.facet_masks().end());

    std::vector<int> vertex_of_label(9, 0), twisted(9, 0);
    for (const auto& [v, l] : dict) {
        vertex_of_label[static_cast<std::size_t>(model.index_of(l.substr(1, 2)))] = v;
        twisted[static_cast<std::size_t>(model.index_of(std::string{l[2], l[1]}))] = v;
    }

    report.highest = parse_wedge(model, "(11)(12)(13)(21)(31)");
    report.highest_monomial = report.highest.coords.begin()->first;
    report.highest_facet = face_vertices(to_face(report.highest_monomial, vertex_of_label));
    const auto span = generate_module(model, report.highest);
    const auto supports = diagram_supports(span);

    // Weyl group S3 x S3 permuting the row and column indices of the labels.
    std::vector<std::array<int, 3>> s3;
    std::array<int, 3> p{0, 1, 2};
    do s3.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto act = [&](const std::array<int, 3>& s, const std::array<int, 3>& t, Monomial m) {
        Monomial out = 0;
        for (int b : bits(m)) out |= Monomial{1} << (3 * s[static_cast<std::size_t>(b / 3)] + t[static_cast<std::size_t>(b % 3)]);
        return out;
    };
    std::set<Monomial> decomposables;
    for (const auto& s : s3)
        for (const auto& t : s3) decomposables.insert(act(s, t, report.highest_monomial));
    report.decomposables = decomposables.size();

    auto check_supports = [&](const std::vector<int>& table, std::map<std::vector<int>, Face>* selected) {
        bool ok = true;
        for (const auto& ws : supports) {
            std::vector<Face> hits;
            for (const auto& [m, c] : ws.vector.coords)
                if (facets.count(to_face(m, table))) hits.push_back(to_face(m, table));
            if (hits.size() != 1) ok = false;
            else if (selected) (*selected)[ws.weight] = hits.front();
        }
        for (Monomial m : decomposables)
            if (!facets.count(to_face(m, table))) ok = false;
        return ok;
    };

    report.decomposables_are_facets = true;
    for (Monomial m : decomposables)
        if (!facets.count(to_face(m, vertex_of_label))) report.decomposables_are_facets = false;

    std::map<std::vector<int>, Face> selected;
    const bool plain = check_supports(vertex_of_label, &selected);
    report.supports_ok = plain;
    for (const auto& ws : supports) {
        const auto size = ws.vector.coords.size();
        report.support_sizes.push_back(size);
        if (size != 1 && size != 2 && size != 4) report.supports_ok = false;
    }
    report.twisted_ok = check_supports(twisted, nullptr);

    // Weight orbits under S3 x S3 acting on each GL3 block.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<std::vector<int>>> weight_orbits;
    for (const auto& ws : supports) {
        if (seen.count(ws.weight)) continue;
        std::set<std::vector<int>> orbit;
        for (const auto& s : s3)
            for (const auto& t : s3) {
                std::vector<int> w(6);
                for (int i = 0; i < 3; ++i) {
                    w[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = ws.weight[static_cast<std::size_t>(i)];
                    w[static_cast<std::size_t>(3 + t[static_cast<std::size_t>(i)])] = ws.weight[static_cast<std::size_t>(3 + i)];
                }
                orbit.insert(w);
            }
        seen.insert(orbit.begin(), orbit.end());
        weight_orbits.emplace_back(orbit.begin(), orbit.end());
    }
    report.weight_orbits = weight_orbits.size();

    const auto h = group_closure({gens[0].second, gens[1].second}, 1000);
    std::vector<PointSet> facet_sets(complex.facets().begin(), complex.facets().end());
    const auto facet_orbits = orbits(h, facet_sets);
    report.facet_orbits = facet_orbits.size();

    report.orbits_correspond = plain && weight_orbits.size() == facet_orbits.size();
    if (report.orbits_correspond) {
        std::set<std::set<Face>> h_orbits;
        for (const auto& orbit : facet_orbits) {
            std::set<Face> masks;
            for (const auto& f : orbit) masks.insert(face_mask(f));
            h_orbits.insert(masks);
        }
        for (const auto& orbit : weight_orbits) {
            std::set<Face> masks;
            for (const auto& w : orbit) masks.insert(selected.at(w));
            if (!h_orbits.count(masks)) report.orbits_correspond = false;
        }
    }

    // Each element of H must act on labels (ij) as (s(i) t(j)) with s, t even.
    std::map<int, std::pair<int, int>> label_of;
    for (const auto& [v, l] : dict) label_of[v] = {l[1] - '1', l[2] - '1'};
    auto is_even = [](const std::array<int, 3>& q) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inv += q[static_cast<std::size_t>(i)] > q[static_cast<std::size_t>(j)];
        return inv % 2 == 0;
    };
    report.h_is_a3xa3 = h.order() == 9;
    for (const auto& g : h.elements()) {
        std::array<int, 3> s{-1, -1, -1}, t{-1, -1, -1};
        bool consistent = true;
        for (const auto& [v, ij] : label_of) {
            const auto img = label_of.at(g(v));
            auto& si = s[static_cast<std::size_t>(ij.first)];
            auto& tj = t[static_cast<std::size_t>(ij.second)];
            if (si == -1) si = img.first;
            if (tj == -1) tj = img.second;
            if (si != img.first || tj != img.second) consistent = false;
        }
        if (!consistent || !is_even(s) || !is_even(t)) report.h_is_a3xa3 = false;
    }

    const auto& tau = gens[2].second;
    report.tau_is_transpose = true;
    for (const auto& [v, ij] : label_of) {
        const auto img = label_of.at(tau(v));
        if (img.first != ij.second || img.second != ij.first) report.tau_is_transpose = false;
    }

    if (report.highest_facet != std::vector<int>{3, 4, 6, 8, 9}) report.failures.push_back("highest weight facet");
    if (!report.decomposables_are_facets) report.failures.push_back("decomposable vector off the complex");
    if (!report.supports_ok) report.failures.push_back("weight vector supports");
    if (!report.twisted_ok) report.failures.push_back("tau-twisted dictionary");
    if (!report.orbits_correspond) report.failures.push_back("weight orbits versus facet orbits");
    return report;
}

M1Report m1_weight_check() {
    const auto model = wedge_model(4);
    std::string text;
    for (const auto& l : dataset("HP2_M1").labels) text += l;
    const auto v = parse_wedge(model, text);
    M1Report report;
    report.weight = model.weight(v.coords.begin()->first);
    report.highest = true;
    for (std::size_t r = 0; r < model.raising.size(); ++r)
        if (!raising(model, static_cast<int>(r), v).is_zero()) report.highest = false;
    return report;
}

}  // namespace sevlab
