#include "sevlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sevlab/error.hpp"

namespace sevlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& one_based_images) {
    Permutation p;
    p.images_.reserve(one_based_images.size());
    std::vector<bool> seen(one_based_images.size(), false);
    for (int v : one_based_images) {
        if (v < 1 || static_cast<std::size_t>(v) > one_based_images.size() || seen[v - 1])
            throw Error(ErrorCode::ParseError, "image list is not a permutation");
        seen[v - 1] = true;
        p.images_.push_back(v - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(const std::string& cycles, std::size_t degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> moved(degree, false);
    std::size_t i = 0;
    while (i < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[i]))) { ++i; continue; }
        if (cycles[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in '" + cycles + "'");
        const auto close = cycles.find(')', i);
        if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced cycle in '" + cycles + "'");
        const std::string body = cycles.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        const bool separated = body.find_first_of(", ") != std::string::npos;
        if (separated) {
            std::string tok;
            std::istringstream is(body);
            while (std::getline(is, tok, body.find(',') != std::string::npos ? ',' : ' '))
                if (!tok.empty()) cyc.push_back(std::stoi(tok));
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw Error(ErrorCode::ParseError, "bad point in cycle '" + body + "'");
                cyc.push_back(c - '0');
            }
        }
        for (int pt : cyc) {
            if (pt < 1 || static_cast<std::size_t>(pt) > degree || moved[pt - 1])
                throw Error(ErrorCode::ParseError, "point out of range or repeated in '" + cycles + "'");
            moved[pt - 1] = true;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    return from_images(img);
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    Permutation r;
    r.images_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x) r.images_[x] = images_[static_cast<std::size_t>(q.images_[x])];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x) r.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < degree(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> seen(degree(), false);
    for (std::size_t x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        std::size_t len = 0;
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
            seen[y] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    const bool wide = degree() > 9;
    for (std::size_t x = 0; x < degree(); ++x) {
        if (seen[x] || images_[x] == static_cast<int>(x)) continue;
        os << "(";
        bool first = true;
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
            seen[y] = true;
            if (!first && wide) os << ",";
            os << y + 1;
            first = false;
        }
        os << ")";
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (int v : p.zero_based()) h = h * 31u + static_cast<std::size_t>(v);
    return h;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_transitive() const { return orbits(*this).size() <= 1; }

PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap, std::size_t degree) {
    PermGroup g;
    g.degree_ = gens.empty() ? degree : gens.front().degree();
    for (const auto& p : gens)
        if (p.degree() != g.degree_) throw Error(ErrorCode::DegreeMismatch, "generators act on different point sets");
    g.generators_ = gens;

    const Permutation id(g.degree_);
    std::unordered_set<Permutation, PermutationHash> seen{id};
    std::deque<Permutation> queue{id};
    std::vector<Permutation> elems{id};
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : gens) {
            Permutation y = s * x;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw Error(ErrorCode::ClosureCapExceeded,
                                "group order exceeds cap " + std::to_string(cap));
                elems.push_back(y);
                queue.push_back(std::move(y));
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    g.elements_ = std::move(elems);
    return g;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.degree(), false);
    for (std::size_t x = 0; x < g.degree(); ++x) {
        if (seen[x]) continue;
        std::vector<int> orbit{static_cast<int>(x)};
        seen[x] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& s : g.generators()) {
                const int y = s.zero_based()[static_cast<std::size_t>(orbit[k])];
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    orbit.push_back(y);
                }
            }
        for (int& v : orbit) ++v;
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

PointSet apply(const Permutation& p, const PointSet& s) {
    PointSet r;
    r.reserve(s.size());
    for (int v : s) {
        if (v < 1 || static_cast<std::size_t>(v) > p.degree())
            throw Error(ErrorCode::DegreeMismatch, "point outside the permutation domain");
        r.push_back(p(v));
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<std::vector<PointSet>> orbits(const PermGroup& g, const std::vector<PointSet>& domain) {
    std::map<PointSet, std::size_t> index;
    for (auto s : domain) {
        std::sort(s.begin(), s.end());
        index.emplace(s, index.size());
    }
    std::vector<bool> seen(index.size(), false);
    std::vector<std::vector<PointSet>> out;
    for (const auto& [start, idx] : index) {
        if (seen[idx]) continue;
        std::vector<PointSet> orbit{start};
        seen[idx] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& s : g.generators()) {
                PointSet img = sevlab::apply(s, orbit[k]);
                auto it = index.find(img);
                if (it == index.end()) throw Error(ErrorCode::DegreeMismatch, "domain is not closed under the group");
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    orbit.push_back(std::move(img));
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sevlab
