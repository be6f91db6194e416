#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "manin/errors.hpp"
#include "manin/lattice.hpp"
#include "manin/linalg.hpp"
#include "manin/parallel.hpp"

namespace manin {

// Element of the free commutative monoid on the generators: one exponent per
// generator.
using Word = std::vector<Int>;

// Finitely presented graded commutative monoid together with its class
// homomorphism into a curve lattice. Every relation must be homogeneous for
// the grading and must map to a vector identity under the class map; the
// grading makes each degree class of words finite, which is what keeps the
// word problem decidable by plain search.
class PresentedCommutativeMonoid {
public:
    static PresentedCommutativeMonoid create(std::string name,
                                             std::vector<std::string> generator_labels,
                                             std::vector<Int> degrees,
                                             std::vector<std::pair<Word, Word>> relations,
                                             std::vector<LatticeVector> generator_classes) {
        PresentedCommutativeMonoid m;
        m.name_ = std::move(name);
        m.labels_ = std::move(generator_labels);
        m.degrees_ = std::move(degrees);
        m.relations_ = std::move(relations);
        m.classes_ = std::move(generator_classes);

        std::size_t k = m.labels_.size();
        if (m.degrees_.size() != k || m.classes_.size() != k)
            throw model_error("presentation arrays disagree on the generator count");
        for (Int d : m.degrees_)
            if (d <= 0) throw model_error("generator degrees must be positive");
        for (const auto& [lhs, rhs] : m.relations_) {
            if (lhs.size() != k || rhs.size() != k)
                throw model_error("relation exponent vector of wrong length");
            for (std::size_t i = 0; i < k; ++i)
                if (lhs[i] < 0 || rhs[i] < 0) throw model_error("negative relation exponent");
            if (m.word_degree(lhs) != m.word_degree(rhs))
                throw model_error("relation is not degree-homogeneous");
            if (!(m.word_class(lhs) == m.word_class(rhs)))
                throw model_error("relation does not map to an identity under the class map");
        }

        // grading functional on the curve lattice: g . class_i = deg_i.
        // Its existence bounds every fiber of the class map.
        if (k > 0) {
            QMat rows;
            QVec rhs;
            for (std::size_t i = 0; i < k; ++i) {
                rows.push_back(to_qvec(m.classes_[i].coords));
                rhs.push_back(rational_from_int(m.degrees_[i]));
            }
            m.grading_ = solve_linear(rows, rhs);
        }
        return m;
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    const std::vector<Int>& degrees() const { return degrees_; }
    const std::vector<std::pair<Word, Word>>& relations() const { return relations_; }
    const std::vector<LatticeVector>& generator_classes() const { return classes_; }
    std::size_t generator_count() const { return labels_.size(); }

    Int word_degree(const Word& w) const {
        Int d = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            d = checked_add(d, checked_mul(w[i], degrees_[i]));
        return d;
    }

    LatticeVector word_class(const Word& w) const {
        int rank = classes_.empty() ? 0 : classes_[0].rank();
        LatticeVector acc(Space::Curve, std::vector<Int>(rank, 0));
        for (std::size_t i = 0; i < w.size(); ++i) acc = acc + w[i] * classes_[i];
        return acc;
    }

    // Degree of a curve class under the grading functional, if the class map
    // admits one and the value is a nonnegative integer.
    std::optional<Int> class_degree(const LatticeVector& cls) const {
        if (!grading_) throw model_error("class map admits no grading functional");
        Rational d(0);
        for (std::size_t c = 0; c < cls.coords.size(); ++c)
            d += (*grading_)[c] * rational_from_int(cls.coords[c]);
        if (!d.is_integer() || d.sign() < 0) return std::nullopt;
        return d.numerator().to_int64();
    }

    // All words of the given degree, in lexicographic order.
    std::vector<Word> words_of_degree(Int degree) const {
        std::vector<Word> out;
        Word current(generator_count(), 0);
        enumerate_words(degree, 0, current, out);
        return out;
    }

    // Words adjacent to w: one relation applied in either direction.
    std::vector<Word> rewrites(const Word& w) const {
        std::vector<Word> out;
        auto apply = [&](const Word& from, const Word& to) {
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] < from[i]) return;
            Word next = w;
            for (std::size_t i = 0; i < w.size(); ++i) next[i] = next[i] - from[i] + to[i];
            out.push_back(std::move(next));
        };
        for (const auto& [lhs, rhs] : relations_) {
            apply(lhs, rhs);
            apply(rhs, lhs);
        }
        return out;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Int> degrees_;
    std::vector<std::pair<Word, Word>> relations_;
    std::vector<LatticeVector> classes_;
    std::optional<QVec> grading_;

    void enumerate_words(Int remaining, std::size_t index, Word& current,
                         std::vector<Word>& out) const {
        if (index == generator_count()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (Int e = 0; e * degrees_[index] <= remaining; ++e) {
            current[index] = e;
            enumerate_words(remaining - e * degrees_[index], index + 1, current, out);
        }
        current[index] = 0;
    }
};

// Word-problem oracle: breadth-first closure of a word under the relations,
// restricted to its (finite) degree class. Closures are memoized up to a
// word cap; past the cap the checker recomputes rather than answer wrong.
class CongruenceChecker {
public:
    explicit CongruenceChecker(const PresentedCommutativeMonoid& m, std::size_t word_cap = 1 << 20)
        : monoid_(m), cap_(word_cap) {}

    bool congruent(const Word& u, const Word& v) {
        if (u.size() != monoid_.generator_count() || v.size() != monoid_.generator_count())
            throw input_error("word of wrong length for this presentation");
        if (monoid_.word_degree(u) != monoid_.word_degree(v)) return false;
        if (u == v) return true;
        const std::set<Word>* closure = find_cached(u);
        if (closure) return closure->count(v) > 0;
        std::set<Word> fresh = compute_closure(u);
        bool answer = fresh.count(v) > 0;
        if (cached_words_ + fresh.size() <= cap_) {
            cached_words_ += fresh.size();
            Word canonical = *fresh.begin();
            cache_.emplace(std::move(canonical), std::move(fresh));
        }
        return answer;
    }

private:
    const PresentedCommutativeMonoid& monoid_;
    std::size_t cap_;
    std::size_t cached_words_ = 0;
    std::map<Word, std::set<Word>> cache_; // canonical representative -> component

    const std::set<Word>* find_cached(const Word& u) const {
        for (const auto& [canonical, component] : cache_) {
            if (monoid_.word_degree(canonical) != monoid_.word_degree(u)) continue;
            if (component.count(u)) return &component;
        }
        return nullptr;
    }

    std::set<Word> compute_closure(const Word& u) const {
        std::set<Word> seen{u};
        std::deque<Word> queue{u};
        while (!queue.empty()) {
            Word w = std::move(queue.front());
            queue.pop_front();
            for (Word& next : monoid_.rewrites(w))
                if (seen.insert(next).second) queue.push_back(std::move(next));
        }
        return seen;
    }
};

// One-shot word problem. True iff v is reachable from u by relation
// substitutions staying inside the free monoid.
inline bool congruent(const PresentedCommutativeMonoid& m, const Word& u, const Word& v) {
    CongruenceChecker checker(m);
    return checker.congruent(u, v);
}

// All exponent vectors mapping to the given curve class, lexicographically
// sorted. Bounded knapsack over the degree grading.
inline std::vector<Word> factorizations(const PresentedCommutativeMonoid& m,
                                        const LatticeVector& cls) {
    std::optional<Int> degree = m.class_degree(cls);
    if (!degree) return {};
    std::vector<Word> out;
    for (Word& w : m.words_of_degree(*degree))
        if (m.word_class(w) == cls) out.push_back(std::move(w));
    return out;
}

struct PresentationViolation {
    LatticeVector cls;
    Int degree = 0;
    Word left, right; // two factorizations of cls that are not congruent
};

struct PresentationReport {
    std::string monoid;
    Int d_max = 0;
    Int words_checked = 0;
    Int classes_checked = 0;
    Int soundness_walks = 0;
    bool soundness_ok = true;
    std::vector<PresentationViolation> violations;

    bool passed() const { return violations.empty() && soundness_ok; }
};

namespace detail {

struct DegreeAudit {
    Int words = 0;
    Int classes = 0;
    std::vector<PresentationViolation> violations;
};

inline DegreeAudit audit_degree(const PresentedCommutativeMonoid& m, Int degree) {
    DegreeAudit audit;
    std::vector<Word> words = m.words_of_degree(degree);
    audit.words = static_cast<Int>(words.size());
    if (words.empty()) return audit;

    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<std::size_t> parent(words.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < words.size(); ++i)
        for (const Word& next : m.rewrites(words[i])) {
            auto it = index.find(next);
            if (it == index.end())
                throw model_error("rewrite left the degree class; inhomogeneous relation?");
            std::size_t a = find(i), b = find(it->second);
            if (a != b) parent[a] = b;
        }

    // group components by image class; more than one component per class is
    // a completeness violation
    std::map<std::vector<Int>, std::map<std::size_t, Word>> by_class;
    for (std::size_t i = 0; i < words.size(); ++i) {
        LatticeVector cls = m.word_class(words[i]);
        auto& roots = by_class[cls.coords];
        std::size_t root = find(i);
        auto it = roots.find(root);
        if (it == roots.end() || words[i] < it->second) roots[root] = words[i];
    }
    audit.classes = static_cast<Int>(by_class.size());
    for (const auto& [coords, roots] : by_class) {
        if (roots.size() <= 1) continue;
        std::vector<Word> reps;
        for (const auto& [root, rep] : roots) reps.push_back(rep);
        std::sort(reps.begin(), reps.end());
        PresentationViolation v;
        v.cls = LatticeVector(Space::Curve, coords);
        v.degree = degree;
        v.left = reps[0];
        v.right = reps[1];
        audit.violations.push_back(std::move(v));
    }
    return audit;
}

} // namespace detail

// Completeness check of a presentation against its class map: for every
// class of degree <= d_max, all factorizations must be identified by the
// relations. Soundness (congruent words share a class) is structural but is
// re-verified on random rewrite walks.
inline PresentationReport verify_presentation(const PresentedCommutativeMonoid& m, Int d_max,
                                              int jobs = 1) {
    PresentationReport report;
    report.monoid = m.name();
    report.d_max = d_max;
    if (d_max < 0) throw input_error("verify_presentation needs a nonnegative degree bound");

    std::vector<Int> degrees;
    for (Int d = 1; d <= d_max; ++d) degrees.push_back(d);
    std::vector<detail::DegreeAudit> audits = parallel_map<detail::DegreeAudit>(
        degrees.size(), jobs, [&](std::size_t i) { return detail::audit_degree(m, degrees[i]); });
    for (auto& audit : audits) {
        report.words_checked += audit.words;
        report.classes_checked += audit.classes;
        for (auto& v : audit.violations) report.violations.push_back(std::move(v));
    }

    // random rewrite walks: the image class must never move
    std::mt19937 rng(987654321u);
    std::size_t k = m.generator_count();
    for (int walk = 0; walk < 1000; ++walk) {
        Word w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<Int>(rng() % 4);
        LatticeVector cls = m.word_class(w);
        for (int step = 0; step < 25; ++step) {
            std::vector<Word> next = m.rewrites(w);
            if (next.empty()) break;
            w = next[rng() % next.size()];
            if (!(m.word_class(w) == cls)) {
                report.soundness_ok = false;
                break;
            }
        }
        ++report.soundness_walks;
        if (!report.soundness_ok) break;
    }
    return report;
}

} // namespace manin
