#include "exactq/qsim.h"

#include <bit>
#include <cmath>
#include <string>

namespace exactq {

namespace {

UnitaryMatrix hadamard_pair() {
    const Rational h(1, 2);
    std::vector<ExactScalar> e;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            // (1/2)·(-1)^{r·c} over the two register bits.
            int parity = std::popcount(static_cast<unsigned>(r & c)) & 1;
            e.emplace_back(parity ? Rational(-h) : h);
        }
    }
    return UnitaryMatrix(4, std::move(e));
}

QueryLayer query(std::initializer_list<int> vars) {
    QueryLayer q;
    for (int v : vars) {
        q.assignment.emplace_back(v);
    }
    return q;
}

void check_arity(const QueryAlgorithm &alg, const InputAssignment &x) {
    if (x.n() != alg.n()) {
        throw std::invalid_argument(
            "input has " + std::to_string(x.n()) + " bits, algorithm expects " + std::to_string(alg.n()));
    }
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(size_t dim, std::vector<ExactScalar> entries) : dim_(dim) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("matrix needs dim*dim entries");
    }
    approx_.reserve(entries.size());
    for (const auto &e : entries) {
        approx_.push_back(e.to_double());
    }
    exact_ = std::move(entries);
}

UnitaryMatrix UnitaryMatrix::from_doubles(size_t dim, std::vector<double> entries) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("matrix needs dim*dim entries");
    }
    UnitaryMatrix m;
    m.dim_ = dim;
    m.approx_ = std::move(entries);
    return m;
}

UnitaryMatrix UnitaryMatrix::identity(size_t dim) {
    std::vector<ExactScalar> e(dim * dim);
    for (size_t i = 0; i < dim; i++) {
        e[i * dim + i] = ExactScalar(1);
    }
    return UnitaryMatrix(dim, std::move(e));
}

const ExactScalar &UnitaryMatrix::at(size_t row, size_t col) const {
    if (!exact_) {
        throw std::logic_error("matrix has no exact entries");
    }
    return (*exact_)[row * dim_ + col];
}

bool check_unitary(const UnitaryMatrix &m, double tolerance) {
    const size_t d = m.dim();
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i; j < d; j++) {
            if (m.is_exact()) {
                ExactScalar dot;
                for (size_t k = 0; k < d; k++) {
                    dot += m.at(k, i) * m.at(k, j);
                }
                if (dot != ExactScalar(i == j ? 1 : 0)) {
                    return false;
                }
            } else {
                double dot = 0;
                for (size_t k = 0; k < d; k++) {
                    dot += m.approx(k, i) * m.approx(k, j);
                }
                if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tolerance) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> QueryLayer::signs(const InputAssignment &x) const {
    std::vector<int> s(assignment.size(), 1);
    for (size_t i = 0; i < assignment.size(); i++) {
        if (assignment[i] && x[*assignment[i]]) {
            s[i] = -1;
        }
    }
    return s;
}

QueryAlgorithm::QueryAlgorithm(int dim, int n, std::vector<Layer> layers, std::vector<uint8_t> outputs)
    : dim_(dim), n_(n), layers_(std::move(layers)), outputs_(std::move(outputs)) {
    if (dim < 1 || n < 1) {
        throw std::invalid_argument("algorithm needs dim >= 1 and n >= 1");
    }
    for (const auto &layer : layers_) {
        if (const auto *u = std::get_if<UnitaryMatrix>(&layer)) {
            if (u->dim() != static_cast<size_t>(dim)) {
                throw std::invalid_argument("unitary layer dimension does not match algorithm dimension");
            }
        } else {
            const auto &q = std::get<QueryLayer>(layer);
            if (q.dim() != static_cast<size_t>(dim)) {
                throw std::invalid_argument("query layer dimension does not match algorithm dimension");
            }
            for (const auto &v : q.assignment) {
                if (v && (*v < 0 || *v >= n)) {
                    throw std::invalid_argument("query assigns variable " + std::to_string(*v) + " outside 0.." +
                                                std::to_string(n - 1));
                }
            }
        }
    }
    if (outputs_.size() != static_cast<size_t>(dim)) {
        throw std::invalid_argument("need one output label per basis state");
    }
    for (auto o : outputs_) {
        if (o > 1) {
            throw std::invalid_argument("output labels must be 0 or 1");
        }
    }
}

int QueryAlgorithm::query_count() const {
    int c = 0;
    for (const auto &layer : layers_) {
        c += std::holds_alternative<QueryLayer>(layer);
    }
    return c;
}

bool QueryAlgorithm::exact_arithmetic() const {
    for (const auto &layer : layers_) {
        if (const auto *u = std::get_if<UnitaryMatrix>(&layer); u && !u->is_exact()) {
            return false;
        }
    }
    return true;
}

QueryAlgorithm QueryAlgorithm::with_outputs(std::vector<uint8_t> outputs) const {
    return QueryAlgorithm(dim_, n_, layers_, std::move(outputs));
}

int FinalState::outcome() const {
    return (outcome_prob[1] - outcome_prob[0]).sign() > 0 ? 1 : 0;
}

int FloatFinalState::outcome() const {
    return outcome_prob[1] > outcome_prob[0] ? 1 : 0;
}

FinalState simulate(const QueryAlgorithm &alg, const InputAssignment &x, bool trace) {
    check_arity(alg, x);
    if (!alg.exact_arithmetic()) {
        throw std::domain_error("algorithm has entries outside Q(sqrt2); use floating-point simulation");
    }
    const size_t d = alg.dim();
    FinalState s;
    s.amplitudes.assign(d, ExactScalar());
    s.amplitudes[0] = ExactScalar(1);
    for (const auto &layer : alg.layers()) {
        if (const auto *u = std::get_if<UnitaryMatrix>(&layer)) {
            std::vector<ExactScalar> next(d);
            for (size_t r = 0; r < d; r++) {
                for (size_t c = 0; c < d; c++) {
                    const ExactScalar &m = u->at(r, c);
                    if (!m.is_zero() && !s.amplitudes[c].is_zero()) {
                        next[r] += m * s.amplitudes[c];
                    }
                }
            }
            s.amplitudes = std::move(next);
        } else {
            auto signs = std::get<QueryLayer>(layer).signs(x);
            for (size_t i = 0; i < d; i++) {
                if (signs[i] < 0) {
                    s.amplitudes[i] = -s.amplitudes[i];
                }
            }
        }
        if (trace) {
            s.trace.push_back(s.amplitudes);
        }
    }
    for (size_t i = 0; i < d; i++) {
        s.outcome_prob[alg.outputs()[i]] += s.amplitudes[i].squared();
    }
    return s;
}

FloatFinalState simulate_float(const QueryAlgorithm &alg, const InputAssignment &x, bool trace) {
    check_arity(alg, x);
    const size_t d = alg.dim();
    FloatFinalState s;
    s.amplitudes.assign(d, 0.0);
    s.amplitudes[0] = 1.0;
    for (const auto &layer : alg.layers()) {
        if (const auto *u = std::get_if<UnitaryMatrix>(&layer)) {
            std::vector<double> next(d, 0.0);
            for (size_t r = 0; r < d; r++) {
                for (size_t c = 0; c < d; c++) {
                    next[r] += u->approx(r, c) * s.amplitudes[c];
                }
            }
            s.amplitudes = std::move(next);
        } else {
            auto signs = std::get<QueryLayer>(layer).signs(x);
            for (size_t i = 0; i < d; i++) {
                s.amplitudes[i] *= signs[i];
            }
        }
        if (trace) {
            s.trace.push_back(s.amplitudes);
        }
    }
    for (size_t i = 0; i < d; i++) {
        s.outcome_prob[alg.outputs()[i]] += s.amplitudes[i] * s.amplitudes[i];
    }
    return s;
}

bool is_exact(const QueryAlgorithm &alg, const BooleanFunction &f) {
    if (alg.n() != f.n()) {
        throw std::invalid_argument("algorithm and function arities differ");
    }
    for (uint64_t i = 0; i < f.size(); i++) {
        auto s = simulate(alg, InputAssignment::from_index(f.n(), i));
        if (s.outcome_prob[f.at(i)] != ExactScalar(1)) {
            return false;
        }
    }
    return true;
}

bool is_exact_float(const QueryAlgorithm &alg, const BooleanFunction &f, double tolerance) {
    if (alg.n() != f.n()) {
        throw std::invalid_argument("algorithm and function arities differ");
    }
    for (uint64_t i = 0; i < f.size(); i++) {
        auto s = simulate_float(alg, InputAssignment::from_index(f.n(), i));
        if (std::abs(s.outcome_prob[f.at(i)] - 1.0) > tolerance) {
            return false;
        }
    }
    return true;
}

std::optional<int> deterministic_output(const FinalState &s) {
    std::optional<int> hit;
    for (size_t i = 0; i < s.amplitudes.size(); i++) {
        ExactScalar p = s.amplitudes[i].squared();
        if (p == ExactScalar(1)) {
            hit = static_cast<int>(i);
        } else if (!p.is_zero()) {
            return std::nullopt;
        }
    }
    return hit;
}

QueryAlgorithm a1() {
    UnitaryMatrix u0 = hadamard_pair();
    // Identity on q1 and q4, a 1/√2 rotation-reflection on q2, q3.
    const ExactScalar r = ExactScalar::inv_sqrt2();
    const ExactScalar z;
    const ExactScalar one(1);
    UnitaryMatrix u1(4, {one, z, z, z,  //
                         z, r, r, z,    //
                         z, r, -r, z,   //
                         z, z, z, one});
    std::vector<Layer> layers{u0, query({0, 1, 0, 1}), u1, query({2, 0, 1, 2}), u1, u0};
    return QueryAlgorithm(4, 3, std::move(layers), {0, 0, 0, 1});
}

QueryAlgorithm a2() {
    UnitaryMatrix hh = hadamard_pair();
    // First register bit picks x1 or x2, second picks x3 or x4.
    std::vector<Layer> layers{hh, query({0, 0, 1, 1}), query({2, 3, 2, 3}), hh};
    return QueryAlgorithm(4, 4, std::move(layers), {0, 0, 0, 1});
}

ComplementClassMap classify_final(const QueryAlgorithm &alg) {
    const int n = alg.n();
    if (n > 20) {
        throw std::length_error("classification enumerates 2^n inputs; n too large");
    }
    const uint64_t half = uint64_t{1} << (n - 1);
    const uint64_t all = (uint64_t{1} << n) - 1;
    ComplementClassMap m;
    std::vector<int> owner(alg.dim(), -1);
    m.injective = true;
    for (uint64_t rep = 0; rep < half; rep++) {
        int landed[2];
        uint64_t members[2] = {rep, rep ^ all};
        for (int k = 0; k < 2; k++) {
            auto x = InputAssignment::from_index(n, members[k]);
            auto out = deterministic_output(simulate(alg, x));
            if (!out) {
                throw VerificationError("final state for input " + x.str() + " is not a basis state");
            }
            landed[k] = *out;
        }
        if (landed[0] != landed[1]) {
            throw VerificationError("input " + InputAssignment::from_index(n, rep).str() +
                                    " and its complement reach different outputs");
        }
        if (owner[landed[0]] >= 0) {
            m.injective = false;
        }
        owner[landed[0]] = static_cast<int>(rep);
        m.representatives.push_back(rep);
        m.final_index.push_back(landed[0]);
    }
    return m;
}

QueryAlgorithm relabel_outputs(const QueryAlgorithm &alg, const BooleanFunction &f) {
    if (alg.n() != f.n()) {
        throw std::invalid_argument("algorithm and function arities differ");
    }
    if (!complement_symmetric(f)) {
        throw std::invalid_argument("relabeling requires f(x) = f(complement of x)");
    }
    auto classes = classify_final(alg);
    std::vector<int> label(alg.dim(), -1);
    for (size_t c = 0; c < classes.representatives.size(); c++) {
        int idx = classes.final_index[c];
        int want = f.at(classes.representatives[c]);
        if (label[idx] >= 0 && label[idx] != want) {
            throw VerificationError("classes sharing output " + std::to_string(idx) + " disagree on f");
        }
        label[idx] = want;
    }
    std::vector<uint8_t> outputs(alg.dim());
    for (int i = 0; i < alg.dim(); i++) {
        // Unreached outputs keep their old label.
        outputs[i] = label[i] >= 0 ? static_cast<uint8_t>(label[i]) : alg.outputs()[i];
    }
    return alg.with_outputs(std::move(outputs));
}

}  // namespace exactq
