#include "ulam/game.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "ulam/combinatorics.hpp"

namespace ulam {

namespace {

ChipSet universe(const GameParams& params) {
    return params.m == 64 ? ~ChipSet(0) : (ChipSet(1) << params.m) - 1;
}

void check_params(const GameParams& params) {
    if (params.m < 1)
        throw std::invalid_argument("game: m must be >= 1");
    if (params.m > 64)
        throw std::invalid_argument("game: chip sets are 64-bit masks, m must be <= 64");
    if (params.t < 0 || params.n < 0)
        throw std::invalid_argument("game: t and n must be >= 0");
}

std::vector<int> chips_of(ChipSet s) {
    std::vector<int> out;
    while (s) {
        int c = std::countr_zero(s);
        out.push_back(c);
        s &= s - 1;
    }
    return out;
}

std::string chip_list(ChipSet s) {
    std::string out = "[";
    bool first = true;
    for (int c : chips_of(s)) {
        if (!first)
            out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "]";
}

}  // namespace

int SpencerState::surviving_count() const {
    return std::popcount(surviving());
}

SpencerState initial_state(const GameParams& params) {
    check_params(params);
    SpencerState s;
    s.bins.assign(static_cast<size_t>(params.t) + 1, 0);
    s.bins[0] = universe(params);
    return s;
}

SpencerState apply_answer(const GameParams& params, const SpencerState& state,
                          const Question& q, Answer a) {
    if (state.step >= params.n)
        throw std::invalid_argument("apply_answer: question budget exhausted");
    if (q.chips & ~universe(params))
        throw std::invalid_argument("apply_answer: question references chips >= m");
    const auto& v = state.bins;
    int t = params.t;
    SpencerState next;
    next.bins.assign(v.size(), 0);
    next.lost = state.lost;
    next.step = state.step + 1;
    if (a == Answer::No) {
        next.bins[0] = v[0] & ~q.chips;
        for (int i = 1; i <= t; ++i)
            next.bins[static_cast<size_t>(i)] =
                (v[static_cast<size_t>(i)] & ~q.chips) |
                (v[static_cast<size_t>(i) - 1] & q.chips);
        next.lost |= v[static_cast<size_t>(t)] & q.chips;
    } else {
        next.bins[0] = v[0] & q.chips;
        for (int i = 1; i <= t; ++i)
            next.bins[static_cast<size_t>(i)] =
                (v[static_cast<size_t>(i)] & q.chips) |
                (v[static_cast<size_t>(i) - 1] & ~q.chips);
        next.lost |= v[static_cast<size_t>(t)] & ~q.chips;
    }
    return next;
}

ExactInt spencer_weight(const GameParams& params, const SpencerState& state) {
    if (state.step > params.n)
        throw std::invalid_argument("spencer_weight: step exceeds budget");
    ExactInt w(0);
    for (int i = 0; i <= params.t; ++i) {
        int count = std::popcount(state.bins[static_cast<size_t>(i)]);
        if (count)
            w += ExactInt(count) *
                 sphere_volume(params.n - state.step, params.t - i);
    }
    return w;
}

std::pair<ExactInt, ExactInt> weight_split(const GameParams& params,
                                           const SpencerState& state,
                                           const Question& q) {
    ExactInt wy = spencer_weight(params, apply_answer(params, state, q, Answer::Yes));
    ExactInt wn = spencer_weight(params, apply_answer(params, state, q, Answer::No));
    return {wy, wn};
}

BalancedQuestion questioner_balanced(const GameParams& params,
                                     const SpencerState& state,
                                     int exhaustive_cap) {
    if (state.step >= params.n)
        throw std::invalid_argument("questioner_balanced: no questions remain");
    std::vector<int> present = chips_of(state.surviving());
    if (present.size() <= 1)
        return {Question{0}, false};

    if (static_cast<int>(present.size()) <= exhaustive_cap) {
        // Complements mirror the split, so pin the first surviving chip
        // outside A and enumerate subsets of the rest.
        size_t k = present.size() - 1;
        Question best{0};
        ExactInt best_max(0);
        bool have_best = false;
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k); ++bits) {
            Question q{0};
            for (size_t j = 0; j < k; ++j)
                if (bits & (std::uint64_t(1) << j))
                    q.chips |= ChipSet(1) << present[j + 1];
            auto [wy, wn] = weight_split(params, state, q);
            ExactInt worst = wy > wn ? wy : wn;
            if (!have_best || worst < best_max) {
                best = q;
                best_max = worst;
                have_best = true;
            }
        }
        return {best, false};
    }

    // Greedy fallback: each chip adds a fixed amount to the Yes-child weight
    // depending on which side of A it lands; walk chips by descending spread
    // and keep the Yes weight as close to half the total as possible.
    int nj = params.n - state.step - 1;
    ExactInt total = spencer_weight(params, state);
    ExactInt w_yes(0);
    std::vector<std::pair<ExactInt, int>> spread;  // (a_c - b_c, chip)
    for (int i = 0; i <= params.t; ++i) {
        ExactInt stay = sphere_volume(nj, params.t - i);
        ExactInt shift = (params.t - i - 1 >= 0)
                             ? sphere_volume(nj, params.t - i - 1)
                             : ExactInt(0);
        for (int c : chips_of(state.bins[static_cast<size_t>(i)])) {
            w_yes += shift;
            spread.emplace_back(stay - shift, c);
        }
    }
    std::sort(spread.begin(), spread.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    Question q{0};
    ExactInt two(2);
    for (const auto& [delta, c] : spread) {
        ExactInt with = w_yes + delta;
        // distance of 2*w_yes from total, before vs after taking the chip
        ExactInt d_without = two * w_yes > total ? two * w_yes - total : total - two * w_yes;
        ExactInt d_with = two * with > total ? two * with - total : total - two * with;
        if (d_with < d_without) {
            q.chips |= ChipSet(1) << c;
            w_yes = with;
        }
    }
    return {q, true};
}

Answer adversary_max_weight(const GameParams& params, const SpencerState& state,
                            const Question& q) {
    SpencerState yes = apply_answer(params, state, q, Answer::Yes);
    SpencerState no = apply_answer(params, state, q, Answer::No);
    ExactInt wy = spencer_weight(params, yes);
    ExactInt wn = spencer_weight(params, no);
    if (wy > wn)
        return Answer::Yes;
    if (wn > wy)
        return Answer::No;
    // Weight tie: never wipe out the last chip if the other side keeps one.
    if (no.surviving_count() == 0 && yes.surviving_count() > 0)
        return Answer::Yes;
    return Answer::No;
}

QuestionStrategy balanced_questioner_strategy(int exhaustive_cap) {
    return [exhaustive_cap](const GameParams& p, const SpencerState& s) {
        return questioner_balanced(p, s, exhaustive_cap);
    };
}

AnswerStrategy max_weight_answerer_strategy() {
    return [](const GameParams& p, const SpencerState& s, const Question& q) {
        return adversary_max_weight(p, s, q);
    };
}

GameTrace run_game(const GameParams& params, const QuestionSource& questioner,
                   const AnswerSource& answerer) {
    check_params(params);
    int steps = params.n;
    if (const auto* qs = std::get_if<std::vector<Question>>(&questioner)) {
        if (static_cast<int>(qs->size()) > params.n)
            throw std::invalid_argument("run_game: question script longer than budget");
        steps = std::min(steps, static_cast<int>(qs->size()));
    }
    if (const auto* as = std::get_if<std::vector<Answer>>(&answerer)) {
        if (static_cast<int>(as->size()) > params.n)
            throw std::invalid_argument("run_game: answer script longer than budget");
        steps = std::min(steps, static_cast<int>(as->size()));
    }

    GameTrace trace;
    trace.params = params;
    SpencerState state = initial_state(params);
    for (int i = 0; i < steps; ++i) {
        Question q;
        bool heuristic = false;
        if (const auto* qs = std::get_if<std::vector<Question>>(&questioner)) {
            q = (*qs)[static_cast<size_t>(i)];
        } else {
            BalancedQuestion bq =
                std::get<QuestionStrategy>(questioner)(params, state);
            q = bq.question;
            heuristic = bq.heuristic;
        }
        Answer a;
        if (const auto* as = std::get_if<std::vector<Answer>>(&answerer))
            a = (*as)[static_cast<size_t>(i)];
        else
            a = std::get<AnswerStrategy>(answerer)(params, state, q);
        state = apply_answer(params, state, q, a);
        trace.steps.push_back(
            {q, a, state, spencer_weight(params, state), heuristic});
    }
    trace.survivors = state.surviving();
    trace.conclusive = state.surviving_count() == 1;
    return trace;
}

std::string format_trace(const GameTrace& trace) {
    std::ostringstream out;
    out << "# ulam-trace v1\n";
    out << "# m=" << trace.params.m << " t=" << trace.params.t
        << " n=" << trace.params.n << "\n";
    int i = 1;
    for (const auto& step : trace.steps) {
        out << "step=" << i++ << " A=" << chip_list(step.question.chips)
            << " answer=" << (step.answer == Answer::Yes ? 'Y' : 'N')
            << " bins=[";
        for (size_t b = 0; b < step.state.bins.size(); ++b) {
            if (b)
                out << '|';
            std::string s = chip_list(step.state.bins[b]);
            out << s.substr(1, s.size() - 2);
        }
        out << "] lost=" << chip_list(step.state.lost)
            << " weight=" << step.weight.str();
        if (step.heuristic_question)
            out << " heuristic=1";
        out << "\n";
    }
    if (trace.conclusive)
        out << "outcome=conclusive chip=" << std::countr_zero(trace.survivors)
            << "\n";
    else
        out << "outcome=inconclusive survivors=" << chip_list(trace.survivors)
            << "\n";
    return out.str();
}

GameScript parse_script(const std::string& text) {
    GameScript script;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        std::string field;
        Question q{0};
        bool have_q = false;
        bool have_a = false;
        Answer a = Answer::No;
        while (fields >> field) {
            if (field.rfind("A=", 0) == 0) {
                std::string body = field.substr(2);
                if (!body.empty() && body != "-") {
                    std::istringstream cs(body);
                    std::string tok;
                    while (std::getline(cs, tok, ',')) {
                        int c = std::stoi(tok);
                        if (c < 0 || c >= 64)
                            throw std::invalid_argument(
                                "script line " + std::to_string(lineno) +
                                ": chip index out of range");
                        q.chips |= ChipSet(1) << c;
                    }
                }
                have_q = true;
            } else if (field.rfind("answer=", 0) == 0) {
                std::string body = field.substr(7);
                if (body == "Y" || body == "y" || body == "1")
                    a = Answer::Yes;
                else if (body == "N" || body == "n" || body == "0")
                    a = Answer::No;
                else
                    throw std::invalid_argument("script line " +
                                                std::to_string(lineno) +
                                                ": answer must be Y or N");
                have_a = true;
            } else {
                throw std::invalid_argument("script line " +
                                            std::to_string(lineno) +
                                            ": unknown field '" + field + "'");
            }
        }
        if (!have_q)
            throw std::invalid_argument("script line " + std::to_string(lineno) +
                                        ": missing A= field");
        if (!script.questions.empty() &&
            have_a != (script.answers.size() == script.questions.size()))
            throw std::invalid_argument(
                "script: answers must be given on every line or none");
        script.questions.push_back(q);
        if (have_a)
            script.answers.push_back(a);
    }
    return script;
}

}  // namespace ulam
